#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "saxl/limits.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

/// Set of elements of a fixed group, stored by base image (see
/// PermGroup::element_key). Keys pack into 64 bits when degree^|base| fits,
/// otherwise they are kept as byte strings.
class ElementKeySet {
 public:
  explicit ElementKeySet(const PermGroup& group);

  /// The caller guarantees x lies in the group the set was made for.
  bool insert(const Permutation& x);
  bool contains(const Permutation& x) const;
  std::size_t size() const noexcept { return packed_ ? small_.size() : large_.size(); }

 private:
  std::uint64_t pack(const Permutation& x) const;
  std::string bytes(const Permutation& x) const;

  std::vector<Point> base_;
  std::uint64_t radix_ = 1;
  bool packed_ = true;
  std::unordered_set<std::uint64_t> small_;
  std::unordered_set<std::string> large_;
};

/// A G-class of elements of prime order.
struct ConjClassData {
  Permutation rep;
  std::uint64_t order = 0;
  std::uint64_t class_size = 0;
  /// Present only when class_size <= Limits::class_cap.
  std::shared_ptr<const ElementKeySet> class_elements;
};

/// Conjugacy class of x in G, materialised by closing {x} under conjugation
/// by the generators. Throws UnsupportedError past Limits::class_cap.
ConjClassData conjugacy_class(const PermGroup& group, const Permutation& x,
                              const Limits& limits = default_limits());

/// One entry per G-class of prime-order elements, ordered by element order
/// and then by first appearance in the element enumeration of G.
std::vector<ConjClassData> prime_order_class_reps(const PermGroup& group,
                                                  const Limits& limits = default_limits());

/// Order of the centraliser of x, counted over all elements of G.
std::uint64_t centraliser_order(const PermGroup& group, const Permutation& x,
                                const Limits& limits = default_limits());

}  // namespace saxl
