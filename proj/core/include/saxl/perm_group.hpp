#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "saxl/limits.hpp"
#include "saxl/permutation.hpp"
#include "saxl/rational.hpp"

namespace saxl {

/// Base and strong generating set with explicit transversals.
///
/// Level i stabilises base points 0..i-1 pointwise; `generators` generate that
/// stabiliser, `orbit` is the orbit of `base_point` under it and
/// `transversal[k]` maps `base_point` to `orbit[k]`.
struct StabLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> orbit_index;  // point -> position in orbit, or -1
  std::vector<Permutation> transversal;

  bool in_orbit(Point p) const { return orbit_index[p] >= 0; }
  const Permutation& rep(Point p) const { return transversal[static_cast<std::size_t>(orbit_index[p])]; }
};

class StabChain {
 public:
  StabChain() = default;

  /// Deterministic Schreier-Sims. The base starts with `base_prefix` and is
  /// extended with smallest moved points. When `known_order` is given the
  /// construction stops as soon as the chain reaches that order; a generated
  /// group of a different order still yields the exact chain.
  static StabChain build(std::size_t degree, std::span<const Permutation> generators,
                         std::span<const Point> base_prefix = {},
                         const std::optional<BigInt>& known_order = std::nullopt,
                         const Limits& limits = default_limits());

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const std::vector<StabLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Product of fundamental orbit lengths.
  BigInt order() const;

  /// Sifts g starting at `from_level`. Returns the residue and the level at
  /// which sifting stopped (depth() when every level was passed).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  /// Suffix chain starting at `first_level` (a chain for the pointwise
  /// stabiliser of the earlier base points).
  StabChain suffix(std::size_t first_level) const;

 private:
  std::size_t degree_ = 0;
  std::vector<StabLevel> levels_;

  friend class SchreierSimsBuilder;
};

/// A permutation group given by generators, with its stabiliser chain.
/// Immutable after construction; all queries are const and thread-safe.
class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 0);
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            const std::optional<BigInt>& known_order = std::nullopt,
            std::span<const Point> base_prefix = {}, const Limits& limits = default_limits());

  static PermGroup from_chain(StabChain chain);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const StabChain& chain() const noexcept { return *chain_; }
  std::vector<Point> base() const { return chain_->base(); }

  BigInt order() const { return chain_->order(); }
  /// Order as a 64-bit integer; throws UnsupportedError if it does not fit.
  std::uint64_t order_u64() const;
  bool is_trivial() const { return chain_->depth() == 0; }

  bool contains(const Permutation& g) const { return chain_->contains(g); }
  /// Exact subgroup test: every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;
  bool same_elements(const PermGroup& other) const;

  std::vector<Point> orbit(Point pt) const;
  /// Orbit partition of all points: orbit id per point, ids numbered by
  /// smallest point.
  std::vector<std::uint32_t> orbit_ids() const;

  PermGroup point_stabiliser(Point pt, const Limits& limits = default_limits()) const;
  PermGroup pointwise_stabiliser(std::span<const Point> pts, const Limits& limits = default_limits()) const;

  /// Same group with a chain whose base starts with `prefix`.
  PermGroup with_base_prefix(std::span<const Point> prefix, const Limits& limits = default_limits()) const;

  /// Base images of g, which identify g uniquely within the group.
  std::vector<Point> element_key(const Permutation& g) const;

  /// Visits every element once, in transversal-index order. Throws
  /// UnsupportedError when the order exceeds limits.group_cap. The callback
  /// returns false to stop early.
  void for_each_element(const std::function<bool(const Permutation&)>& visit,
                        const Limits& limits = default_limits()) const;
  std::vector<Permutation> elements(const Limits& limits = default_limits()) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabChain> chain_;
};

/// Builds the group generated by `gens` (all of the same degree).
PermGroup build_chain(std::size_t degree, std::vector<Permutation> gens,
                      const Limits& limits = default_limits());

}  // namespace saxl
