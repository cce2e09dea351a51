#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "saxl/limits.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

/// What find_subgroup should produce. Every search walks G in its element
/// enumeration order, so the result is the first match in that order.
struct SubgroupSpec {
  /// A Sylow p-subgroup, grown greedily from the trivial group.
  struct Sylow {
    std::uint64_t p;
  };
  /// N_G(K); K must have the same degree as G.
  struct Normaliser {
    PermGroup k;
  };
  /// The subgroup generated by the given elements of G.
  struct Closure {
    std::vector<Permutation> elements;
  };
  /// A subgroup <a, b> of the given order with |a| = order_a, |b| = order_b
  /// and, when set, |ab| = order_ab. Pairs are tried in lexicographic
  /// element order.
  struct TwoGenerator {
    std::uint64_t order;
    std::uint64_t order_a;
    std::uint64_t order_b;
    std::optional<std::uint64_t> order_ab;
  };

  std::variant<Sylow, Normaliser, Closure, TwoGenerator> kind;
};

/// Throws NotFoundError when nothing matches, UnsupportedError past the
/// enumeration cap.
PermGroup find_subgroup(const PermGroup& group, const SubgroupSpec& spec,
                        const Limits& limits = default_limits());

}  // namespace saxl
