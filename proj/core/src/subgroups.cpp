#include "saxl/subgroups.hpp"

#include <stdexcept>
#include <string>

#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"

namespace saxl {

namespace {

bool normalises(const Permutation& x, const PermGroup& k) {
  for (const auto& g : k.generators()) {
    if (!k.contains(conjugate(g, x))) return false;
  }
  return true;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n > 1 && n % p == 0) n /= p;
  return n == 1;
}

void require_members(const PermGroup& group, const std::vector<Permutation>& elems) {
  for (const auto& x : elems) {
    if (!group.contains(x)) throw std::invalid_argument("element does not lie in the group");
  }
}

PermGroup sylow(const PermGroup& group, std::uint64_t p, const Limits& limits) {
  if (!is_prime(p)) throw std::invalid_argument("Sylow subgroup needs a prime");
  BigInt target = 1;
  BigInt rest = group.order();
  while (rest % p == 0) {
    rest /= p;
    target *= p;
  }
  PermGroup current(group.degree());
  std::vector<Permutation> gens;
  // A p-subgroup P below a Sylow subgroup has an element of p-power order in
  // N(P) \ P, and adjoining it keeps a p-group; so passes always progress.
  while (current.order() != target) {
    bool grew = false;
    group.for_each_element([&](const Permutation& x) {
      if (!is_power_of(x.order(), p) || current.contains(x) || !normalises(x, current)) return true;
      gens.push_back(x);
      current = PermGroup(group.degree(), gens, std::nullopt, {}, limits);
      grew = true;
      return current.order() != target;
    }, limits);
    if (!grew) throw NotFoundError("Sylow search stalled");
  }
  return current;
}

PermGroup normaliser(const PermGroup& group, const PermGroup& k, const Limits& limits) {
  if (k.degree() != group.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<Permutation> gens;
  PermGroup current(group.degree());
  group.for_each_element([&](const Permutation& x) {
    if (current.contains(x) || !normalises(x, k)) return true;
    gens.push_back(x);
    current = PermGroup(group.degree(), gens, std::nullopt, {}, limits);
    return true;
  }, limits);
  return current;
}

PermGroup two_generator(const PermGroup& group, const SubgroupSpec::TwoGenerator& spec,
                        const Limits& limits) {
  const std::vector<Permutation> elems = group.elements(limits);
  std::vector<const Permutation*> as, bs;
  for (const auto& x : elems) {
    const std::uint64_t o = x.order();
    if (o == spec.order_a) as.push_back(&x);
    if (o == spec.order_b) bs.push_back(&x);
  }
  const BigInt target = spec.order;
  for (const Permutation* a : as) {
    for (const Permutation* b : bs) {
      if (spec.order_ab && (*a * *b).order() != *spec.order_ab) continue;
      PermGroup h(group.degree(), {*a, *b}, std::nullopt, {}, limits);
      if (h.order() == target) return h;
    }
  }
  throw NotFoundError("no two-generator subgroup of order " + std::to_string(spec.order));
}

}  // namespace

PermGroup find_subgroup(const PermGroup& group, const SubgroupSpec& spec, const Limits& limits) {
  if (group.order() > limits.group_cap) {
    throw UnsupportedError("subgroup search needs |G| <= " + std::to_string(limits.group_cap));
  }
  return std::visit(
      [&](const auto& kind) -> PermGroup {
        using T = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<T, SubgroupSpec::Sylow>) {
          return sylow(group, kind.p, limits);
        } else if constexpr (std::is_same_v<T, SubgroupSpec::Normaliser>) {
          return normaliser(group, kind.k, limits);
        } else if constexpr (std::is_same_v<T, SubgroupSpec::Closure>) {
          require_members(group, kind.elements);
          return PermGroup(group.degree(), kind.elements, std::nullopt, {}, limits);
        } else {
          return two_generator(group, kind, limits);
        }
      },
      spec.kind);
}

}  // namespace saxl
