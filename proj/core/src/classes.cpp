#include "saxl/classes.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <string>

#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"

namespace saxl {

ElementKeySet::ElementKeySet(const PermGroup& group) : base_(group.base()) {
  radix_ = std::max<std::uint64_t>(group.degree(), 1);
  std::uint64_t span = 1;
  for (std::size_t i = 0; i < base_.size() && packed_; ++i) {
    if (span > std::numeric_limits<std::uint64_t>::max() / radix_) packed_ = false;
    span *= radix_;
  }
}

std::uint64_t ElementKeySet::pack(const Permutation& x) const {
  std::uint64_t key = 0;
  for (Point b : base_) key = key * radix_ + x[b];
  return key;
}

std::string ElementKeySet::bytes(const Permutation& x) const {
  std::string key(base_.size() * sizeof(Point), '\0');
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Point img = x[base_[i]];
    std::memcpy(key.data() + i * sizeof(Point), &img, sizeof(Point));
  }
  return key;
}

bool ElementKeySet::insert(const Permutation& x) {
  return packed_ ? small_.insert(pack(x)).second : large_.insert(bytes(x)).second;
}

bool ElementKeySet::contains(const Permutation& x) const {
  return packed_ ? small_.count(pack(x)) > 0 : large_.count(bytes(x)) > 0;
}

ConjClassData conjugacy_class(const PermGroup& group, const Permutation& x, const Limits& limits) {
  ConjClassData data;
  data.rep = x;
  data.order = x.order();
  auto set = std::make_shared<ElementKeySet>(group);
  std::vector<Permutation> frontier{x};
  set->insert(x);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& y : frontier) {
      for (const auto& g : group.generators()) {
        Permutation z = conjugate(y, g);
        if (set->insert(z)) {
          if (set->size() > limits.class_cap) {
            throw UnsupportedError("conjugacy class exceeds class cap " +
                                   std::to_string(limits.class_cap));
          }
          next.push_back(std::move(z));
        }
      }
    }
    frontier = std::move(next);
  }
  data.class_size = set->size();
  data.class_elements = std::move(set);
  return data;
}

std::vector<ConjClassData> prime_order_class_reps(const PermGroup& group, const Limits& limits) {
  std::vector<ConjClassData> classes;
  group.for_each_element([&](const Permutation& x) {
    const std::uint64_t ord = x.order();
    if (!is_prime(ord)) return true;
    for (const auto& c : classes) {
      if (c.order == ord && c.class_elements->contains(x)) return true;
    }
    classes.push_back(conjugacy_class(group, x, limits));
    return true;
  }, limits);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const ConjClassData& a, const ConjClassData& b) { return a.order < b.order; });
  return classes;
}

std::uint64_t centraliser_order(const PermGroup& group, const Permutation& x, const Limits& limits) {
  std::uint64_t count = 0;
  group.for_each_element([&](const Permutation& g) {
    if (g * x == x * g) ++count;
    return true;
  }, limits);
  return count;
}

}  // namespace saxl
