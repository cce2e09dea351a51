#include "saxl/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "saxl/errors.hpp"

namespace saxl {

namespace {

// h * t^-1 written into out, without materialising t^-1 separately.
void mul_by_inverse(const Permutation& h, const Permutation& t, std::vector<Point>& tinv_buf,
                    Permutation& out) {
  const std::size_t n = h.degree();
  tinv_buf.resize(n);
  for (std::size_t i = 0; i < n; ++i) tinv_buf[t[static_cast<Point>(i)]] = static_cast<Point>(i);
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = tinv_buf[h[static_cast<Point>(i)]];
  out = Permutation::unchecked(std::move(img));
}

void check_degrees(std::size_t degree, std::span<const Permutation> gens) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " differs from group degree " + std::to_string(degree));
    }
  }
}

}  // namespace

class SchreierSimsBuilder {
 public:
  SchreierSimsBuilder(std::size_t degree, const Limits& limits) : degree_(degree), limits_(limits) {
    chain_.degree_ = degree;
  }

  void add_level(Point base_point) {
    StabLevel level;
    level.base_point = base_point;
    level.orbit_index.assign(degree_, -1);
    level.orbit.push_back(base_point);
    level.orbit_index[base_point] = 0;
    level.transversal.push_back(Permutation(degree_));
    charge(1);
    chain_.levels_.push_back(std::move(level));
  }

  // Appends g to the generators of `level` and extends its orbit.
  void add_generator(std::size_t li, const Permutation& g) {
    StabLevel& level = chain_.levels_[li];
    const std::size_t first_new = level.generators.size();
    level.generators.push_back(g);
    // Old orbit points only need the new generator; new points need all.
    const std::size_t old_size = level.orbit.size();
    for (std::size_t k = 0; k < old_size; ++k) expand(level, k, first_new);
    for (std::size_t k = old_size; k < level.orbit.size(); ++k) expand(level, k, 0);
  }

  void expand(StabLevel& level, std::size_t k, std::size_t gen_from) {
    // New points are appended; the caller's loop over orbit indices visits them.
    for (std::size_t s = gen_from; s < level.generators.size(); ++s) {
      const Permutation& gen = level.generators[s];
      Point img = gen[level.orbit[k]];
      if (level.orbit_index[img] >= 0) continue;
      level.orbit_index[img] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(img);
      level.transversal.push_back(level.transversal[k] * gen);
      charge(1);
    }
  }

  void charge(std::uint64_t perms) {
    used_ += perms * std::max<std::uint64_t>(degree_, 1);
    if (used_ > limits_.transversal_budget) {
      throw UnsupportedError("stabiliser chain exceeds transversal budget of " +
                             std::to_string(limits_.transversal_budget) + " entries");
    }
  }

  // Base point for a new level holding g, which fixes every current base point.
  Point new_base_point(const Permutation& g) const { return g.first_moved_point(); }

  bool fixes_base(const Permutation& g) const {
    for (const auto& level : chain_.levels_) {
      if (g[level.base_point] != level.base_point) return false;
    }
    return true;
  }

  StabChain run(std::span<const Permutation> gens, std::span<const Point> prefix,
                const std::optional<BigInt>& known_order) {
    std::vector<bool> used_point(degree_, false);
    for (Point b : prefix) {
      if (b >= degree_) throw std::invalid_argument("base point out of range");
      if (used_point[b]) throw std::invalid_argument("repeated base point");
      used_point[b] = true;
      add_level(b);
    }
    std::vector<Permutation> strong;
    for (const auto& g : gens) {
      if (g.is_identity()) continue;
      if (std::find(strong.begin(), strong.end(), g) != strong.end()) continue;
      strong.push_back(g);
      if (fixes_base(g)) add_level(new_base_point(g));
    }
    for (std::size_t li = 0; li < chain_.levels_.size(); ++li) {
      for (const auto& g : strong) {
        bool fixes_prefix = true;
        for (std::size_t lj = 0; lj < li; ++lj) {
          Point b = chain_.levels_[lj].base_point;
          if (g[b] != b) {
            fixes_prefix = false;
            break;
          }
        }
        if (fixes_prefix) add_generator(li, g);
      }
    }
    if (reached(known_order)) return std::move(chain_);

    std::vector<Point> buf;
    Permutation prod;
    Permutation schreier;
    std::size_t i = chain_.levels_.size();
    while (i > 0) {
      const std::size_t li = i - 1;
      bool restarted = false;
      // Indices are re-read every iteration since levels may grow.
      for (std::size_t k = 0; k < chain_.levels_[li].orbit.size() && !restarted; ++k) {
        for (std::size_t s = 0; s < chain_.levels_[li].generators.size(); ++s) {
          const StabLevel& level = chain_.levels_[li];
          const Permutation& gen = level.generators[s];
          compose_into(level.transversal[k], gen, prod);
          Point img = gen[level.orbit[k]];
          const Permutation& rep = level.rep(img);
          if (prod == rep) continue;
          mul_by_inverse(prod, rep, buf, schreier);
          auto [residue, stop] = chain_.sift(std::move(schreier), li + 1);
          if (residue.is_identity()) continue;
          if (stop == chain_.levels_.size()) add_level(new_base_point(residue));
          for (std::size_t lj = li + 1; lj <= stop; ++lj) add_generator(lj, residue);
          if (reached(known_order)) return std::move(chain_);
          i = stop + 1;
          restarted = true;
          break;
        }
      }
      if (!restarted) --i;
    }
    return std::move(chain_);
  }

 private:
  bool reached(const std::optional<BigInt>& known_order) const {
    return known_order && chain_.order() == *known_order;
  }

  std::size_t degree_;
  const Limits& limits_;
  std::uint64_t used_ = 0;
  StabChain chain_;
};

StabChain StabChain::build(std::size_t degree, std::span<const Permutation> generators,
                           std::span<const Point> base_prefix,
                           const std::optional<BigInt>& known_order, const Limits& limits) {
  check_degrees(degree, generators);
  SchreierSimsBuilder builder(degree, limits);
  return builder.run(generators, base_prefix, known_order);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

BigInt StabChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels_) result *= level.orbit.size();
  return result;
}

std::pair<Permutation, std::size_t> StabChain::sift(Permutation g, std::size_t from_level) const {
  std::vector<Point> buf;
  Permutation next;
  for (std::size_t li = from_level; li < levels_.size(); ++li) {
    const StabLevel& level = levels_[li];
    Point img = g[level.base_point];
    if (!level.in_orbit(img)) return {std::move(g), li};
    if (img == level.base_point) continue;
    mul_by_inverse(g, level.rep(img), buf, next);
    std::swap(g, next);
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).first.is_identity();
}

StabChain StabChain::suffix(std::size_t first_level) const {
  StabChain out;
  out.degree_ = degree_;
  for (std::size_t li = first_level; li < levels_.size(); ++li) out.levels_.push_back(levels_[li]);
  return out;
}

PermGroup::PermGroup(std::size_t degree)
    : degree_(degree), chain_(std::make_shared<StabChain>(StabChain::build(degree, {}))) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     const std::optional<BigInt>& known_order, std::span<const Point> base_prefix,
                     const Limits& limits)
    : degree_(degree), generators_(std::move(generators)) {
  chain_ = std::make_shared<StabChain>(
      StabChain::build(degree_, generators_, base_prefix, known_order, limits));
}

PermGroup PermGroup::from_chain(StabChain chain) {
  PermGroup g(chain.degree());
  // Level 0 strong generators generate the whole group of the chain.
  if (chain.depth() > 0) g.generators_ = chain.levels().front().generators;
  g.chain_ = std::make_shared<StabChain>(std::move(chain));
  return g;
}

std::uint64_t PermGroup::order_u64() const {
  BigInt n = order();
  if (n > std::numeric_limits<std::uint64_t>::max()) {
    throw UnsupportedError("group order does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(n);
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [this](const Permutation& g) { return contains(g); });
}

bool PermGroup::same_elements(const PermGroup& other) const {
  return order() == other.order() && contains_group(other);
}

std::vector<Point> PermGroup::orbit(Point pt) const {
  if (pt >= degree_) throw std::invalid_argument("orbit point out of range");
  std::vector<Point> out{pt};
  std::vector<bool> seen(degree_, false);
  seen[pt] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : generators_) {
      Point img = g[out[k]];
      if (!seen[img]) {
        seen[img] = true;
        out.push_back(img);
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> PermGroup::orbit_ids() const {
  constexpr std::uint32_t unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> ids(degree_, unset);
  std::uint32_t next = 0;
  std::vector<Point> stack;
  for (std::size_t start = 0; start < degree_; ++start) {
    if (ids[start] != unset) continue;
    ids[start] = next;
    stack.assign(1, static_cast<Point>(start));
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      for (const auto& g : generators_) {
        Point y = g[x];
        if (ids[y] == unset) {
          ids[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return ids;
}

PermGroup PermGroup::with_base_prefix(std::span<const Point> prefix, const Limits& limits) const {
  const auto base = chain_->base();
  if (base.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), base.begin())) {
    return *this;
  }
  return PermGroup(degree_, generators_, order(), prefix, limits);
}

PermGroup PermGroup::pointwise_stabiliser(std::span<const Point> pts, const Limits& limits) const {
  for (Point p : pts) {
    if (p >= degree_) throw std::invalid_argument("stabiliser point out of range");
  }
  // Duplicates do not change the stabiliser.
  std::vector<Point> distinct;
  for (Point p : pts) {
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) distinct.push_back(p);
  }
  PermGroup rebased = with_base_prefix(distinct, limits);
  if (rebased.chain().depth() < distinct.size()) {
    // The chain ended early: the group already fixes the remaining points.
    return PermGroup(degree_);
  }
  return from_chain(rebased.chain().suffix(distinct.size()));
}

PermGroup PermGroup::point_stabiliser(Point pt, const Limits& limits) const {
  const Point pts[1] = {pt};
  return pointwise_stabiliser(pts, limits);
}

std::vector<Point> PermGroup::element_key(const Permutation& g) const {
  std::vector<Point> key;
  key.reserve(chain_->depth());
  for (const auto& level : chain_->levels()) key.push_back(g[level.base_point]);
  return key;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation&)>& visit,
                                 const Limits& limits) const {
  if (order() > limits.group_cap) {
    throw UnsupportedError("group order " + order().str() + " exceeds enumeration cap " +
                           std::to_string(limits.group_cap));
  }
  const auto& levels = chain_->levels();
  const std::size_t depth = levels.size();
  if (depth == 0) {
    visit(Permutation(degree_));
    return;
  }
  // partial[j] = u_j * ... * u_0, the product of the chosen coset reps.
  std::vector<Permutation> partial(depth);
  std::vector<std::size_t> index(depth, 0);
  std::size_t j = 0;
  partial[0] = levels[0].transversal[0];
  while (true) {
    if (j + 1 == depth) {
      if (!visit(partial[j])) return;
      // Advance at the deepest level, backtracking as needed.
      while (true) {
        if (++index[j] < levels[j].orbit.size()) break;
        if (j == 0) return;
        index[j] = 0;
        --j;
      }
    } else {
      ++j;
      index[j] = 0;
    }
    const Permutation& u = levels[j].transversal[index[j]];
    if (j == 0) {
      partial[0] = u;
    } else {
      compose_into(u, partial[j - 1], partial[j]);
    }
  }
}

std::vector<Permutation> PermGroup::elements(const Limits& limits) const {
  std::vector<Permutation> out;
  for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  }, limits);
  return out;
}

PermGroup build_chain(std::size_t degree, std::vector<Permutation> gens, const Limits& limits) {
  return PermGroup(degree, std::move(gens), std::nullopt, {}, limits);
}

}  // namespace saxl
