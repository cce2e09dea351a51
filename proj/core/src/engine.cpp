#include "saxl/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "saxl/classes.hpp"
#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/parallel.hpp"

namespace saxl {

namespace {

std::vector<Suborbit> orbits_of(const PermGroup& h, std::size_t n) {
  const auto ids = h.orbit_ids();
  std::vector<Suborbit> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (ids[x] == out.size()) out.push_back({static_cast<Point>(x), 0});
    ++out[ids[x]].length;
  }
  return out;
}

bool is_prime_order(const Permutation& x) {
  const auto o = x.order();
  return o > 1 && is_prime(o);
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseNeighbourhood

BaseNeighbourhood::BaseNeighbourhood(const LabelledAction& action, const Limits& limits)
    : n_(action.degree()) {
  const PermGroup& g = action.group();
  if (n_ == 0) throw std::invalid_argument("empty action");
  gens_ = g.generators();
  for (const auto& s : gens_) inverse_gens_.push_back(s.inverse());
  parent_gen_.assign(n_, -1);
  parent_.assign(n_, 0);
  std::vector<bool> seen(n_, false);
  seen[0] = true;
  std::deque<Point> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    const Point x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      const Point y = gens_[k][x];
      if (!seen[y]) {
        seen[y] = true;
        parent_gen_[y] = static_cast<std::int32_t>(k);
        parent_[y] = x;
        queue.push_back(y);
        ++reached;
      }
    }
  }
  if (reached != n_) throw std::invalid_argument("action '" + action.name() + "' is not transitive");

  stabiliser_ = g.point_stabiliser(0, limits);
  suborbits_ = orbits_of(stabiliser_, n_);
  const BigInt h = stabiliser_.order();
  row0_.resize(n_);
  const auto ids = stabiliser_.orbit_ids();
  std::vector<bool> regular(suborbits_.size(), false);
  for (std::size_t i = 0; i < suborbits_.size(); ++i) {
    if (h == suborbits_[i].length) {
      regular[i] = true;
      ++regular_;
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    if (regular[ids[x]]) row0_.set(x);
  }
}

Point BaseNeighbourhood::to_point(Point a, Point x) const {
  // t = g_1 ... g_k along the tree path from 0 to a; collect from a upward.
  std::vector<std::int32_t> path;
  for (Point v = a; v != 0; v = parent_[v]) path.push_back(parent_gen_[v]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) x = gens_[static_cast<std::size_t>(*it)][x];
  return x;
}

Point BaseNeighbourhood::from_point(Point a, Point y) const {
  for (Point v = a; v != 0; v = parent_[v]) y = inverse_gens_[static_cast<std::size_t>(parent_gen_[v])][y];
  return y;
}

Bitset BaseNeighbourhood::row(Point a) const {
  if (a >= n_) throw std::out_of_range("point out of range");
  if (a == 0) return row0_;
  std::vector<Point> t(n_);
  for (std::size_t x = 0; x < n_; ++x) t[x] = static_cast<Point>(x);
  std::vector<std::int32_t> path;
  for (Point v = a; v != 0; v = parent_[v]) path.push_back(parent_gen_[v]);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto& s = gens_[static_cast<std::size_t>(*it)];
    for (auto& x : t) x = s[x];
  }
  Bitset out(n_);
  for (auto b = row0_.find_first(); b != Bitset::npos; b = row0_.find_next(b)) out.set(t[b]);
  return out;
}

bool BaseNeighbourhood::adjacent(Point a, Point b) const {
  if (a >= n_ || b >= n_) throw std::out_of_range("point out of range");
  return row0_[from_point(a, b)];
}

// ---------------------------------------------------------------------------
// Pairs and suborbits

bool is_base_pair(const LabelledAction& action, Point a, Point b, const Limits& limits) {
  if (a == b) throw std::invalid_argument("is_base_pair needs two distinct points");
  const Point pts[2] = {a, b};
  return action.group().pointwise_stabiliser(pts, limits).order() == 1;
}

std::vector<Suborbit> suborbits(const LabelledAction& action, Point a, const Limits& limits) {
  return orbits_of(action.group().point_stabiliser(a, limits), action.degree());
}

std::size_t regular_suborbit_count(const LabelledAction& action, Point a, const Limits& limits) {
  const PermGroup h = action.group().point_stabiliser(a, limits);
  std::size_t r = 0;
  for (const auto& s : orbits_of(h, action.degree())) r += h.order() == s.length ? 1 : 0;
  return r;
}

namespace {

// Smallest block containing 0 and b: close the relation under the generators.
std::size_t minimal_block_size(const PermGroup& g, std::size_t n, Point b) {
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  const auto find = [&](Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Point, Point>> pending{{0, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    const Point rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[ry] = rx;
    for (const auto& s : g.generators()) pending.emplace_back(s[x], s[y]);
  }
  const Point root = find(0);
  std::size_t size = 0;
  for (std::size_t x = 0; x < n; ++x) size += find(static_cast<Point>(x)) == root ? 1 : 0;
  return size;
}

}  // namespace

bool is_primitive(const LabelledAction& action, const Limits& limits) {
  const std::size_t n = action.degree();
  if (action.group().orbit(0).size() != n) return false;
  if (n <= 2) return true;
  // Every block through 0 is a union of suborbits, so one rep per suborbit suffices.
  for (const auto& s : suborbits(action, 0, limits)) {
    if (s.rep != 0 && minimal_block_size(action.group(), n, s.rep) != n) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Probabilities

Rational q_exact(const BaseNeighbourhood& nb) {
  const BigInt n = nb.degree();
  return Rational(1) - Rational(BigInt(nb.regular_count()) * nb.stabiliser().order(), n);
}

Rational q_by_pair_count(const LabelledAction& action, const Limits& limits) {
  const std::size_t n = action.degree();
  if (action.group().orbit(0).size() != n) throw std::invalid_argument("action is not transitive");
  const PermGroup h = action.group().point_stabiliser(0, limits);
  Bitset fixed(n);
  h.for_each_element([&](const Permutation& y) {
    if (is_prime_order(y)) {
      for (std::size_t x = 0; x < n; ++x) {
        if (y[static_cast<Point>(x)] == x) fixed.set(x);
      }
    }
    return true;
  }, limits);
  // Row 0 holds fixed.count() non-bases; transitivity gives n such rows.
  const BigInt nn = n;
  return Rational(nn * fixed.count(), nn * nn);
}

std::vector<ClassFusion> fuse_prime_classes(const LabelledAction& action, const Limits& limits) {
  const PermGroup& g = action.group();
  const PermGroup h = g.point_stabiliser(0, limits);
  const auto classes = prime_order_class_reps(g, limits);
  std::vector<std::uint64_t> hits(classes.size(), 0);
  h.for_each_element([&](const Permutation& y) {
    if (!is_prime_order(y)) return true;
    const auto o = y.order();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].order == o && classes[i].class_elements->contains(y)) {
        ++hits[i];
        return true;
      }
    }
    throw std::logic_error("prime-order element of H lies in no G-class");
  }, limits);
  std::vector<ClassFusion> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (hits[i] > 0) out.push_back({classes[i].order, classes[i].class_size, hits[i]});
  }
  return out;
}

Rational q_hat(const std::vector<ClassFusion>& fusion) {
  Rational sum = 0;
  for (const auto& c : fusion) sum += Rational(BigInt(c.hits) * c.hits, BigInt(c.class_size));
  return sum;
}

Rational q_hat_by_fixed_points(const LabelledAction& action, const Limits& limits) {
  const std::size_t n = action.degree();
  const PermGroup h = action.group().point_stabiliser(0, limits);
  BigInt total = 0;
  h.for_each_element([&](const Permutation& y) {
    if (is_prime_order(y)) total += y.fixed_point_count();
    return true;
  }, limits);
  return Rational(total, BigInt(n));
}

Rational q_tilde(const std::vector<ClassFusion>& fusion) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> grouped;
  for (const auto& c : fusion) grouped[{c.order, c.class_size}] += c.hits;
  Rational sum = 0;
  for (const auto& [key, hits] : grouped) sum += Rational(BigInt(hits) * hits, BigInt(key.second));
  return sum;
}

Rational lemma_calc_bound(const BigInt& a_sum, const BigInt& b_min, unsigned c) {
  if (a_sum < 0 || b_min < 1 || c < 1) throw std::invalid_argument("lemma_calc_bound needs A >= 0, B >= 1, c >= 1");
  const Rational ratio(a_sum, b_min);
  Rational out = b_min;
  for (unsigned i = 0; i < c; ++i) out *= ratio;
  return out;
}

TValue t_value(const Rational& q, std::uint64_t degree) {
  if (q < 0 || q >= 1) throw std::invalid_argument("t(G) needs 0 <= Q < 1");
  if (q == 0) return {degree, true};
  const BigInt num = numerator_of(q), den = denominator_of(q);
  return {static_cast<std::uint64_t>((den - 1) / num), false};
}

bool size_inequality(const BigInt& order_g, const BigInt& order_h) {
  if (order_g < 1 || order_h < 1) throw std::invalid_argument("orders must be positive");
  return 4 * order_h * order_h <= 3 * order_g;
}

// ---------------------------------------------------------------------------
// Graph

SaxlGraph::SaxlGraph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (rows_[a].size() != n) throw std::invalid_argument("row length mismatch");
    if (rows_[a][a]) throw std::invalid_argument("graph has a loop");
    for (auto b = rows_[a].find_first(); b != Bitset::npos; b = rows_[a].find_next(b)) {
      if (!rows_[b][a]) throw std::logic_error("adjacency is not symmetric");
    }
  }
}

SaxlGraph SaxlGraph::build(const BaseNeighbourhood& nb, const Limits& limits) {
  const std::size_t n = nb.degree();
  if (n > limits.graph_cap) {
    throw UnsupportedError("degree " + std::to_string(n) + " exceeds graph cap " + std::to_string(limits.graph_cap));
  }
  std::vector<Bitset> rows(n);
  parallel_for(n, limits.threads, [&](std::size_t a) { rows[a] = nb.row(static_cast<Point>(a)); });
  SaxlGraph graph(std::move(rows));
  if (graph.valency() != nb.regular_count() * static_cast<std::size_t>(nb.stabiliser().order())) {
    throw std::logic_error("valency differs from r|H|");
  }
  return graph;
}

std::size_t SaxlGraph::valency() const {
  if (rows_.empty()) return 0;
  const std::size_t v = rows_[0].count();
  for (const auto& r : rows_) {
    if (r.count() != v) throw std::logic_error("graph is not regular");
  }
  return v;
}

std::uint64_t SaxlGraph::edge_count() const {
  std::uint64_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

void SaxlGraph::write_edge_list(std::ostream& out) const {
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (auto b = rows_[a].find_next(a); b != Bitset::npos; b = rows_[a].find_next(b)) out << a << ' ' << b << '\n';
  }
}

void SaxlGraph::write_dot(std::ostream& out) const {
  out << "graph {\n";
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    if (rows_[a].none()) out << "  " << a << ";\n";
    for (auto b = rows_[a].find_next(a); b != Bitset::npos; b = rows_[a].find_next(b)) {
      out << "  " << a << " -- " << b << ";\n";
    }
  }
  out << "}\n";
}

SaxlGraph SaxlGraph::complement() const {
  std::vector<Bitset> rows = rows_;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    rows[a].flip();
    rows[a].reset(a);
  }
  return SaxlGraph(std::move(rows));
}

// ---------------------------------------------------------------------------
// Star property

StarResult check_star(const BaseNeighbourhood& nb, const Limits& limits) {
  const auto& subs = nb.suborbits();
  std::vector<std::optional<Point>> common(subs.size());
  parallel_for(subs.size(), limits.threads, [&](std::size_t i) {
    if (subs[i].rep == 0) return;
    const Bitset both = nb.base_row() & nb.row(subs[i].rep);
    const auto c = both.find_first();
    if (c != Bitset::npos) common[i] = static_cast<Point>(c);
  });
  StarResult out;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].rep == 0) continue;
    if (common[i]) {
      out.witnesses.push_back({subs[i].rep, *common[i]});
    } else if (out.holds) {
      out.holds = false;
      out.failing_rep = subs[i].rep;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cliques

namespace {

bool extend_clique(std::vector<Point>& clique, const std::vector<Point>& cand, std::size_t target,
                   const AdjacencyFn& adjacent) {
  if (clique.size() >= target) return true;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (clique.size() + (cand.size() - i) < target) return false;
    std::vector<Point> next;
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (adjacent(cand[i], cand[j])) next.push_back(cand[j]);
    }
    clique.push_back(cand[i]);
    if (extend_clique(clique, next, target, adjacent)) return true;
    clique.pop_back();
  }
  return false;
}

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(const SaxlGraph& g) : g_(g) {}

  void expand(Bitset p, std::vector<Point>& cur) {
    std::vector<Point> order;
    std::vector<std::size_t> colour;
    Bitset uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      Bitset avail = uncoloured;
      for (auto v = avail.find_first(); v != Bitset::npos; v = avail.find_next(v)) {
        avail -= g_.row(static_cast<Point>(v));
        uncoloured.reset(v);
        order.push_back(static_cast<Point>(v));
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (cur.size() + colour[i] <= best.size()) return;
      const Point v = order[i];
      cur.push_back(v);
      Bitset next = p & g_.row(v);
      if (next.none()) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(std::move(next), cur);
      }
      cur.pop_back();
      p.reset(v);
    }
  }

  std::vector<Point> best;

 private:
  const SaxlGraph& g_;
};

}  // namespace

std::optional<std::vector<Point>> find_clique(Point anchor, const std::vector<Point>& candidates,
                                              std::size_t target, const AdjacencyFn& adjacent) {
  std::vector<Point> clique{anchor};
  if (extend_clique(clique, candidates, target, adjacent)) return clique;
  return std::nullopt;
}

std::optional<std::vector<Point>> clique_lower(const BaseNeighbourhood& nb, std::size_t target) {
  if (target < 2) throw std::invalid_argument("clique target must be at least 2");
  std::vector<Point> cand;
  for (auto b = nb.base_row().find_first(); b != Bitset::npos; b = nb.base_row().find_next(b)) {
    cand.push_back(static_cast<Point>(b));
  }
  auto found = find_clique(0, cand, target, [&](Point a, Point b) { return nb.adjacent(a, b); });
  if (found) {
    for (std::size_t i = 0; i < found->size(); ++i) {
      for (std::size_t j = i + 1; j < found->size(); ++j) {
        if (!nb.adjacent((*found)[i], (*found)[j])) throw std::logic_error("clique verification failed");
      }
    }
  }
  return found;
}

CliqueResult max_clique_vertex_transitive(const SaxlGraph& graph, const Limits& limits) {
  if (graph.size() > limits.exact_cap) {
    throw UnsupportedError("degree " + std::to_string(graph.size()) + " exceeds exact search cap " +
                           std::to_string(limits.exact_cap));
  }
  if (graph.size() == 0) return {};
  MaxCliqueSearch search(graph);
  std::vector<Point> cur{0};
  search.best = cur;
  search.expand(graph.row(0), cur);
  std::sort(search.best.begin(), search.best.end());
  return {search.best.size(), search.best};
}

CliqueIndependence clique_and_independence_exact(const SaxlGraph& graph, const Limits& limits) {
  return {max_clique_vertex_transitive(graph, limits), max_clique_vertex_transitive(graph.complement(), limits)};
}

// ---------------------------------------------------------------------------
// Pipeline

SaxlReport analyze(const LabelledAction& action, const AnalyzeOptions& options, const Limits& limits) {
  SaxlReport rep;
  rep.name = action.name();
  rep.degree = action.degree();
  rep.group_order = action.group().order();
  rep.warnings = action.warnings();
  const BaseNeighbourhood nb(action, limits);
  rep.stab_order = nb.stabiliser().order();
  rep.suborbits = nb.suborbits();
  rep.regular_count = nb.regular_count();
  rep.valency = nb.valency();
  rep.q_exact = q_exact(nb);
  const bool base_two = rep.regular_count > 0;

  if (options.cross_check) {
    rep.q_by_pairs = q_by_pair_count(action, limits);
    if (*rep.q_by_pairs != rep.q_exact) throw std::logic_error("Q differs between suborbit and pair counts");
  }
  if (options.q_hat) {
    try {
      const auto fusion = fuse_prime_classes(action, limits);
      rep.q_hat = q_hat(fusion);
      rep.q_tilde = q_tilde(fusion);
      if (options.cross_check) {
        rep.q_hat_by_fixed_points = q_hat_by_fixed_points(action, limits);
        if (*rep.q_hat_by_fixed_points != *rep.q_hat) throw std::logic_error("Q-hat routes disagree");
      }
    } catch (const UnsupportedError& e) {
      rep.skipped.push_back(std::string("q_hat: ") + e.what());
    }
  }
  if (!base_two) {
    rep.skipped.push_back("t, star, cliques: the action is not base-two");
    return rep;
  }
  rep.t = t_value(rep.q_exact, rep.degree);
  if (options.star) rep.star = check_star(nb, limits);
  if (options.exact_cliques) {
    if (rep.degree > limits.exact_cap || rep.degree > limits.graph_cap) {
      rep.skipped.push_back("cliques: degree " + std::to_string(rep.degree) + " exceeds exact search cap");
    } else {
      const SaxlGraph graph = SaxlGraph::build(nb, limits);
      auto ci = clique_and_independence_exact(graph, limits);
      rep.clique = std::move(ci.clique);
      rep.independent = std::move(ci.independent);
    }
  }
  return rep;
}

}  // namespace saxl
