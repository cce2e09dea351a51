#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "saxl/actions.hpp"
#include "saxl/limits.hpp"
#include "saxl/rational.hpp"

namespace saxl {

using Bitset = boost::dynamic_bitset<>;

/// An orbit of a point stabiliser, named by its smallest point.
struct Suborbit {
  Point rep = 0;
  std::size_t length = 0;
};

/// Neighbourhoods in the Saxl graph of a transitive action, derived from the
/// suborbits of H = G_0. Rows of other points are images of row 0 under
/// Schreier-tree coset representatives of G.
class BaseNeighbourhood {
 public:
  /// Throws std::invalid_argument if the action is not transitive.
  explicit BaseNeighbourhood(const LabelledAction& action, const Limits& limits = default_limits());

  std::size_t degree() const noexcept { return n_; }
  const PermGroup& stabiliser() const noexcept { return stabiliser_; }
  /// Suborbits at point 0, ordered by representative.
  const std::vector<Suborbit>& suborbits() const noexcept { return suborbits_; }
  std::size_t regular_count() const noexcept { return regular_; }
  /// Points forming a base with point 0.
  const Bitset& base_row() const noexcept { return row0_; }
  std::size_t valency() const noexcept { return row0_.count(); }

  /// Neighbours of a.
  Bitset row(Point a) const;
  bool adjacent(Point a, Point b) const;

 private:
  Point to_point(Point a, Point x) const;    // x^t where 0^t = a
  Point from_point(Point a, Point y) const;  // y^(t^-1)

  std::size_t n_ = 0;
  PermGroup stabiliser_;
  std::vector<Suborbit> suborbits_;
  std::size_t regular_ = 0;
  Bitset row0_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> inverse_gens_;
  std::vector<std::int32_t> parent_gen_;  // Schreier tree of G rooted at 0
  std::vector<Point> parent_;
};

/// Pointwise stabiliser of {a, b} is trivial. Computed directly from a
/// stabiliser chain with base prefix (a, b). Throws std::invalid_argument for
/// a == b.
bool is_base_pair(const LabelledAction& action, Point a, Point b, const Limits& limits = default_limits());

/// Orbits of G_a on the points, ordered by representative.
std::vector<Suborbit> suborbits(const LabelledAction& action, Point a, const Limits& limits = default_limits());
std::size_t regular_suborbit_count(const LabelledAction& action, Point a = 0,
                                   const Limits& limits = default_limits());

/// True when the action is transitive and preserves no nontrivial block
/// system, i.e. the point stabiliser is maximal.
bool is_primitive(const LabelledAction& action, const Limits& limits = default_limits());

/// Q = 1 - r|H|/n.
Rational q_exact(const BaseNeighbourhood& nb);
/// Q as (#ordered non-base pairs)/n^2, counting the pairs (0, b) that are
/// fixed by some prime-order element of H and scaling by n.
Rational q_by_pair_count(const LabelledAction& action, const Limits& limits = default_limits());

/// G-classes of prime-order elements that meet H.
struct ClassFusion {
  std::uint64_t order = 0;       // prime order of the elements
  std::uint64_t class_size = 0;  // |x^G|
  std::uint64_t hits = 0;        // |x^G ∩ H|
};
std::vector<ClassFusion> fuse_prime_classes(const LabelledAction& action, const Limits& limits = default_limits());

/// Sum over classes of |x^G ∩ H|^2 / |x^G|.
Rational q_hat(const std::vector<ClassFusion>& fusion);
/// The same sum as (1/n) * sum of fix(y) over prime-order y in H.
Rational q_hat_by_fixed_points(const LabelledAction& action, const Limits& limits = default_limits());
/// Classes grouped by (prime order, class size) before squaring.
Rational q_tilde(const std::vector<ClassFusion>& fusion);

/// B (A/B)^c.
Rational lemma_calc_bound(const BigInt& a_sum, const BigInt& b_min, unsigned c);

/// t(G) = max{m : Q < 1/m}. For Q = 0 the value is unbounded and reported as
/// the degree with `unbounded` set.
struct TValue {
  std::uint64_t value = 0;
  bool unbounded = false;
};
/// Throws std::invalid_argument unless 0 <= Q < 1.
TValue t_value(const Rational& q, std::uint64_t degree);

/// 4|H|^2 <= 3|G|.
bool size_inequality(const BigInt& order_g, const BigInt& order_h);

class SaxlGraph {
 public:
  /// Full adjacency. Throws UnsupportedError above Limits::graph_cap.
  static SaxlGraph build(const BaseNeighbourhood& nb, const Limits& limits = default_limits());
  /// Graph given by explicit rows (must be symmetric and loop-free).
  explicit SaxlGraph(std::vector<Bitset> rows);

  std::size_t size() const noexcept { return rows_.size(); }
  bool adjacent(Point a, Point b) const { return rows_[a][b]; }
  const Bitset& row(Point a) const { return rows_.at(a); }
  /// Common valency; throws std::logic_error if the graph is not regular.
  std::size_t valency() const;
  std::uint64_t edge_count() const;

  /// `u v` per line, u < v, sorted.
  void write_edge_list(std::ostream& out) const;
  void write_dot(std::ostream& out) const;

  SaxlGraph complement() const;

 private:
  std::vector<Bitset> rows_;
};

/// Per suborbit representative b != 0 with its first common neighbour c of
/// 0 and b (the least such point).
struct StarWitness {
  Point rep = 0;
  Point common = 0;
};
struct StarResult {
  bool holds = true;
  std::optional<Point> failing_rep;
  std::vector<StarWitness> witnesses;
};
/// Any two points have a common neighbour. Checks 0 against every suborbit
/// representative, which suffices by transitivity.
StarResult check_star(const BaseNeighbourhood& nb, const Limits& limits = default_limits());

/// Adjacency predicate for clique searches.
using AdjacencyFn = std::function<bool(Point, Point)>;

/// First clique of the requested size containing `anchor` whose other
/// vertices come from `candidates` (all adjacent to the anchor), found by
/// depth-first search in index order with a size bound. Exhaustive: nullopt
/// means no such clique exists.
std::optional<std::vector<Point>> find_clique(Point anchor, const std::vector<Point>& candidates,
                                              std::size_t target, const AdjacencyFn& adjacent);

/// A clique of `target` vertices in the Saxl graph, or nullopt if none exists.
/// Throws std::invalid_argument for target < 2.
std::optional<std::vector<Point>> clique_lower(const BaseNeighbourhood& nb, std::size_t target);

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Point> vertices;
};
/// Maximum clique of a vertex-transitive graph (the search is anchored at
/// vertex 0). Throws UnsupportedError above Limits::exact_cap.
CliqueResult max_clique_vertex_transitive(const SaxlGraph& graph, const Limits& limits = default_limits());

struct CliqueIndependence {
  CliqueResult clique;
  CliqueResult independent;
};
CliqueIndependence clique_and_independence_exact(const SaxlGraph& graph, const Limits& limits = default_limits());

struct AnalyzeOptions {
  bool q_hat = true;
  bool star = true;
  bool exact_cliques = true;
  bool cross_check = false;
};

struct SaxlReport {
  std::string name;
  std::uint64_t degree = 0;
  BigInt group_order;
  BigInt stab_order;
  std::vector<Suborbit> suborbits;
  std::size_t regular_count = 0;
  std::size_t valency = 0;
  Rational q_exact;
  std::optional<Rational> q_by_pairs;
  std::optional<Rational> q_hat;
  std::optional<Rational> q_hat_by_fixed_points;
  std::optional<Rational> q_tilde;
  std::optional<TValue> t;
  std::optional<StarResult> star;
  std::optional<CliqueResult> clique;
  std::optional<CliqueResult> independent;
  std::vector<std::string> warnings;
  /// Steps skipped because a cap was exceeded.
  std::vector<std::string> skipped;
};

/// Runs the analysis pipeline. Optional parts that exceed a cap are recorded
/// in `skipped`; the core values (suborbits, r, Q) always propagate errors.
SaxlReport analyze(const LabelledAction& action, const AnalyzeOptions& options = {},
                   const Limits& limits = default_limits());

}  // namespace saxl
