#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "saxl/engine.hpp"
#include "saxl/errors.hpp"
#include "test_groups.hpp"

using saxl::BaseNeighbourhood;
using saxl::Family;
using saxl::Point;
using saxl::Rational;

namespace {

std::size_t shared_points(const saxl::OmegaPoint& a, const saxl::OmegaPoint& b) {
  std::size_t k = 0;
  for (auto x : a.data) k += static_cast<std::size_t>(std::count(b.data.begin(), b.data.end(), x));
  return k;
}

Rational q(long num, long den) { return Rational(num, den); }

}  // namespace

TEST(Engine, A5PairsIsPetersenComplement) {
  auto a = saxl::ksubset_action(5, 2, true);
  BaseNeighbourhood nb(a);
  EXPECT_EQ(nb.valency(), 6u);
  auto g = saxl::SaxlGraph::build(nb);
  EXPECT_EQ(g.edge_count(), 30u);
  for (Point x = 0; x < 10; ++x) {
    for (Point y = 0; y < 10; ++y) {
      if (x != y) EXPECT_EQ(g.adjacent(x, y), shared_points(a.label(x), a.label(y)) == 1);
    }
  }
  auto ci = saxl::clique_and_independence_exact(g);
  EXPECT_EQ(ci.clique.size, 4u);
  EXPECT_EQ(ci.independent.size, 2u);
  EXPECT_FALSE(saxl::clique_lower(nb, 5).has_value());
  auto four = saxl::clique_lower(nb, 4);
  ASSERT_TRUE(four.has_value());
  EXPECT_EQ(four->size(), 4u);
  EXPECT_TRUE(saxl::clique_lower(nb, 2).has_value());
  EXPECT_THROW(saxl::clique_lower(nb, 1), std::invalid_argument);
  EXPECT_TRUE(saxl::check_star(nb).holds);
}

TEST(Engine, PGL8IsJohnson) {
  auto a = saxl::psl2_c2_action({Family::PGL2, 8});
  BaseNeighbourhood nb(a);
  EXPECT_EQ(nb.regular_count(), 1u);
  EXPECT_EQ(saxl::q_exact(nb), q(11, 18));
  auto g = saxl::SaxlGraph::build(nb);
  EXPECT_EQ(g.valency(), 14u);
  for (Point x = 0; x < a.degree(); ++x) {
    for (Point y = x + 1; y < a.degree(); ++y) {
      EXPECT_EQ(g.adjacent(x, y), shared_points(a.label(x), a.label(y)) == 1);
    }
  }
  // {0, inf} against {0, 1} and against a disjoint pair.
  const auto& F = saxl::gf::field_of_order(8);
  const Point meet = a.index_of(saxl::c2_pair_label(0, saxl::c2_point_code(F, 0)));
  const Point disjoint = a.index_of(saxl::c2_pair_label(saxl::c2_point_code(F, 0), saxl::c2_point_code(F, 1)));
  EXPECT_TRUE(saxl::is_base_pair(a, 0, meet));
  EXPECT_FALSE(saxl::is_base_pair(a, 0, disjoint));
  EXPECT_THROW(saxl::is_base_pair(a, 3, 3), std::invalid_argument);
  auto clique = saxl::clique_lower(nb, 8);
  ASSERT_TRUE(clique.has_value());
  EXPECT_EQ(saxl::max_clique_vertex_transitive(g).size, 8u);
}

TEST(Engine, PGL9CliqueNumber) {
  auto a = saxl::psl2_c2_action({Family::PGL2, 9});
  auto g = saxl::SaxlGraph::build(BaseNeighbourhood(a));
  EXPECT_EQ(saxl::max_clique_vertex_transitive(g).size, 9u);
}

TEST(Engine, PSL13Suborbits) {
  auto a = saxl::psl2_c2_action({Family::PSL2, 13});
  BaseNeighbourhood nb(a);
  std::map<std::size_t, std::size_t> lengths;
  for (const auto& s : nb.suborbits()) ++lengths[s.length];
  EXPECT_EQ(lengths[12], 5u);
  EXPECT_EQ(nb.regular_count(), 5u);
  EXPECT_EQ(saxl::regular_suborbit_count(a, 7), 5u);
  const Rational exact = saxl::q_exact(nb);
  EXPECT_EQ(exact, q(31, 91));
  EXPECT_EQ(saxl::q_by_pair_count(a), exact);
  auto fusion = saxl::fuse_prime_classes(a);
  const Rational hat = saxl::q_hat(fusion);
  EXPECT_EQ(hat, saxl::q_hat_by_fixed_points(a));
  EXPECT_LE(exact, hat);
  EXPECT_LE(hat, saxl::q_tilde(fusion));
  // The value is compared against the 1/4 and 1/2 thresholds elsewhere.
  EXPECT_GT(hat, q(1, 4));

  auto c3 = saxl::psl2_c3_action({Family::PSL2, 13});
  EXPECT_EQ(saxl::q_exact(BaseNeighbourhood(c3)), q(6, 13));
}

TEST(Engine, RegularAndFrobeniusActions) {
  auto c5 = saxl::test::natural(saxl::build_chain(5, {saxl::Permutation::from_cycles("(1,2,3,4,5)", 5)}));
  BaseNeighbourhood nb(c5);
  EXPECT_EQ(nb.suborbits().size(), 5u);
  for (const auto& s : nb.suborbits()) EXPECT_EQ(s.length, 1u);
  EXPECT_EQ(saxl::q_exact(nb), 0);
  auto t = saxl::t_value(saxl::q_exact(nb), 5);
  EXPECT_TRUE(t.unbounded);
  EXPECT_EQ(t.value, 5u);

  auto agl17 = saxl::test::natural(saxl::build_chain(
      7, {saxl::Permutation::from_cycles("(1,2,3,4,5,6,7)", 7), saxl::Permutation::from_cycles("(2,4,3,7,5,6)", 7)}));
  BaseNeighbourhood fb(agl17);
  auto g = saxl::SaxlGraph::build(fb);
  EXPECT_EQ(g.valency(), 6u);  // complete graph
  std::ostringstream dot;
  g.write_dot(dot);
  EXPECT_EQ(dot.str().substr(0, 8), "graph {\n");
  std::ostringstream edges;
  g.write_edge_list(edges);
  EXPECT_EQ(edges.str().substr(0, 4), "0 1\n");
  EXPECT_EQ(saxl::q_hat(saxl::fuse_prime_classes(agl17)), saxl::q_hat_by_fixed_points(agl17));
}

TEST(Engine, SymmetricBaseRelation) {
  auto a = saxl::psl2_c3_action({Family::PSigmaL2, 9});
  BaseNeighbourhood nb(a);
  std::mt19937 rng(20211);
  std::uniform_int_distribution<Point> pick(0, static_cast<Point>(a.degree() - 1));
  for (int i = 0; i < 1000; ++i) {
    const Point x = pick(rng), y = pick(rng);
    if (x == y) continue;
    const bool xy = nb.adjacent(x, y);
    EXPECT_EQ(xy, nb.adjacent(y, x));
    if (i % 20 == 0) {
      EXPECT_EQ(xy, saxl::is_base_pair(a, x, y));
      EXPECT_EQ(xy, saxl::is_base_pair(a, y, x));
    }
  }
}

TEST(Engine, TrivialStabiliserGivesZeroQTilde) {
  auto c5 = saxl::test::natural(saxl::build_chain(5, {saxl::Permutation::from_cycles("(1,2,3,4,5)", 5)}));
  EXPECT_EQ(saxl::q_tilde(saxl::fuse_prime_classes(c5)), 0);
}

TEST(Engine, TValue) {
  EXPECT_EQ(saxl::t_value(q(13, 20), 0).value, 1u);
  EXPECT_EQ(saxl::t_value(q(199, 775), 0).value, 3u);
  EXPECT_EQ(saxl::t_value(q(1, 3), 0).value, 2u);
  EXPECT_EQ(saxl::t_value(q(1, 2), 0).value, 1u);
  EXPECT_THROW(saxl::t_value(q(1, 1), 0), std::invalid_argument);
  EXPECT_THROW(saxl::t_value(q(-1, 2), 0), std::invalid_argument);
}

TEST(Engine, LemmaBoundAndSizeInequality) {
  const Rational b = saxl::lemma_calc_bound(156, 135135, 2);
  EXPECT_EQ(b, q(24336, 135135));
  EXPECT_LT(b, q(1, 4));
  EXPECT_EQ(saxl::lemma_calc_bound(77, 77, 2), 77);
  EXPECT_EQ(saxl::lemma_calc_bound(0, 5, 3), 0);
  EXPECT_THROW(saxl::lemma_calc_bound(1, 0, 2), std::invalid_argument);

  EXPECT_TRUE(saxl::size_inequality(5040, 42));
  EXPECT_FALSE(saxl::size_inequality(36, 6));
  // PGSp6(3) with a stabiliser of type Sp2(3) wr S3.
  EXPECT_FALSE(saxl::size_inequality(saxl::BigInt("9170703360"), 82944));
}

TEST(Engine, NotTransitive) {
  auto g = saxl::test::natural(saxl::build_chain(4, {saxl::Permutation::from_cycles("(1,2)", 4)}));
  EXPECT_THROW(BaseNeighbourhood{g}, std::invalid_argument);
}

TEST(Engine, Primitivity) {
  EXPECT_TRUE(saxl::is_primitive(saxl::ksubset_action(5, 2, true)));
  EXPECT_TRUE(saxl::is_primitive(saxl::psl2_c2_action({Family::PGL2, 8})));
  // The pair stabiliser is not maximal for q = 5.
  EXPECT_FALSE(saxl::is_primitive(saxl::psl2_c2_action({Family::PGL2, 5})));
  EXPECT_TRUE(saxl::is_primitive(
      saxl::test::natural(saxl::build_chain(5, {saxl::Permutation::from_cycles("(1,2,3,4,5)", 5)}))));
  EXPECT_FALSE(saxl::is_primitive(saxl::test::natural(saxl::build_chain(
      4, {saxl::Permutation::from_cycles("(1,2)(3,4)", 4), saxl::Permutation::from_cycles("(1,3)(2,4)", 4)}))));
  EXPECT_FALSE(saxl::is_primitive(saxl::test::natural(saxl::build_chain(4, {saxl::Permutation::from_cycles("(1,2)", 4)}))));
}

TEST(Engine, GraphCap) {
  auto a = saxl::psl2_c2_action({Family::PGL2, 8});
  saxl::Limits tiny;
  tiny.graph_cap = 10;
  tiny.exact_cap = 10;
  BaseNeighbourhood nb(a);
  EXPECT_THROW(saxl::SaxlGraph::build(nb, tiny), saxl::UnsupportedError);
  auto g = saxl::SaxlGraph::build(nb);
  EXPECT_THROW(saxl::max_clique_vertex_transitive(g, tiny), saxl::UnsupportedError);
}

TEST(Engine, AnalyzeReport) {
  saxl::AnalyzeOptions opts;
  opts.cross_check = true;
  auto r = saxl::analyze(saxl::ksubset_action(5, 2, true), opts);
  EXPECT_EQ(r.degree, 10u);
  EXPECT_EQ(r.stab_order, 6);
  ASSERT_TRUE(r.clique && r.independent && r.star && r.q_hat && r.t);
  EXPECT_EQ(r.clique->size, 4u);
  EXPECT_EQ(r.independent->size, 2u);
  EXPECT_TRUE(r.star->holds);
  EXPECT_EQ(r.q_exact, q(2, 5));
  EXPECT_LE(r.q_exact, *r.q_hat);
  EXPECT_EQ(r.t->value, 2u);
  saxl::Limits small;
  small.group_cap = 10;
  auto s = saxl::analyze(saxl::ksubset_action(5, 2, true), opts, small);
  EXPECT_FALSE(s.q_hat.has_value());
  EXPECT_FALSE(s.skipped.empty());
}

TEST(Engine, ParallelRowsMatchSerial) {
  auto a = saxl::psl2_c3_action({Family::PSL2, 11});
  BaseNeighbourhood nb(a);
  saxl::Limits serial, wide;
  wide.threads = 4;
  auto g1 = saxl::SaxlGraph::build(nb, serial);
  auto g4 = saxl::SaxlGraph::build(nb, wide);
  std::ostringstream o1, o4;
  g1.write_edge_list(o1);
  g4.write_edge_list(o4);
  EXPECT_EQ(o1.str(), o4.str());
  EXPECT_EQ(saxl::check_star(nb, serial).witnesses.size(), saxl::check_star(nb, wide).witnesses.size());
}
