#include <gtest/gtest.h>

#include <random>
#include <set>

#include "saxl/errors.hpp"
#include "saxl/perm_group.hpp"
#include "test_groups.hpp"

using saxl::BigInt;
using saxl::Permutation;
using saxl::PermGroup;
using saxl::Point;

using saxl::test::asl23;
using saxl::test::psl2_prime_line;
using saxl::test::symmetric;

TEST(PermGroup, Orders) {
  EXPECT_EQ(symmetric(7).order(), 5040);
  EXPECT_EQ(psl2_prime_line(13, 2).order(), 1092);
  EXPECT_EQ(asl23().order(), 216);
  EXPECT_EQ(symmetric(12).order(), BigInt(479001600));
}

TEST(PermGroup, TrivialAndDegenerate) {
  PermGroup t(5);
  EXPECT_EQ(t.order(), 1);
  EXPECT_EQ(t.orbit(3), std::vector<Point>{3});
  EXPECT_EQ(PermGroup(0).order(), 1);
  EXPECT_EQ(saxl::build_chain(1, {Permutation(1)}).order(), 1);
  EXPECT_EQ(t.elements().size(), 1u);
}

TEST(PermGroup, OrbitStabiliser) {
  for (const PermGroup& g : {symmetric(7), psl2_prime_line(13, 2), asl23()}) {
    for (Point pt = 0; pt < g.degree(); ++pt) {
      auto orb = g.orbit(pt);
      PermGroup h = g.point_stabiliser(pt);
      EXPECT_EQ(BigInt(orb.size()) * h.order(), g.order());
      for (const auto& gen : h.generators()) EXPECT_EQ(gen[pt], pt);
      EXPECT_EQ(h.point_stabiliser(pt).order(), h.order());
      EXPECT_TRUE(g.contains_group(h));
    }
  }
  EXPECT_EQ(symmetric(7).point_stabiliser(0).order(), 720);
}

TEST(PermGroup, RegularActionHasTrivialStabiliser) {
  PermGroup c = saxl::build_chain(6, {Permutation::from_cycles("(1,2,3,4,5,6)", 6)});
  EXPECT_EQ(c.point_stabiliser(2).order(), 1);
  Point pts[] = {0, 1, 2, 3, 4, 5};
  EXPECT_EQ(symmetric(6).pointwise_stabiliser(pts).order(), 1);
}

TEST(PermGroup, SiftingProperty) {
  std::mt19937 rng(12345);
  PermGroup g = psl2_prime_line(13, 2);
  const auto& gens = g.generators();
  for (int trial = 0; trial < 300; ++trial) {
    Permutation x(g.degree());
    for (int k = 0; k < 20; ++k) x = x * gens[rng() % gens.size()];
    EXPECT_TRUE(g.contains(x));
    std::vector<Point> img(g.degree());
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    Permutation y(img);
    // A uniform element of S14 lies in PSL2(13) with probability 1092/14!.
    EXPECT_FALSE(g.contains(y));
  }
  for (const auto& gen : g.generators()) EXPECT_TRUE(g.contains(gen));
}

TEST(PermGroup, EnumerationIsExact) {
  PermGroup g = asl23();
  std::set<Permutation> seen;
  std::set<std::vector<Point>> keys;
  g.for_each_element([&](const Permutation& x) {
    EXPECT_TRUE(g.contains(x));
    seen.insert(x);
    keys.insert(g.element_key(x));
    return true;
  });
  EXPECT_EQ(seen.size(), 216u);
  EXPECT_EQ(keys.size(), 216u);
}

TEST(PermGroup, EnumerationCap) {
  saxl::Limits lim;
  lim.group_cap = 100;
  EXPECT_THROW(symmetric(6).for_each_element([](const Permutation&) { return true; }, lim),
               saxl::UnsupportedError);
}

TEST(PermGroup, BasePrefixAndKnownOrder) {
  PermGroup g = psl2_prime_line(13, 2);
  Point prefix[] = {5, 9};
  PermGroup r = g.with_base_prefix(prefix);
  EXPECT_EQ(r.base()[0], 5u);
  EXPECT_EQ(r.base()[1], 9u);
  EXPECT_EQ(r.order(), 1092);
  EXPECT_EQ(g.pointwise_stabiliser(prefix).order(), 6);  // 1092 / (14 * 13)
  // A wrong order hint cannot produce a wrong chain.
  PermGroup h(g.degree(), g.generators(), BigInt(5000));
  EXPECT_EQ(h.order(), 1092);
}
