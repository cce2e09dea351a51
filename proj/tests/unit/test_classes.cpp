#include <gtest/gtest.h>

#include <map>

#include "saxl/classes.hpp"
#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"
#include "saxl/subgroups.hpp"
#include "test_groups.hpp"

using saxl::Permutation;
using saxl::PermGroup;

TEST(Classes, S3) {
  PermGroup s3 = saxl::test::symmetric(3);
  auto classes = saxl::prime_order_class_reps(s3);
  ASSERT_EQ(classes.size(), 2u);
  EXPECT_EQ(classes[0].order, 2u);
  EXPECT_EQ(classes[0].class_size, 3u);
  EXPECT_EQ(classes[1].order, 3u);
  EXPECT_EQ(classes[1].class_size, 2u);
}

TEST(Classes, TrivialGroup) { EXPECT_TRUE(saxl::prime_order_class_reps(PermGroup(4)).empty()); }

TEST(Classes, PartitionAndCentralisers) {
  for (const PermGroup& g : {saxl::test::psl2_prime_line(13, 2), saxl::test::asl23(),
                             saxl::test::symmetric(5)}) {
    auto classes = saxl::prime_order_class_reps(g);
    const auto order = g.order_u64();
    std::uint64_t total = 0;
    std::map<std::uint64_t, std::uint64_t> by_order;
    for (const auto& c : classes) {
      EXPECT_TRUE(saxl::is_prime(c.order));
      EXPECT_EQ(c.class_size * saxl::centraliser_order(g, c.rep), order);
      total += c.class_size;
      by_order[c.order] += c.class_size;
    }
    std::uint64_t brute = 0;
    std::map<std::uint64_t, std::uint64_t> brute_by_order;
    g.for_each_element([&](const Permutation& x) {
      if (saxl::is_prime(x.order())) {
        ++brute;
        ++brute_by_order[x.order()];
        int hits = 0;
        for (const auto& c : classes) hits += c.class_elements->contains(x);
        EXPECT_EQ(hits, 1);
      }
      return true;
    });
    EXPECT_EQ(total, brute);
    EXPECT_EQ(by_order, brute_by_order);
  }
}

TEST(Classes, Psl213PrimeOrders) {
  auto classes = saxl::prime_order_class_reps(saxl::test::psl2_prime_line(13, 2));
  std::map<std::uint64_t, int> counts;
  for (const auto& c : classes) ++counts[c.order];
  EXPECT_EQ(counts, (std::map<std::uint64_t, int>{{2, 1}, {3, 1}, {7, 3}, {13, 2}}));
}

TEST(Classes, ClassCap) {
  saxl::Limits lim;
  lim.class_cap = 5;
  EXPECT_THROW(saxl::prime_order_class_reps(saxl::test::symmetric(5), lim), saxl::UnsupportedError);
}

TEST(Subgroups, SylowOfS4) {
  PermGroup p = saxl::find_subgroup(saxl::test::symmetric(4), {saxl::SubgroupSpec::Sylow{2}});
  EXPECT_EQ(p.order(), 8);
  PermGroup p3 = saxl::find_subgroup(saxl::test::symmetric(4), {saxl::SubgroupSpec::Sylow{3}});
  EXPECT_EQ(p3.order(), 3);
}

TEST(Subgroups, M11NormaliserOfQuaternion) {
  PermGroup m11 = saxl::test::m11();
  ASSERT_EQ(m11.order(), 7920);
  PermGroup s = saxl::find_subgroup(m11, {saxl::SubgroupSpec::Sylow{2}});
  ASSERT_EQ(s.order(), 16);
  // The quaternion subgroup: order 8, generated by two elements of order 4.
  PermGroup q8 = saxl::find_subgroup(
      s, {saxl::SubgroupSpec::TwoGenerator{8, 4, 4, std::uint64_t{4}}});
  EXPECT_EQ(q8.order(), 8);
  PermGroup n = saxl::find_subgroup(m11, {saxl::SubgroupSpec::Normaliser{q8}});
  EXPECT_EQ(n.order(), 48);
  EXPECT_TRUE(m11.contains_group(n));
  for (const auto& x : n.generators()) {
    for (const auto& k : q8.generators()) EXPECT_TRUE(q8.contains(saxl::conjugate(k, x)));
  }
}

TEST(Subgroups, Psl217S4) {
  PermGroup g = saxl::test::psl2_prime_line(17, 3);
  ASSERT_EQ(g.order(), 2448);
  PermGroup h = saxl::find_subgroup(g, {saxl::SubgroupSpec::TwoGenerator{24, 4, 3, std::uint64_t{2}}});
  EXPECT_EQ(h.order(), 24);
  EXPECT_EQ(g.order() / h.order(), 102);
}

TEST(Subgroups, ClosureAndNotFound) {
  PermGroup s5 = saxl::test::symmetric(5);
  PermGroup c = saxl::find_subgroup(s5, {saxl::SubgroupSpec::Closure{{Permutation::from_cycles("(1,2,3)", 5)}}});
  EXPECT_EQ(c.order(), 3);
  EXPECT_THROW(saxl::find_subgroup(s5, {saxl::SubgroupSpec::TwoGenerator{7, 7, 7, std::nullopt}}),
               saxl::NotFoundError);
  EXPECT_THROW(saxl::find_subgroup(saxl::test::symmetric(4),
                                   {saxl::SubgroupSpec::Closure{{Permutation::from_cycles("(1,5)", 5)}}}),
               std::invalid_argument);
}
