#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "saxl/actions.hpp"
#include "saxl/errors.hpp"
#include "test_groups.hpp"

using saxl::Family;
using saxl::GroupVariant;
using saxl::PermGroup;

namespace {

std::size_t orbit_count(const PermGroup& g) {
  auto ids = g.orbit_ids();
  return std::set<std::uint32_t>(ids.begin(), ids.end()).size();
}

std::uint64_t max_element_order(const PermGroup& g) {
  std::uint64_t best = 0;
  g.for_each_element([&](const saxl::Permutation& x) {
    best = std::max(best, x.order());
    return true;
  });
  return best;
}

}  // namespace

TEST(Variant, OrdersAndValidation) {
  EXPECT_EQ((GroupVariant{Family::PSL2, 13}).order(), 1092u);
  EXPECT_EQ((GroupVariant{Family::PGL2, 8}).order(), 504u);
  EXPECT_EQ((GroupVariant{Family::PSigmaL2, 9}).order(), 720u);
  EXPECT_EQ((GroupVariant{Family::PGammaL2, 9}).order(), 1440u);
  EXPECT_EQ((GroupVariant{Family::DeltaPhi, 9, 1}).order(), 720u);
  EXPECT_EQ((GroupVariant{Family::DeltaPhi, 81, 1}).order(), 81u * (81 * 81 - 1) / 2 * 4);
  EXPECT_THROW((GroupVariant{Family::PSL2, 12}).validate(), std::invalid_argument);
  EXPECT_THROW((GroupVariant{Family::DeltaPhi, 27, 1}).validate(), std::invalid_argument);
  EXPECT_THROW((GroupVariant{Family::DeltaPhi, 8, 1}).validate(), std::invalid_argument);
  EXPECT_THROW((GroupVariant{Family::DeltaPhi, 9, 0}).validate(), std::invalid_argument);
  EXPECT_THROW((GroupVariant{Family::DeltaPhi, 729, 2}).validate(), std::invalid_argument);
  EXPECT_EQ(saxl::parse_family("pgammal"), Family::PGammaL2);
  EXPECT_THROW(saxl::parse_family("sl"), std::invalid_argument);
}

TEST(KSubsets, DegreesAndOrders) {
  auto a = saxl::ksubset_action(5, 2, true);
  EXPECT_EQ(a.degree(), 10u);
  EXPECT_EQ(a.group().order(), 60);
  EXPECT_EQ(a.label_text(0), "{1,2}");
  auto s = saxl::ksubset_action(6, 3, false);
  EXPECT_EQ(s.degree(), 20u);
  EXPECT_EQ(s.group().order(), 720);
  auto a8 = saxl::ksubset_action(8, 2, true);
  EXPECT_EQ(a8.group().order(), 20160);
  saxl::Limits tiny;
  tiny.point_cap = 9;
  EXPECT_THROW(saxl::ksubset_action(5, 2, false, tiny), saxl::UnsupportedError);
  EXPECT_THROW(saxl::ksubset_action(5, 5, false), std::invalid_argument);
}

TEST(C2, PGL8) {
  auto a = saxl::psl2_c2_action({Family::PGL2, 8});
  EXPECT_EQ(a.degree(), 36u);
  EXPECT_EQ(a.group().order(), 504);
  EXPECT_EQ(a.group().point_stabiliser(0).order(), 14);
  EXPECT_TRUE(a.warnings().empty());
}

TEST(C2, PSL13) {
  auto a = saxl::psl2_c2_action({Family::PSL2, 13});
  EXPECT_EQ(a.degree(), 91u);
  EXPECT_EQ(a.group().order(), 1092);
  PermGroup stab = a.group().point_stabiliser(0);
  EXPECT_EQ(stab.order(), 12);
  // D12 has a cyclic subgroup of order 6.
  EXPECT_EQ(max_element_order(stab), 6u);
  EXPECT_EQ(a.label(0), saxl::c2_pair_label(0, 13));
}

TEST(C2, SemilinearAndDiagonalVariants) {
  EXPECT_EQ(saxl::psl2_c2_action({Family::PSigmaL2, 25}).group().order(), 15600);
  EXPECT_EQ(saxl::psl2_c2_action({Family::PGammaL2, 9}).group().order(), 1440);
  auto m10 = saxl::psl2_c2_action({Family::DeltaPhi, 9, 1});
  EXPECT_EQ(m10.group().order(), 720);
  // M10 and S6 are distinct: M10 has no element of order 6 while S6 has.
  EXPECT_EQ(max_element_order(m10.group()), 8u);
  EXPECT_EQ(max_element_order(saxl::psl2_c2_action({Family::PSigmaL2, 9}).group()), 6u);
}

TEST(C2, NonMaximalWarning) {
  EXPECT_FALSE(saxl::psl2_c2_action({Family::PSL2, 5}).warnings().empty());
  EXPECT_FALSE(saxl::psl2_c2_action({Family::PGL2, 5}).warnings().empty());
  EXPECT_TRUE(saxl::psl2_c2_action({Family::PGL2, 7}).warnings().empty());
}

TEST(C3, SmallCases) {
  auto a7 = saxl::psl2_c3_action({Family::PSL2, 7});
  EXPECT_EQ(a7.degree(), 21u);
  PermGroup stab = a7.group().point_stabiliser(0);
  EXPECT_EQ(stab.order(), 8);
  EXPECT_EQ(max_element_order(stab), 4u);
  EXPECT_FALSE(a7.warnings().empty());

  auto a5 = saxl::psl2_c3_action({Family::PSL2, 5});
  EXPECT_EQ(a5.degree(), 10u);
  EXPECT_EQ(a5.group().point_stabiliser(0).order(), 6);

  auto s9 = saxl::psl2_c3_action({Family::PSigmaL2, 9});
  EXPECT_EQ(s9.degree(), 36u);
  EXPECT_EQ(s9.group().order(), 720);
}

TEST(C3, EvenAndLargerFields) {
  auto a8 = saxl::psl2_c3_action({Family::PGammaL2, 8});
  EXPECT_EQ(a8.degree(), 28u);
  EXPECT_EQ(a8.group().order(), 1512);
  auto a25 = saxl::psl2_c3_action({Family::PGammaL2, 25});
  EXPECT_EQ(a25.degree(), 300u);
  EXPECT_EQ(a25.group().point_stabiliser(0).order(), 4 * 26);
}

TEST(C3, CanonicalLabelIsAnInvolutionClass) {
  const auto& F = saxl::gf::field(3, 4);  // GF(81) for q = 9
  for (saxl::gf::Log b = 0; b < 80; ++b) {
    if (F.pow(b, 10) == F.minus_one()) {
      EXPECT_THROW(saxl::c3_canonical(F, b), std::invalid_argument);
      continue;
    }
    const auto partner = F.neg(F.pow(b, -9));
    EXPECT_EQ(saxl::c3_canonical(F, b), saxl::c3_canonical(F, partner));
    EXPECT_EQ(F.neg(F.pow(partner, -9)), b);
  }
}

TEST(Cosets, StabiliserIsTheSubgroup) {
  PermGroup g = saxl::test::psl2_prime_line(13, 2);
  PermGroup h = g.point_stabiliser(13);
  auto a = saxl::coset_action(g, h, "L2(13) on cosets of 13:6");
  EXPECT_EQ(a.degree(), 14u);
  EXPECT_EQ(a.group().order(), 1092);
  EXPECT_EQ(a.group().point_stabiliser(0).order(), h.order());
  saxl::CosetSpace space(g, h);
  for (const auto& x : h.generators()) EXPECT_EQ(space.coset_of(x), 0u);
}

TEST(Cosets, AgreesWithConcreteAction) {
  auto c2 = saxl::psl2_c2_action({Family::PSL2, 13});
  PermGroup stab = c2.group().point_stabiliser(0);
  auto cos = saxl::coset_action(c2.group(), stab);
  EXPECT_EQ(cos.degree(), c2.degree());
  EXPECT_EQ(orbit_count(cos.group().point_stabiliser(0)), orbit_count(stab));
}

TEST(Cosets, RejectsNonSubgroup) {
  PermGroup g = saxl::test::psl2_prime_line(7, 3);
  PermGroup h(8, {saxl::Permutation::from_cycles("(1,2)", 8)});
  EXPECT_THROW(saxl::coset_action(g, h), std::invalid_argument);
}

TEST(Catalogue, RoundTripAndVerification) {
  std::istringstream in(
      "# symmetric group on 5 points\n"
      "name S5_S4\n"
      "degree 5\n"
      "gen (1,2,3,4,5)\n"
      "gen (1,2)\n"
      "sub gen (1,2,3,4)\n"
      "sub gen (1,2)\n"
      "expect order 120 suborder 24\n");
  auto entries = saxl::load_catalogue(in);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(saxl::catalogue_action(entries[0]).degree(), 5u);
  std::ostringstream out;
  saxl::write_catalogue_entry(out, entries[0]);
  std::istringstream again(out.str());
  auto reread = saxl::load_catalogue(again);
  ASSERT_EQ(reread.size(), 1u);
  EXPECT_TRUE(reread[0].group.same_elements(entries[0].group));
}

TEST(Catalogue, ErrorsCarryLineNumbers) {
  std::istringstream bad("name X\ndegree 4\ngen (1,2\nexpect order 2\n");
  try {
    saxl::load_catalogue(bad);
    FAIL() << "expected ParseError";
  } catch (const saxl::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream keyword("name X\ndegree 4\nfoo 1\n");
  try {
    saxl::load_catalogue(keyword);
    FAIL() << "expected ParseError";
  } catch (const saxl::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream wrong("name X\ndegree 4\ngen (1,2,3,4)\nexpect order 5\n");
  EXPECT_THROW(saxl::load_catalogue(wrong), saxl::CorruptDataError);
  std::istringstream outside("name X\ndegree 4\ngen (1,2,3)\nsub gen (1,2)\nexpect order 3 suborder 2\n");
  EXPECT_THROW(saxl::load_catalogue(outside), saxl::CorruptDataError);
}

TEST(Actions, DistinctVariants) {
  auto names = [](std::uint32_t q) {
    std::vector<std::string> out;
    for (const auto& v : saxl::distinct_variants(q)) out.push_back(v.name());
    return out;
  };
  EXPECT_EQ(names(13).size(), 2u);
  EXPECT_EQ(names(8).size(), 2u);
  EXPECT_EQ(names(27).size(), 4u);
  // q = 81: DeltaPhi for j = 1 and j = 2.
  EXPECT_EQ(names(81).size(), 6u);
  for (std::uint32_t q : {9u, 25u, 81u}) {
    for (const auto& v : saxl::distinct_variants(q)) EXPECT_NO_THROW(v.validate()) << v.name();
  }
  EXPECT_THROW(saxl::distinct_variants(12), std::invalid_argument);
}
