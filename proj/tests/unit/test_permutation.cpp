#include <gtest/gtest.h>

#include <random>

#include "saxl/errors.hpp"
#include "saxl/permutation.hpp"

using saxl::Permutation;

TEST(Permutation, ComposeIsLeftToRight) {
  Permutation p{1, 2, 0};  // (0 1 2)
  Permutation t{1, 0, 2};  // (0 1)
  Permutation pt = p * t;
  EXPECT_EQ(std::vector<saxl::Point>(pt.images().begin(), pt.images().end()),
            (std::vector<saxl::Point>{0, 2, 1}));
}

TEST(Permutation, IdentityAndInverse) {
  Permutation p = Permutation::from_cycles("(1,4,2)(3,5)", 6);
  EXPECT_EQ(p * Permutation(6), p);
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.fixed_point_count(), 1u);
  EXPECT_EQ(p.to_cycle_string(), "(1,4,2)(3,5)");
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<saxl::Point>{0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation{3}, std::invalid_argument);
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(Permutation(3) * Permutation(4), std::invalid_argument);
}

TEST(Permutation, CycleParsing) {
  EXPECT_TRUE(Permutation::from_cycles("()", 4).is_identity());
  EXPECT_THROW(Permutation::from_cycles("(1,5)", 4), saxl::ParseError);
  EXPECT_THROW(Permutation::from_cycles("(1,2", 4), saxl::ParseError);
  EXPECT_THROW(Permutation::from_cycles("(1,2)(2,3)", 4), saxl::ParseError);
  EXPECT_EQ(Permutation::from_cycles("( 1 2 3 )", 3), (Permutation{1, 2, 0}));
}

TEST(Permutation, DegenerateDegrees) {
  Permutation zero(0);
  EXPECT_TRUE(zero.is_identity());
  EXPECT_EQ(zero.order(), 1u);
  EXPECT_TRUE((Permutation(1) * Permutation(1)).is_identity());
}

TEST(Permutation, ConjugationConvention) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<saxl::Point> a(9), b(9);
    std::iota(a.begin(), a.end(), 0u);
    std::iota(b.begin(), b.end(), 0u);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    Permutation x(a), g(b);
    EXPECT_EQ(saxl::conjugate(x, g), g.inverse() * x * g);
    EXPECT_EQ(saxl::power(x, 5), x * x * x * x * x);
    EXPECT_TRUE((x * x.inverse()).is_identity());
  }
}
