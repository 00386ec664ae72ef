#include <gtest/gtest.h>

#include "dsmfuse/analysis.hpp"
#include "dsmfuse/error.hpp"

using namespace dsmfuse;

TEST(PearlBound, Examples) {
  EXPECT_DOUBLE_EQ(pearl_flying_bound(0.05, 0.0), 0.05);
  EXPECT_DOUBLE_EQ(pearl_flying_bound(0.02, 0.5), 0.04);
  EXPECT_DOUBLE_EQ(pearl_flying_bound(0.0, 0.3), 0.0);
  EXPECT_THROW((void)pearl_flying_bound(0.1, 1.0), InputError);
  EXPECT_THROW((void)pearl_flying_bound(-0.1, 0.0), InputError);
}

TEST(Indifference, HandEvaluation) {
  const auto e = indifference_estimates(0.1, 0.1, 0.1);
  EXPECT_NEAR(e.p_fly, 0.1, 1e-15);
  EXPECT_NEAR(e.p_not_fly, 0.1, 1e-15);
  EXPECT_NEAR(e.additivity_deficit, 0.8, 1e-15);
  EXPECT_NEAR(e.bound, 0.1 / 0.9, 1e-15);
  EXPECT_TRUE(e.validity_flags.empty());
}

TEST(Indifference, Limits) {
  const auto zero = indifference_estimates(0.0, 0.0, 0.0);
  EXPECT_EQ(zero.p_fly, 0.0);
  EXPECT_EQ(zero.p_not_fly, 0.0);
  EXPECT_EQ(zero.additivity_deficit, 1.0);
  const auto small = indifference_estimates(1e-3, 1e-3, 1e-3);
  EXPECT_GT(small.additivity_deficit, 0.99);
}

TEST(Indifference, FlagsOutOfRange) {
  const auto e = indifference_estimates(0.9, 0.1, 0.5);
  EXPECT_GT(e.p_fly, 1.0);
  EXPECT_FALSE(e.validity_flags.empty());
  EXPECT_THROW((void)indifference_estimates(0.1, 0.1, 1.0), InputError);
}

TEST(ModusTollens, IndifferenceFixedPoint) {
  const auto r = modus_tollens_posteriors(0.9, 0.5, 0.5);
  EXPECT_NEAR(r.not_a_given_not_b, 0.9, 1e-15);
  EXPECT_NEAR(r.not_a_given_b, 0.1, 1e-15);
  EXPECT_TRUE(r.valid());
  const auto certain = modus_tollens_posteriors(1.0, 0.5, 0.5);
  EXPECT_DOUBLE_EQ(certain.not_a_given_not_b, 1.0);
  EXPECT_DOUBLE_EQ(certain.not_a_given_b, 0.0);
}

TEST(ModusTollens, PriorDependenceIsFlagged) {
  const auto r = modus_tollens_posteriors(0.9, 0.8, 0.3);
  EXPECT_NEAR(r.not_a_given_b, -1.4, 1e-12);
  EXPECT_FALSE(r.valid());
  EXPECT_THROW((void)modus_tollens_posteriors(0.9, 0.5, 1.0), InputError);
  EXPECT_THROW((void)modus_tollens_posteriors(0.9, 0.5, 0.0), InputError);
}
