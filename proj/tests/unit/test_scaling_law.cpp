#include <gtest/gtest.h>

#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/scaling_law.hpp"
#include "oracles.hpp"

using namespace gkdv;

TEST(ScalingLaw, FrozenValues) {
  const auto law = ScalingLaw::dynamic();
  EXPECT_NEAR(law.eval(4.0).lam, 1.4426950408889634, 1e-15);  // 2 / log 4
  EXPECT_NEAR(law.eval(100.0).lam, 2.1714724095162588, 1e-15);
  EXPECT_NEAR(law.eval(std::exp(2.0)).lam_prime, 0.0, 1e-16);
}

TEST(ScalingLaw, DynamicNeedsTAtLeastTwo) {
  const auto law = ScalingLaw::dynamic();
  EXPECT_THROW(law.eval(1.999), PreconditionError);
  EXPECT_NO_THROW(law.eval(2.0));
  EXPECT_FALSE(law.evaluable(1.0));
  EXPECT_TRUE(law.evaluable(2.0));
}

TEST(ScalingLaw, Constant) {
  const auto law = ScalingLaw::constant(3.0);
  const auto v = law.eval(0.5);
  EXPECT_EQ(v.lam, 3.0);
  EXPECT_EQ(v.lam_prime, 0.0);
  EXPECT_EQ(v.ratio, 0.0);
  EXPECT_TRUE(law.evaluable(0.0));
  EXPECT_THROW(ScalingLaw::constant(0.0), PreconditionError);
  EXPECT_THROW(ScalingLaw::constant(-1.0), PreconditionError);
}

TEST(ScalingLaw, DerivativesAgainstFiniteDifferences) {
  // Relative to lambda / t, since lambda' changes sign at e^2.
  const auto law = ScalingLaw::dynamic();
  auto lam = [&](double t) { return law.eval(t).lam; };
  for (int i = 0; i <= 2000; ++i) {
    const double t = 2.5 * std::pow(1e6 / 2.5, i / 2000.0);
    const auto v = law.eval(t);
    const double fd = test_oracles::central5(lam, t, 1e-4 * t);
    EXPECT_LE(std::abs(fd - v.lam_prime) / (v.lam / t), 1e-8) << t;
    EXPECT_LE(std::abs(fd / v.lam - v.ratio) * t, 1e-8) << t;
  }
}
