#include <gtest/gtest.h>

#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/weight_profile.hpp"
#include "oracles.hpp"

using namespace gkdv;

namespace {

std::vector<WeightProfile> all_profiles() {
  std::vector<WeightProfile> out;
  for (int k = 1; k <= 3; ++k) out.push_back(WeightProfile::tanh(k));
  for (int m : {2, 4, 6, 8}) out.push_back(WeightProfile::sech(m));
  return out;
}

}  // namespace

TEST(WeightProfile, ValuesAtZero) {
  const auto t1 = weight_eval(WeightProfile::tanh(1), 0.0);
  EXPECT_EQ(t1.w, 0.0);
  EXPECT_EQ(t1.d1, 1.0);
  EXPECT_EQ(t1.d2, 0.0);
  EXPECT_EQ(t1.d3, -2.0);
  const auto t3 = weight_eval(WeightProfile::tanh(3), 0.0);
  EXPECT_DOUBLE_EQ(t3.d1, 3.0);
  EXPECT_DOUBLE_EQ(t3.d3, -54.0);
  for (int m : {2, 4, 6, 8}) {
    const auto s = weight_eval(WeightProfile::sech(m), 0.0);
    EXPECT_EQ(s.w, 1.0);
    EXPECT_EQ(s.d1, 0.0);
    EXPECT_DOUBLE_EQ(s.d2, -m);
    EXPECT_EQ(s.d3, 0.0);
  }
}

TEST(WeightProfile, ClosedForms) {
  for (double y = -5; y <= 5; y += 0.7) {
    EXPECT_NEAR(WeightProfile::tanh(2).eval(y).w, std::tanh(2 * y), 1e-15);
    EXPECT_NEAR(WeightProfile::sech(6).eval(y).w, std::pow(1.0 / std::cosh(y), 6), 1e-15);
  }
}

TEST(WeightProfile, Parity) {
  for (const auto& w : all_profiles()) {
    for (double y : {0.3, 1.7, 4.0}) {
      const auto p = w.eval(y), m = w.eval(-y);
      const double s = w.is_odd() ? -1.0 : 1.0;
      EXPECT_NEAR(m.w, s * p.w, 1e-15);
      EXPECT_NEAR(m.d1, -s * p.d1, 1e-14);
      EXPECT_NEAR(m.d2, s * p.d2, 1e-13);
      EXPECT_NEAR(m.d3, -s * p.d3, 1e-12);
    }
  }
}

TEST(WeightProfile, Names) {
  for (const auto& w : all_profiles()) EXPECT_EQ(WeightProfile::parse(w.name()), w);
  EXPECT_EQ(WeightProfile::parse("tanh_1").parameter(), 1);
  EXPECT_EQ(WeightProfile::parse("sech_8").family(), WeightProfile::Family::Sech);
  EXPECT_THROW(WeightProfile::parse("tanh_4"), PreconditionError);
  EXPECT_THROW(WeightProfile::parse("sech_3"), PreconditionError);
  EXPECT_THROW(WeightProfile::parse("gauss_1"), PreconditionError);
  EXPECT_THROW(WeightProfile::parse("tanh"), PreconditionError);
  EXPECT_THROW(WeightProfile::tanh(0), PreconditionError);
}

TEST(WeightProfile, DerivativesAgainstFiniteDifferences) {
  // Five-point stencil; its truncation is far below 1e-7 for every h here.
  for (const auto& w : all_profiles()) {
    const std::function<double(double)> f[3] = {[&](double y) { return w.eval(y).w; },
                                                [&](double y) { return w.eval(y).d1; },
                                                [&](double y) { return w.eval(y).d2; }};
    for (double h : {1e-4, 1e-5}) {
      for (int i = 0; i <= 4000; ++i) {
        const double y = -10.0 + 5e-3 * i;
        const auto c = w.eval(y);
        const double exact[3] = {c.d1, c.d2, c.d3};
        for (int o = 0; o < 3; ++o) {
          ASSERT_NEAR(test_oracles::central5(f[o], y, h), exact[o], 1e-7)
              << w.name() << " order " << o + 1 << " y " << y << " h " << h;
        }
      }
    }
  }
}
