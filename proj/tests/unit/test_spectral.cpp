#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "gkdv/errors.hpp"
#include "gkdv/spectral.hpp"
#include "oracles.hpp"

using namespace gkdv;

namespace {

std::vector<double> values(const Field& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace

TEST(Spectral, RoundTripIsIdentity) {
  FourierTransform ft(64);
  std::vector<double> u(64), back(64);
  for (std::size_t j = 0; j < 64; ++j) u[j] = std::sin(0.3 * j) + 0.1 * j;
  AlignedComplex s(33);
  ft.forward(u, s);
  ft.inverse(s, back);
  for (std::size_t j = 0; j < 64; ++j) EXPECT_NEAR(back[j], u[j], 1e-13);
}

TEST(Spectral, ForwardMatchesDirectDft) {
  const Grid g(3.0, 32);
  const Field f = Field::sample(g, [](double x) { return std::exp(-x * x) * (1.0 + x); });
  FourierTransform ft(32);
  AlignedComplex s(17);
  ft.forward(f.values(), s);
  for (long k = 0; k <= 16; ++k) {
    const auto [re, im] = test_oracles::dft_coefficient(values(f), k);
    EXPECT_NEAR(s[k].real(), re, 1e-12);
    EXPECT_NEAR(s[k].imag(), im, 1e-12);
  }
}

TEST(Spectral, DerivativeMatchesDirectDft) {
  const Grid g(10.0, 64);
  const Field f = Field::sample(g, [](double x) { return std::exp(-0.5 * x * x) * std::cos(x); });
  for (int order = 1; order <= 3; ++order) {
    const Field d = spectral_derivative(f, order);
    const auto ref = test_oracles::dft_derivative(g, values(f), order);
    for (std::size_t j = 0; j < 64; ++j) EXPECT_NEAR(d[j], ref[j], 1e-11) << order;
  }
}

TEST(Spectral, DerivativeOfSine) {
  const Grid g(std::numbers::pi, 32);
  const Field f = Field::sample(g, [](double x) { return std::sin(3 * x); });
  const Field d1 = spectral_derivative(f, 1);
  const Field d3 = spectral_derivative(f, 3);
  for (std::size_t j = 0; j < 32; ++j) {
    EXPECT_NEAR(d1[j], 3 * std::cos(3 * g.x(j)), 1e-12);
    EXPECT_NEAR(d3[j], -27 * std::cos(3 * g.x(j)), 1e-11);
  }
}

TEST(Spectral, DerivativeRejectsBadOrder) {
  const Grid g(1.0, 16);
  EXPECT_THROW(spectral_derivative(Field::zeros(g), 0), PreconditionError);
  EXPECT_THROW(spectral_derivative(Field::zeros(g), 4), PreconditionError);
}

TEST(Spectral, GaussianNorms) {
  // a e^{-x^2}: int u^2 = a^2 sqrt(pi/2), int u_x^2 = a^2 sqrt(pi/2).
  const double a = 0.05;
  const Grid g(400.0, 8192);
  const State s(0.0, Field::sample(g, [&](double x) { return a * std::exp(-x * x); }));
  const Norms n = norms(s);
  const double l2sq = a * a * std::sqrt(std::numbers::pi / 2.0);
  EXPECT_NEAR(n.l2, std::sqrt(l2sq), 1e-14);
  EXPECT_NEAR(n.h1, std::sqrt(2.0 * l2sq), 1e-14);
  EXPECT_NEAR(n.l1, a * std::sqrt(std::numbers::pi), 1e-14);
  EXPECT_DOUBLE_EQ(n.linf, a);
}

TEST(Spectral, WindowNorms) {
  const Grid g(50.0, 1024);
  const State s(0.0, Field::sample(g, [](double x) { return std::exp(-x * x); }));
  const WindowNorms all = window_norms(s, -50.0, 50.0 - g.spacing());
  EXPECT_NEAR(all.l2_window, norms(s).l2, 1e-14);
  const WindowNorms right = window_norms(s, 10.0, 20.0);
  EXPECT_LT(right.l2_window, 1e-20);
  EXPECT_THROW(window_norms(s, 1.0, 1.0), PreconditionError);
  EXPECT_THROW(window_norms(s, -60.0, 0.0), PreconditionError);
}

TEST(Spectral, IntegrateIsRectangleRule) {
  const Grid g(2.0, 16);
  const Field f = Field::sample(g, [](double) { return 1.5; });
  EXPECT_DOUBLE_EQ(integrate(f), 6.0);
}
