#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gkdv/config.hpp"
#include "gkdv/errors.hpp"
#include "gkdv/exact_solutions.hpp"
#include "gkdv/runner.hpp"
#include "gkdv/spectral.hpp"
#include "gkdv/virial.hpp"

using namespace gkdv;

TEST(Properties, FirstDerivativeTwiceIsSecond) {
  const Grid g(20.0, 512);
  const Field f = Field::sample(g, [](double x) { return std::exp(-0.3 * x * x) * std::sin(x); });
  const Field dd = spectral_derivative(spectral_derivative(f, 1), 1);
  const Field d2 = spectral_derivative(f, 2);
  const double scale = d2.max_abs();
  for (std::size_t j = 0; j < f.size(); ++j) EXPECT_NEAR(dd[j], d2[j], 1e-10 * scale);
}

TEST(Properties, DerivativeIntegratesToZero) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t n : {16u, 64u, 1024u}) {
    const Grid g(5.0, n);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    EXPECT_NEAR(integrate(spectral_derivative(Field(g, v), 1)), 0.0, 1e-11);
  }
}

TEST(Properties, FullWindowEqualsNorms) {
  const Grid g(30.0, 512);
  const State s(0.0, Field::sample(g, [](double x) { return 1.0 / std::cosh(x - 3); }));
  const auto w = window_norms(s, -30.0, 30.0 - g.spacing());
  const auto n = norms(s);
  EXPECT_NEAR(w.l2_window, n.l2, 1e-12);
  EXPECT_NEAR(w.h1_window, n.h1, 1e-12);
}

TEST(Properties, F1IsAntiderivativeOfF1) {
  const NonlinearitySpec spec(2, {{3, 1.3}, {4, -0.6}, {6, 0.25}});
  for (double s = -1.0; s <= 1.0; s += 1.0 / 64) {
    const double fd = (spec.F1(s + 1e-6) - spec.F1(s - 1e-6)) / 2e-6;
    EXPECT_LE(std::abs(fd - spec.f1(s)), 1e-8 * std::max(std::abs(spec.f1(s)), 1e-2)) << s;
  }
}

TEST(Properties, FMinusF1IsPurePower) {
  for (int p : {2, 3, 4}) {
    const NonlinearitySpec spec(p, {{p + 1, 0.7}, {p + 3, -2.0}});
    for (double s = -1.5; s <= 1.5; s += 0.1) {
      const double expected = std::pow(s, p + 1) / (p + 1);
      EXPECT_LE(std::abs(spec.F(s) - spec.F1(s) - expected), 1e-14 * std::max(std::abs(expected), 1e-3));
    }
  }
}

TEST(Properties, SolitonOdeResidualOnGrid) {
  for (int p : {2, 3}) {
    const Grid g(40.0, 2048);
    const SolitonParams sp(1.0, p);
    const Field q = soliton_profile(sp, 0.0, g);
    const Field qxx = spectral_derivative(q, 2);
    for (std::size_t j = 0; j < q.size(); ++j) {
      EXPECT_LE(std::abs(qxx[j] - q[j] + std::pow(q[j], p)), 1e-11) << p << " " << g.x(j);
    }
  }
}

TEST(Properties, StandingBreatherIsPeriodic) {
  const auto b = MkdvBreatherParams::standing(0.3);
  const double period = 2 * M_PI / (0.3 * std::abs(b.delta()));
  EXPECT_NEAR(period, b.internal_period(), 1e-12);
  const Grid g(40.0, 2048);
  for (double t = 0.0; t < 30.0; t += 1.37) {
    const State s0(t, mkdv_breather(b, t, g));
    const State s1(t + period, mkdv_breather(b, t + period, g));
    EXPECT_LE(std::abs(window_norms(s0, -5, 5).l2_window - window_norms(s1, -5, 5).l2_window), 1e-9);
  }
}

TEST(Properties, GardnerAdmissibilitySignTest) {
  for (double mu : {0.5, 1.0, 4.0}) {
    for (double a = 0.05; a < 0.6; a += 0.01) {
      const double b = std::sqrt(3.0) * a;
      const double d = GardnerBreatherParams::admissibility(a, b, mu);
      if (d > 0) {
        EXPECT_NO_THROW(GardnerBreatherParams(a, b, mu));
      } else {
        EXPECT_THROW(GardnerBreatherParams(a, b, mu), AdmissibilityError);
      }
    }
  }
  // Delta = 0 exactly: 1/4 + 1/4 = 2 / (9 * 4/9).
  EXPECT_EQ(GardnerBreatherParams::admissibility(0.5, 0.5, 4.0 / 9.0), 0.0);
  EXPECT_THROW(GardnerBreatherParams(0.5, 0.5, 4.0 / 9.0), AdmissibilityError);
}

TEST(Properties, GardnerFiniteForLargeMu) {
  for (double mu : {1e2, 1e4, 1e8}) {
    const GardnerBreatherParams p(1.0, 1.0, mu);
    for (double x = -10; x <= 10; x += 0.5) EXPECT_TRUE(std::isfinite(p.value(0.3, x)));
  }
}

TEST(Properties, ResidualConvergesWithResolution) {
  const auto sol = closed_form(GardnerBreatherParams(1.0, 1.0, 1.0));
  const auto spec = NonlinearitySpec::gardner(1.0);
  const double r1 = pde_residual(sol, 0.0, Grid(50.0, 512), spec);
  const double r2 = pde_residual(sol, 0.0, Grid(50.0, 1024), spec);
  const double r3 = pde_residual(sol, 0.0, Grid(50.0, 2048), spec);
  EXPECT_LT(r2, 0.1 * r1);
  EXPECT_LT(r3, r2);
  EXPECT_LT(r3, 1e-8);
}

TEST(Properties, CumulativeIntegralsNondecreasing) {
  auto cfg = parse_config(
      "[scenario]\nname = gaussian_small\namplitude = 0.1\n"
      "[grid]\nL = 100\nn = 1024\n[solver]\ndt = 1e-3\nt_end = 12\nsnapshot_stride = 100\n");
  const auto r = run_experiment(cfg);
  for (const char* c : {"cum_i2", "cum_i3", "cum_i9", "cum_kato"}) {
    const auto v = r.series.column(c);
    for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GE(v[i], v[i - 1]) << c;
    EXPECT_GT(v.back(), 0.0) << c;
  }
}

TEST(Properties, SolitonLeavesWindow) {
  const Grid g(300.0, 4096);
  const SolitonParams sp(1.0, 2);
  double prev = INFINITY;
  for (double t : {10.0, 20.0, 40.0, 80.0}) {
    const auto w = window_interval(t, 1.0);
    const double l2 = window_norms(State(t, soliton_profile(sp, t, g)), w.a, w.b).l2_window;
    EXPECT_LT(l2, prev);
    prev = l2;
  }
  EXPECT_LT(prev, 1e-20);
}

TEST(Properties, ManifestFlagsSmallness) {
  auto cfg = parse_config(
      "[scenario]\nname = gaussian_small\namplitude = 0.5\nepsilon = 0.2\n"
      "[grid]\nL = 100\nn = 1024\n[solver]\ndt = 1e-3\nt_end = 1\nsnapshot_stride = 100\n");
  const auto r = run_experiment(cfg);
  EXPECT_GT(r.summary.sup_h1, 0.2);
  EXPECT_FALSE(r.summary.below_epsilon);
}

TEST(Properties, SizedRunKeepsBoundaryQuiet) {
  // Default desk-scale Gaussian run: every snapshot's boundary value below 1e-10.
  ScenarioConfig cfg;
  cfg.amplitude = 0.05;
  cfg.solver.t_end = 4.0;
  cfg.solver.snapshot_stride = 200;
  cfg.snapshot_every = 0;
  double worst = 0.0, worst_t = 0.0;
  RunOptions opts;
  opts.observers.push_back([&](const State& s) {
    if (std::abs(s.field[0]) > worst) {
      worst = std::abs(s.field[0]);
      worst_t = s.time;
    }
  });
  run_experiment(cfg, opts);
  EXPECT_LE(worst, 1e-10) << "at t = " << worst_t;
}
