#include <gtest/gtest.h>

#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/exact_solutions.hpp"
#include "gkdv/solver.hpp"
#include "oracles.hpp"

using namespace gkdv;

namespace {

SolverConfig config(double dt, double t_end, std::size_t stride = 1) {
  SolverConfig c;
  c.dt = dt;
  c.t_end = t_end;
  c.snapshot_stride = stride;
  return c;
}

Field gaussian(const Grid& g, double a) {
  return Field::sample(g, [&](double x) { return a * std::exp(-x * x); });
}

}  // namespace

TEST(Solver, ZeroIsFixedPoint) {
  const Grid g(20.0, 128);
  State s(0.0, Field::zeros(g));
  for (int i = 0; i < 5; ++i) s = step(s, NonlinearitySpec::kdv(), config(0.01, 1.0));
  EXPECT_DOUBLE_EQ(s.field.max_abs(), 0.0);
  EXPECT_NEAR(s.time, 0.05, 1e-15);
}

TEST(Solver, SolitonOnSmallGrid) {
  const Grid g(50.0, 1024);
  const SolitonParams sp(1.0, 2, -10.0);
  const auto traj = evolve(State(0.0, soliton_profile(sp, 0.0, g)), NonlinearitySpec::kdv(),
                           config(5e-3, 10.0, 1000));
  EXPECT_EQ(traj.final_state->time, 10.0);
  EXPECT_LT(test_oracles::max_distance(traj.final_state->field, soliton_profile(sp, 10.0, g)), 1e-6);
}

TEST(Solver, MkdvSolitonWithPadding) {
  const Grid g(50.0, 1024);
  const SolitonParams sp(1.0, 3, -10.0);
  const auto traj = evolve(State(0.0, soliton_profile(sp, 0.0, g)), NonlinearitySpec::mkdv(),
                           config(5e-3, 10.0, 1000));
  EXPECT_LT(test_oracles::max_distance(traj.final_state->field, soliton_profile(sp, 10.0, g)), 1e-6);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec::mkdv(), 0.01).padding(), 2u);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec::kdv(), 0.01).padding(), 1u);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec(2, {{5, 1.0}}), 0.01).padding(), 3u);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec::mkdv(), 0.01, false).padding(), 1u);
}

TEST(Solver, DealiasKeepsTwoThirds) {
  const Grid g(10.0, 1024);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec::kdv(), 0.01).retained_modes(), 342u);
  EXPECT_EQ(EtdRk4(g, NonlinearitySpec::kdv(), 0.01, false).retained_modes(), 512u);
}

TEST(Solver, FourthOrderInTime) {
  const Grid g(50.0, 1024);
  const SolitonParams sp(0.5, 2, -10.0);
  const State init(0.0, soliton_profile(sp, 0.0, g));
  const Field exact = soliton_profile(sp, 10.0, g);
  auto err = [&](double dt) {
    return test_oracles::max_distance(
        evolve(init, NonlinearitySpec::kdv(), config(dt, 10.0, 100000)).final_state->field, exact);
  };
  const double ratio = err(0.04) / err(0.02);
  EXPECT_GE(ratio, 10.0);
  EXPECT_LE(ratio, 24.0);
}

TEST(Solver, MassConservedPerStep) {
  const Grid g(30.0, 256);
  State s(0.0, gaussian(g, 0.5));
  const double m0 = conserved_quantities(s, NonlinearitySpec::kdv()).mass;
  for (int i = 0; i < 20; ++i) {
    s = step(s, NonlinearitySpec::kdv(), config(0.01, 1.0));
    EXPECT_NEAR(conserved_quantities(s, NonlinearitySpec::kdv()).mass, m0, 1e-14);
  }
}

TEST(Solver, TimeReversal) {
  // u(t, x) -> u(-t, -x) is a symmetry: evolve, reflect, evolve again.
  const Grid g(40.0, 512);
  const auto spec = NonlinearitySpec::kdv();
  const Field u0 = Field::sample(g, [](double x) { return 0.3 * std::exp(-(x - 1) * (x - 1)); });
  const auto fwd = evolve(State(0.0, u0), spec, config(1e-3, 2.0, 100000));
  const auto& u1 = fwd.final_state->field;
  // x_j -> -x_j maps index j to n - j on [-L, L).
  auto reflect = [&](const Field& f) {
    std::vector<double> v(f.size());
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = f[(v.size() - j) % v.size()];
    return Field(g, v);
  };
  const auto back = evolve(State(0.0, reflect(u1)), spec, config(1e-3, 2.0, 100000));
  EXPECT_LT(test_oracles::max_distance(reflect(back.final_state->field), u0), 1e-9);
}

TEST(Solver, SmallGaussianConservation) {
  const Grid g(100.0, 1024);
  const auto spec = NonlinearitySpec::kdv();
  ConservationMonitor monitor(spec);
  Observer obs = [&](const State& s) { monitor.record(s); };
  EvolveOptions eo;
  eo.retain_snapshots = false;
  evolve(State(0.0, gaussian(g, 0.05)), spec, config(1e-3, 100.0, 1000),
         std::span<const Observer>(&obs, 1), eo);
  ASSERT_EQ(monitor.reports().size(), 101u);
  for (const auto& r : monitor.reports()) {
    EXPECT_LE(std::abs(r.drift_mass), 1e-8);
    EXPECT_LE(std::abs(r.drift_l2), 1e-8);
    EXPECT_LE(std::abs(r.drift_energy), 1e-8);
  }
}

TEST(Solver, H1StaysBoundedForSmallData) {
  const Grid g(100.0, 1024);
  const auto spec = NonlinearitySpec::kdv();
  const State init(0.0, gaussian(g, 0.05));
  const double h0 = norms(init).h1;
  Observer obs = [&](const State& s) { EXPECT_LE(norms(s).h1, 2.0 * h0); };
  evolve(init, spec, config(1e-3, 20.0, 500), std::span<const Observer>(&obs, 1));
}

TEST(Evolve, EmptySpanReturnsInitial) {
  const Grid g(10.0, 64);
  SolverConfig c = config(0.01, 1.0);
  const auto traj = evolve(State(1.0, gaussian(g, 0.1)), NonlinearitySpec::kdv(), c);
  ASSERT_EQ(traj.snapshots.size(), 1u);
  EXPECT_EQ(traj.snapshots[0].time, 1.0);
  EXPECT_EQ(traj.final_state->time, 1.0);
  EXPECT_EQ(traj.steps_taken, 0u);
}

TEST(Evolve, SnapshotsAtStrideTimes) {
  const Grid g(300.0, 4096);
  const SolitonParams sp(1.0, 2);
  const auto traj = evolve(State(0.0, soliton_profile(sp, 0.0, g)), NonlinearitySpec::kdv(),
                           config(5e-3, 20.0, 2000));
  ASSERT_EQ(traj.snapshots.size(), 3u);
  EXPECT_EQ(traj.snapshots[0].time, 0.0);
  EXPECT_EQ(traj.snapshots[1].time, 10.0);
  EXPECT_EQ(traj.snapshots[2].time, 20.0);
}

TEST(Evolve, LastStepLandsOnTEnd) {
  const Grid g(10.0, 64);
  const auto traj = evolve(State(0.0, gaussian(g, 0.1)), NonlinearitySpec::kdv(), config(0.3, 1.0));
  EXPECT_EQ(traj.steps_taken, 4u);
  EXPECT_EQ(traj.final_state->time, 1.0);
  EXPECT_EQ(step_count(0.0, 200.0, 5e-4), 400000u);
}

TEST(Evolve, Preconditions) {
  const Grid g(10.0, 64);
  const State s(2.0, gaussian(g, 0.1));
  EXPECT_THROW(evolve(s, NonlinearitySpec::kdv(), config(0.01, 1.0)), PreconditionError);
  EXPECT_THROW(evolve(s, NonlinearitySpec::kdv(), config(0.0, 3.0)), PreconditionError);
  EXPECT_THROW(evolve(s, NonlinearitySpec::kdv(), config(0.01, 3.0, 0)), PreconditionError);
  // Step bound 0.5 h / max|u|.
  const State big(0.0, gaussian(g, 100.0));  // bound 0.0016
  EXPECT_THROW(evolve(big, NonlinearitySpec::kdv(), config(0.01, 1.0)), PreconditionError);
}

TEST(Evolve, BlowUpGuard) {
  const Grid g(10.0, 64);
  EtdRk4 scheme(g, NonlinearitySpec::kdv(), 0.01);
  scheme.set_reference_amplitude(1e-3);
  const Field u = gaussian(g, 1.0);
  AlignedComplex v(33);
  scheme.to_spectrum(u.values(), v);
  EXPECT_THROW(scheme.advance(v, 0.0), BlowUpError);
}

TEST(Conservation, ZeroTrajectory) {
  const Grid g(10.0, 64);
  const auto traj = evolve(State(0.0, Field::zeros(g)), NonlinearitySpec::kdv(), config(0.1, 1.0));
  for (const auto& r : conservation_report(traj, NonlinearitySpec::kdv())) {
    EXPECT_EQ(r.mass, 0.0);
    EXPECT_EQ(r.l2, 0.0);
    EXPECT_EQ(r.energy, 0.0);
    EXPECT_EQ(r.drift_mass, 0.0);
    EXPECT_EQ(r.drift_energy, 0.0);
  }
  EXPECT_THROW(conservation_report(Trajectory{}, NonlinearitySpec::kdv()), PreconditionError);
}

TEST(Conservation, SolitonIntegrals) {
  const Grid g(300.0, 4096);
  const auto q = conserved_quantities(State(0.0, soliton_profile(SolitonParams(1.0, 2), 0.0, g)),
                                      NonlinearitySpec::kdv());
  EXPECT_NEAR(q.mass, 6.0, 1e-8);
  EXPECT_NEAR(q.l2, 6.0, 1e-8);
  // E = 1/2 int Q'^2 - 1/3 int Q^3 = 3/5 - 12/5 for c = 1.
  EXPECT_NEAR(q.energy, -9.0 / 5.0, 1e-8);
}

TEST(Conservation, DriftDefinition) {
  EXPECT_NEAR(drift(1.1, 1.0), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(drift(-2.0, -1.0), -1.0);
  EXPECT_DOUBLE_EQ(drift(1e-14, 0.0), 1e-14);
}
