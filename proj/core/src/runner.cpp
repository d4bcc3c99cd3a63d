#include "gkdv/runner.hpp"

#include <algorithm>
#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"
#include "gkdv/scenario.hpp"

namespace gkdv {

namespace {

void summarize(ExperimentResult& r) {
  RunSummary& s = r.summary;
  const auto& rows = r.series.rows;
  s.rows = rows.size();
  s.steps = r.trajectory.steps_taken;
  s.status = r.trajectory.failed() ? "blowup" : "ok";
  if (rows.empty()) return;
  s.initial_h1 = rows.front().h1;
  for (const auto& row : rows) {
    if (row.h1 > s.sup_h1) {
      s.sup_h1 = row.h1;
      s.sup_h1_time = row.t;
    }
    s.sup_l1 = std::max(s.sup_l1, row.l1);
    s.max_edge = std::max(s.max_edge, row.edge_max);
    const double box[3] = {row.box_I, row.box_J, row.box_K};
    for (int i = 0; i < 3; ++i) {
      if (std::isfinite(box[i])) s.max_box_flux[i] = std::max(s.max_box_flux[i], std::abs(box[i]));
    }
  }
  s.below_epsilon = s.sup_h1 < r.config.epsilon;
  for (const auto& c : r.conservation) {
    s.max_drift_mass = std::max(s.max_drift_mass, std::abs(c.drift_mass));
    s.max_drift_l2 = std::max(s.max_drift_l2, std::abs(c.drift_l2));
    s.max_drift_energy = std::max(s.max_drift_energy, std::abs(c.drift_energy));
  }
  s.soliton_region_h1 = rows.back().soliton_h1;

  const SeriesRow* at10 = nullptr;
  for (const auto& row : rows) {
    if (std::isfinite(row.win_h1) && (!at10 || std::abs(row.t - 10.0) < std::abs(at10->t - 10.0))) {
      at10 = &row;
    }
  }
  const SeriesRow& last = rows.back();
  if (at10 && std::abs(at10->t - 10.0) < 1e-6 && last.t > 10.0 && at10->win_h1 > 0.0) {
    s.window_h1_trend = last.win_h1 / at10->win_h1;
  }
}

}  // namespace

SeriesOptions series_options(const ScenarioConfig& cfg) {
  SeriesOptions o;
  o.spec = cfg.equation;
  o.law = cfg.law;
  o.window_C = cfg.window_C;
  o.c0 = cfg.c0;
  o.soliton_v = cfg.soliton_v;
  return o;
}

ExperimentResult run_experiment(const ScenarioConfig& cfg, const RunOptions& options) {
  cfg.validate();
  const auto checks = sizing_checks(cfg);
  const bool sized = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
  if (!sized && options.enforce_sizing) {
    throw SizingError("grid too small for the requested run (L = " + format_real(cfg.half_length) +
                      ", t_end = " + format_real(cfg.solver.t_end) + "):\n" +
                      sizing_report(checks));
  }

  ExperimentResult result;
  result.config = cfg;
  result.warnings = config_warnings(cfg);

  const State initial = build_initial(cfg);
  SeriesBuilder builder(series_options(cfg));
  ConservationMonitor monitor(cfg.equation);
  std::vector<State> saved;

  const double t0 = initial.time;
  const std::size_t steps = step_count(t0, cfg.solver.t_end, cfg.solver.dt);
  const double step = steps > 0 ? (cfg.solver.t_end - t0) / static_cast<double>(steps) : 1.0;
  std::optional<IdentityProbe> probe;
  if (options.probe && steps > 0) probe.emplace(series_options(cfg), t0, step, *options.probe);

  SolverConfig solver = cfg.solver;
  const std::size_t stride = cfg.solver.snapshot_stride;
  if (probe) solver.snapshot_stride = 1;

  std::size_t row = 0;
  Observer observer = [&](const State& s) {
    if (probe) probe->observe(s);
    const auto k = static_cast<std::size_t>(std::llround((s.time - t0) / step));
    if (k % stride != 0) return;
    builder.observe(s);
    monitor.record(s);
    for (const auto& obs : options.observers) obs(s);
    if (cfg.snapshot_every > 0 && row % cfg.snapshot_every == 0) saved.push_back(s);
    ++row;
  };

  EvolveOptions eo;
  eo.retain_snapshots = false;
  try {
    result.trajectory = evolve(initial, cfg.equation, solver, std::span<const Observer>(&observer, 1), eo);
  } catch (const EvolutionError& e) {
    result.trajectory = e.partial();
  }
  result.trajectory.snapshots = std::move(saved);
  result.series = builder.finish();
  result.conservation = monitor.reports();
  if (probe) result.probes = probe->samples();
  summarize(result);
  return result;
}

ExperimentResult diagnose_states(const ScenarioConfig& cfg, const std::vector<State>& states) {
  cfg.validate();
  ExperimentResult result;
  result.config = cfg;
  result.warnings = config_warnings(cfg);
  SeriesBuilder builder(series_options(cfg));
  ConservationMonitor monitor(cfg.equation);
  for (const State& s : states) {
    builder.observe(s);
    monitor.record(s);
  }
  if (!states.empty()) result.trajectory.final_state = states.back();
  result.series = builder.finish();
  result.conservation = monitor.reports();
  summarize(result);
  return result;
}

}  // namespace gkdv
