#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkdv/config.hpp"
#include "gkdv/series.hpp"
#include "gkdv/solver.hpp"

namespace gkdv {

/// Sizing preconditions failed; what() carries the full report.
class SizingError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Whole-run figures written to the manifest.
struct RunSummary {
  std::string status = "ok";  // "ok" or "blowup"
  std::size_t steps = 0;
  std::size_t rows = 0;
  double initial_h1 = 0.0;
  double sup_h1 = 0.0;
  double sup_h1_time = 0.0;
  bool below_epsilon = true;
  double sup_l1 = 0.0;
  double max_edge = 0.0;
  double max_box_flux[3] = {0.0, 0.0, 0.0};  // I, J, K
  double max_drift_mass = 0.0;
  double max_drift_l2 = 0.0;
  double max_drift_energy = 0.0;
  std::optional<double> window_h1_trend;  // win_h1(t_end) / win_h1(10)
  double soliton_region_h1 = 0.0;          // at the last row
};

struct RunOptions {
  bool enforce_sizing = true;
  /// Dense identity probes; forces observation of every step.
  std::optional<ProbeOptions> probe;
  /// Extra observers of every row state.
  std::vector<Observer> observers;
};

struct ExperimentResult {
  ScenarioConfig config;
  /// snapshots holds every snapshot_every-th row state.
  Trajectory trajectory;
  VirialSeries series;
  std::vector<ConservationReport> conservation;
  std::vector<ProbeSample> probes;
  RunSummary summary;
  std::vector<std::string> warnings;
  bool blew_up() const noexcept { return trajectory.failed(); }
};

SeriesOptions series_options(const ScenarioConfig& cfg);

/// Builds the initial state, evolves it and records every diagnostic. A
/// blow-up does not throw: the partial result comes back with
/// summary.status = "blowup". Throws SizingError before evolving when the
/// grid is too small for t_end.
ExperimentResult run_experiment(const ScenarioConfig& cfg, const RunOptions& options = {});

/// Recomputes series and summary from stored states (e.g. a snapshot
/// directory) without evolving.
ExperimentResult diagnose_states(const ScenarioConfig& cfg, const std::vector<State>& states);

}  // namespace gkdv
