#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkdv/nonlinearity.hpp"
#include "gkdv/scaling_law.hpp"
#include "gkdv/solver.hpp"

namespace gkdv {

enum class Scenario {
  GaussianSmall,
  KdvSoliton,
  KdvTwoSolitons,
  MkdvStandingBreather,
  GardnerBreather,
  GardnerGaussian,
  CustomSnapshot,
};

std::string to_string(Scenario s);
Scenario parse_scenario(const std::string& name);

/// Amplitude above which the gaussian scenarios leave the small-data regime.
inline constexpr double kSmallAmplitude = 0.2;

struct ScenarioConfig {
  Scenario scenario = Scenario::GaussianSmall;
  double amplitude = 0.05;
  // Scenario parameters; only those relevant to `scenario` are read.
  double c = 1.0;
  double x0 = 0.0;
  double c1 = 1.0, c2 = 0.5;
  double x1 = -20.0, x2 = 20.0;
  double alpha = 1.0, beta = 1.0, mu = 1.0;
  std::string snapshot_path;

  NonlinearitySpec equation = NonlinearitySpec::kdv();
  double half_length = 400.0;
  std::size_t n = 8192;
  SolverConfig solver{5e-4, 200.0, true, 100};

  double window_C = 1.0;
  double c0 = 1.0;
  double soliton_v = 0.05;
  ScalingLaw law = ScalingLaw::dynamic();
  /// Smallness threshold for sup_t ||u(t)||_H1; verified, never assumed.
  double epsilon = 0.2;

  /// Write every k-th observed state as a snapshot file (0 = none).
  std::size_t snapshot_every = 1;

  Grid grid() const { return Grid(half_length, n); }
  /// Throws ConfigError on inconsistent settings.
  void validate() const;
  /// Flat `section.key = value` lines, in schema order.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

/// The equation a scenario is built for when [equation] is omitted.
NonlinearitySpec default_equation(Scenario s, double mu);

/// INI-style text: `[section]` headers and `key = value` lines, `;`/`#` comments.
/// Unknown sections or keys are errors. Relative snapshot paths resolve
/// against `base_dir`.
ScenarioConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ScenarioConfig load_config(const std::filesystem::path& path);
std::string to_ini(const ScenarioConfig& cfg);

/// Non-fatal notices about the configuration (e.g. amplitude outside the
/// small-data regime).
std::vector<std::string> config_warnings(const ScenarioConfig& cfg);

}  // namespace gkdv
