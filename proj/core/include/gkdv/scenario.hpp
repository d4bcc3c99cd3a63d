#pragma once

#include <string>
#include <vector>

#include "gkdv/config.hpp"
#include "gkdv/grid.hpp"

namespace gkdv {

/// Initial state of a scenario at t = 0 (or at the stored time for
/// custom_snapshot). Admissibility and snapshot format errors propagate.
State build_initial(const ScenarioConfig& cfg);

/// Largest speed of a coherent structure in the scenario (0 for gaussian
/// data and custom snapshots).
double max_speed(const ScenarioConfig& cfg);

struct SizingCheck {
  std::string name;
  double value;
  double limit;
  bool ok;
};

/// lambda(t_end) <= L/10 (dynamic scaling, t_end >= 2) and, for traveling
/// structures, c_max t_end <= L/2.
std::vector<SizingCheck> sizing_checks(const ScenarioConfig& cfg);
std::string sizing_report(const std::vector<SizingCheck>& checks);

}  // namespace gkdv
