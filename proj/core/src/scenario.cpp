#include "gkdv/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "gkdv/errors.hpp"
#include "gkdv/exact_solutions.hpp"
#include "gkdv/format.hpp"
#include "gkdv/snapshot_io.hpp"

namespace gkdv {

State build_initial(const ScenarioConfig& cfg) {
  cfg.validate();
  const Grid g = cfg.grid();
  switch (cfg.scenario) {
    case Scenario::GaussianSmall:
    case Scenario::GardnerGaussian: {
      const double a = cfg.amplitude;
      return State(0.0, Field::sample(g, [a](double x) { return a * std::exp(-x * x); }));
    }
    case Scenario::KdvSoliton:
      return State(0.0, soliton_profile(SolitonParams(cfg.c, 2, cfg.x0), 0.0, g));
    case Scenario::KdvTwoSolitons: {
      const SolitonParams a(cfg.c1, 2, cfg.x1);
      const SolitonParams b(cfg.c2, 2, cfg.x2);
      return State(0.0, Field::sample(g, [&](double x) { return a.value(0, x) + b.value(0, x); }));
    }
    case Scenario::MkdvStandingBreather:
      return State(0.0, mkdv_breather(MkdvBreatherParams::standing(cfg.alpha, cfg.x0), 0.0, g));
    case Scenario::GardnerBreather:
      return State(0.0, gardner_breather(GardnerBreatherParams(cfg.alpha, cfg.beta, cfg.mu, cfg.x0),
                                         0.0, g));
    case Scenario::CustomSnapshot: {
      State s = read_snapshot(cfg.snapshot_path);
      if (!(s.field.grid() == g)) {
        throw ConfigError("snapshot grid (L = " + format_real(s.field.grid().half_length()) +
                          ", n = " + std::to_string(s.field.grid().size()) +
                          ") does not match [grid]");
      }
      return s;
    }
  }
  throw ConfigError("unhandled scenario");
}

double max_speed(const ScenarioConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::KdvSoliton: return cfg.c;
    case Scenario::KdvTwoSolitons: return std::max(cfg.c1, cfg.c2);
    case Scenario::MkdvStandingBreather: return 0.0;
    case Scenario::GardnerBreather:
      return std::abs(3.0 * cfg.alpha * cfg.alpha - cfg.beta * cfg.beta);
    default: return 0.0;
  }
}

std::vector<SizingCheck> sizing_checks(const ScenarioConfig& cfg) {
  std::vector<SizingCheck> out;
  const double L = cfg.half_length;
  const double t_end = cfg.solver.t_end;
  if (cfg.law.mode() == ScalingLaw::Mode::Dynamic && t_end >= 2.0) {
    const double lam = cfg.law.eval(t_end).lam;
    out.push_back({"lambda(t_end) <= L/10", lam, L / 10.0, lam <= L / 10.0});
  }
  const double c = max_speed(cfg);
  if (c > 0.0) {
    out.push_back({"c_max * t_end <= L/2", c * t_end, L / 2.0, c * t_end <= L / 2.0});
  }
  return out;
}

std::string sizing_report(const std::vector<SizingCheck>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += (c.ok ? "  ok    " : "  FAIL  ") + c.name + ": " + format_real(c.value) + " vs " +
           format_real(c.limit) + "\n";
  }
  return out;
}

}  // namespace gkdv
