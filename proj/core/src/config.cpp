#include "gkdv/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"

namespace gkdv {

namespace pt = boost::property_tree;

namespace {

const std::pair<Scenario, const char*> kScenarioNames[] = {
    {Scenario::GaussianSmall, "gaussian_small"},
    {Scenario::KdvSoliton, "kdv_soliton"},
    {Scenario::KdvTwoSolitons, "kdv_two_solitons"},
    {Scenario::MkdvStandingBreather, "mkdv_standing_breather"},
    {Scenario::GardnerBreather, "gardner_breather"},
    {Scenario::GardnerGaussian, "gardner_gaussian"},
    {Scenario::CustomSnapshot, "custom_snapshot"},
};

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"scenario",
       {"name", "amplitude", "c", "x0", "c1", "c2", "x1", "x2", "alpha", "beta", "mu", "snapshot",
        "epsilon"}},
      {"equation", {"p", "f1"}},
      {"grid", {"L", "n"}},
      {"solver", {"dt", "t_end", "dealias", "snapshot_stride"}},
      {"diagnostics", {"window_C", "c0", "soliton_v", "scaling", "scaling_c0"}},
      {"output", {"snapshot_every"}},
  };
  return s;
}

bool is_soliton_scenario(Scenario s) {
  return s == Scenario::KdvSoliton || s == Scenario::KdvTwoSolitons;
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw ConfigError(key + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + text + "'");
  }
  if (used != text.size()) throw ConfigError(key + ": expected an integer, got '" + text + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key + ": expected true or false, got '" + text + "'");
}

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  std::optional<std::string> get(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto v = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!v) return std::nullopt;
    return *v;
  }
  bool has_section(const std::string& section) const {
    return static_cast<bool>(tree_.get_child_optional(section));
  }
  void real(const std::string& section, const std::string& key, double& out) const {
    if (auto v = get(section, key)) out = parse_real(section + "." + key, *v);
  }

 private:
  const pt::ptree& tree_;
};

}  // namespace

std::string to_string(Scenario s) {
  for (const auto& [value, name] : kScenarioNames) {
    if (value == s) return name;
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& name) {
  for (const auto& [value, text] : kScenarioNames) {
    if (name == text) return value;
  }
  throw ConfigError("unknown scenario '" + name + "'");
}

NonlinearitySpec default_equation(Scenario s, double mu) {
  switch (s) {
    case Scenario::MkdvStandingBreather: return NonlinearitySpec::mkdv();
    case Scenario::GardnerBreather:
    case Scenario::GardnerGaussian: return NonlinearitySpec::gardner(mu);
    default: return NonlinearitySpec::kdv();
  }
}

void ScenarioConfig::validate() const {
  auto positive = [](const char* key, double v) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(key) + " must be positive");
  };
  try {
    (void)grid();
    solver.validate();
  } catch (const ConfigError&) {
    throw;
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  positive("diagnostics.window_C", window_C);
  positive("diagnostics.c0", c0);
  positive("scenario.epsilon", epsilon);
  if (!(soliton_v >= 0.0)) throw ConfigError("diagnostics.soliton_v must be nonnegative");
  if (!std::isfinite(amplitude)) throw ConfigError("scenario.amplitude must be finite");

  const NonlinearitySpec expected = default_equation(scenario, mu);
  switch (scenario) {
    case Scenario::KdvSoliton:
      positive("scenario.c", c);
      break;
    case Scenario::KdvTwoSolitons:
      positive("scenario.c1", c1);
      positive("scenario.c2", c2);
      if (std::abs(x2 - x1) < 40.0) {
        throw ConfigError("kdv_two_solitons needs |x2 - x1| >= 40");
      }
      break;
    case Scenario::MkdvStandingBreather:
      positive("scenario.alpha", alpha);
      break;
    case Scenario::GardnerBreather:
      positive("scenario.alpha", alpha);
      positive("scenario.beta", beta);
      positive("scenario.mu", mu);
      break;
    case Scenario::GardnerGaussian:
      positive("scenario.mu", mu);
      break;
    case Scenario::CustomSnapshot:
      if (snapshot_path.empty()) throw ConfigError("custom_snapshot needs scenario.snapshot");
      break;
    case Scenario::GaussianSmall:
      break;
  }
  const bool exact = scenario == Scenario::KdvSoliton || scenario == Scenario::KdvTwoSolitons ||
                     scenario == Scenario::MkdvStandingBreather ||
                     scenario == Scenario::GardnerBreather;
  if (exact && !(equation == expected)) {
    throw ConfigError("scenario " + to_string(scenario) + " requires equation p = " +
                      std::to_string(expected.p()) + ", f1 = " + expected.f1_to_string());
  }
}

std::vector<std::pair<std::string, std::string>> ScenarioConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](std::string k, std::string v) { out.emplace_back(std::move(k), std::move(v)); };
  add("scenario.name", to_string(scenario));
  switch (scenario) {
    case Scenario::GaussianSmall: add("scenario.amplitude", format_real(amplitude)); break;
    case Scenario::GardnerGaussian:
      add("scenario.amplitude", format_real(amplitude));
      add("scenario.mu", format_real(mu));
      break;
    case Scenario::KdvSoliton:
      add("scenario.c", format_real(c));
      add("scenario.x0", format_real(x0));
      break;
    case Scenario::KdvTwoSolitons:
      add("scenario.c1", format_real(c1));
      add("scenario.c2", format_real(c2));
      add("scenario.x1", format_real(x1));
      add("scenario.x2", format_real(x2));
      break;
    case Scenario::MkdvStandingBreather:
      add("scenario.alpha", format_real(alpha));
      add("scenario.x0", format_real(x0));
      break;
    case Scenario::GardnerBreather:
      add("scenario.alpha", format_real(alpha));
      add("scenario.beta", format_real(beta));
      add("scenario.mu", format_real(mu));
      add("scenario.x0", format_real(x0));
      break;
    case Scenario::CustomSnapshot: add("scenario.snapshot", snapshot_path); break;
  }
  add("scenario.epsilon", format_real(epsilon));
  add("equation.p", std::to_string(equation.p()));
  add("equation.f1", equation.f1_to_string());
  add("grid.L", format_real(half_length));
  add("grid.n", std::to_string(n));
  add("solver.dt", format_real(solver.dt));
  add("solver.t_end", format_real(solver.t_end));
  add("solver.dealias", solver.dealias ? "true" : "false");
  add("solver.snapshot_stride", std::to_string(solver.snapshot_stride));
  add("diagnostics.window_C", format_real(window_C));
  add("diagnostics.c0", format_real(c0));
  add("diagnostics.soliton_v", format_real(soliton_v));
  add("diagnostics.scaling", law.mode() == ScalingLaw::Mode::Dynamic ? "dynamic" : "constant");
  if (law.mode() == ScalingLaw::Mode::Constant) add("diagnostics.scaling_c0", format_real(law.c0()));
  add("output.snapshot_every", std::to_string(snapshot_every));
  return out;
}

ScenarioConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError("config syntax error at line " + std::to_string(e.line()) + ": " +
                      e.message());
  }
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end()) {
      if (body.empty()) throw ConfigError("key '" + section + "' outside of any section");
      throw ConfigError("unknown config section [" + section + "]");
    }
    for (const auto& kv : body) {
      if (!it->second.count(kv.first)) {
        throw ConfigError("unknown key '" + kv.first + "' in section [" + section + "]");
      }
    }
  }
  const Reader r(tree);
  ScenarioConfig cfg;
  const auto name = r.get("scenario", "name");
  if (!name) throw ConfigError("missing scenario.name");
  cfg.scenario = parse_scenario(*name);

  if (is_soliton_scenario(cfg.scenario)) {
    cfg.half_length = 300.0;
    cfg.n = 4096;
    cfg.solver.t_end = 100.0;
  }

  r.real("scenario", "amplitude", cfg.amplitude);
  r.real("scenario", "c", cfg.c);
  r.real("scenario", "x0", cfg.x0);
  r.real("scenario", "c1", cfg.c1);
  r.real("scenario", "c2", cfg.c2);
  r.real("scenario", "x1", cfg.x1);
  r.real("scenario", "x2", cfg.x2);
  r.real("scenario", "alpha", cfg.alpha);
  r.real("scenario", "beta", cfg.beta);
  r.real("scenario", "mu", cfg.mu);
  r.real("scenario", "epsilon", cfg.epsilon);
  if (cfg.scenario == Scenario::MkdvStandingBreather) cfg.beta = std::sqrt(3.0) * cfg.alpha;
  if (auto v = r.get("scenario", "snapshot")) {
    std::filesystem::path p(*v);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    cfg.snapshot_path = p.string();
  }

  cfg.equation = default_equation(cfg.scenario, cfg.mu);
  if (r.has_section("equation")) {
    const auto p_text = r.get("equation", "p");
    if (!p_text) throw ConfigError("[equation] needs p");
    const auto p = parse_integer("equation.p", *p_text);
    std::vector<Monomial> f1;
    if (auto v = r.get("equation", "f1")) f1 = NonlinearitySpec::parse_f1(*v);
    try {
      cfg.equation = NonlinearitySpec(static_cast<int>(p), std::move(f1));
    } catch (const ConfigError&) {
      throw;
    } catch (const PreconditionError& e) {
      throw ConfigError(std::string("equation: ") + e.what());
    }
  }

  r.real("grid", "L", cfg.half_length);
  if (auto v = r.get("grid", "n")) {
    const auto n = parse_integer("grid.n", *v);
    if (n <= 0) throw ConfigError("grid.n must be positive");
    cfg.n = static_cast<std::size_t>(n);
  }

  r.real("solver", "dt", cfg.solver.dt);
  r.real("solver", "t_end", cfg.solver.t_end);
  if (auto v = r.get("solver", "dealias")) cfg.solver.dealias = parse_bool("solver.dealias", *v);
  if (auto v = r.get("solver", "snapshot_stride")) {
    const auto s = parse_integer("solver.snapshot_stride", *v);
    if (s <= 0) throw ConfigError("solver.snapshot_stride must be positive");
    cfg.solver.snapshot_stride = static_cast<std::size_t>(s);
  }

  r.real("diagnostics", "window_C", cfg.window_C);
  r.real("diagnostics", "c0", cfg.c0);
  r.real("diagnostics", "soliton_v", cfg.soliton_v);
  const std::string scaling = r.get("diagnostics", "scaling").value_or("dynamic");
  if (scaling == "dynamic") {
    if (r.get("diagnostics", "scaling_c0")) {
      throw ConfigError("diagnostics.scaling_c0 only applies to scaling = constant");
    }
    cfg.law = ScalingLaw::dynamic();
  } else if (scaling == "constant") {
    double lc = 1.0;
    r.real("diagnostics", "scaling_c0", lc);
    if (!(lc > 0.0)) throw ConfigError("diagnostics.scaling_c0 must be positive");
    cfg.law = ScalingLaw::constant(lc);
  } else {
    throw ConfigError("diagnostics.scaling must be dynamic or constant, got '" + scaling + "'");
  }

  if (auto v = r.get("output", "snapshot_every")) {
    const auto s = parse_integer("output.snapshot_every", *v);
    if (s < 0) throw ConfigError("output.snapshot_every must be nonnegative");
    cfg.snapshot_every = static_cast<std::size_t>(s);
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_config(text.str(), path.parent_path());
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string to_ini(const ScenarioConfig& cfg) {
  std::string out;
  std::string section;
  for (const auto& [key, value] : cfg.echo()) {
    const auto dot = key.find('.');
    const std::string sec = key.substr(0, dot);
    if (sec != section) {
      if (!section.empty()) out += "\n";
      out += "[" + sec + "]\n";
      section = sec;
    }
    out += key.substr(dot + 1) + " = " + value + "\n";
  }
  return out;
}

std::vector<std::string> config_warnings(const ScenarioConfig& cfg) {
  std::vector<std::string> out;
  const bool gaussian =
      cfg.scenario == Scenario::GaussianSmall || cfg.scenario == Scenario::GardnerGaussian;
  if (gaussian && std::abs(cfg.amplitude) > kSmallAmplitude) {
    out.push_back("amplitude " + format_real(cfg.amplitude) + " exceeds " +
                  format_real(kSmallAmplitude) +
                  ": outside the small-data regime, large data may carry solitons or "
                  "breathers and decay in the window is not expected");
  }
  return out;
}

}  // namespace gkdv
