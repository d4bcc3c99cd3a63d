// gkdv: run scenarios, sample closed-form solutions, rediagnose snapshots.
#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include "gkdv/config.hpp"
#include "gkdv/errors.hpp"
#include "gkdv/exact_solutions.hpp"
#include "gkdv/format.hpp"
#include "gkdv/reports.hpp"
#include "gkdv/runner.hpp"
#include "gkdv/snapshot_io.hpp"

namespace fs = std::filesystem;
using namespace gkdv;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kHypothesis = 2, kBlowUp = 3 };

std::mutex log_mutex;

void log_line(const std::string& msg) {
  std::lock_guard lock(log_mutex);
  std::cerr << msg << '\n';
}

int finish(const ExperimentResult& r, const fs::path& out, const std::string& tag) {
  emit_reports(r, out);
  const auto& s = r.summary;
  std::string msg = tag + ": " + std::to_string(s.steps) + " steps, " + std::to_string(s.rows) +
                    " rows, sup H1 " + format_real(s.sup_h1) + ", status " + s.status;
  for (const auto& w : r.warnings) log_line(tag + ": warning: " + w);
  if (r.blew_up()) {
    log_line(msg + " at t = " + format_real(*r.trajectory.failure_time));
    return kBlowUp;
  }
  if (!s.below_epsilon) {
    log_line(msg + "; sup H1 is not below epsilon = " + format_real(r.config.epsilon));
    return kHypothesis;
  }
  log_line(msg);
  return kOk;
}

// Runs fn and maps the library's exceptions onto exit codes.
template <class Fn>
int guarded(const std::string& tag, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    // Already carries the config path.
    log_line(e.what());
    return kHypothesis;
  } catch (const PreconditionError& e) {
    log_line(tag + ": " + e.what());
    return kHypothesis;
  } catch (const BlowUpError& e) {
    log_line(tag + ": " + e.what());
    return kBlowUp;
  } catch (const std::exception& e) {
    log_line(tag + ": error: " + e.what());
    return kFailure;
  }
}

int simulate(const fs::path& config, const fs::path& out) {
  return guarded(config.filename().string(), [&] {
    return finish(run_experiment(load_config(config)), out, config.filename().string());
  });
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(start, comma - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("parameter '" + item + "' is not k=v");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      out[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::logic_error&) {
      throw PreconditionError("parameter '" + item + "' has a malformed value");
    }
    start = comma + 1;
  }
  return out;
}

int exact(const std::string& solution, const std::string& params_text, double t,
          const fs::path& out) {
  return guarded("exact", [&] {
    auto params = parse_params(params_text);
    auto take = [&](const std::string& key, double fallback) {
      auto it = params.find(key);
      if (it == params.end()) return fallback;
      const double v = it->second;
      params.erase(it);
      return v;
    };
    const double L = take("L", 300.0);
    const double n = take("n", 4096.0);
    if (!(n >= 1.0) || n != static_cast<double>(static_cast<std::size_t>(n))) {
      throw PreconditionError("n must be a positive integer");
    }
    const Grid grid(L, static_cast<std::size_t>(n));
    ClosedForm u;
    if (solution == "kdv-soliton" || solution == "mkdv-soliton") {
      const int p = solution == "kdv-soliton" ? 2 : 3;
      u = closed_form(SolitonParams(take("c", 1.0), p, take("x0", 0.0)));
    } else if (solution == "mkdv-breather") {
      const double alpha = take("alpha", 1.0);
      const double x0 = take("x0", 0.0);
      if (params.count("beta")) {
        const double beta = take("beta", 0.0);
        u = closed_form(MkdvBreatherParams(alpha, beta, x0));
      } else {
        u = closed_form(MkdvBreatherParams::standing(alpha, x0));
      }
    } else {
      const double alpha = take("alpha", 1.0);
      const double beta = take("beta", 1.0);
      const double mu = take("mu", 1.0);
      u = closed_form(GardnerBreatherParams(alpha, beta, mu, take("x0", 0.0)));
    }
    if (!params.empty()) {
      throw PreconditionError("unknown parameter '" + params.begin()->first + "' for " + solution);
    }
    const State s(t, u(t, grid));
    if (out.extension() == ".csv") {
      std::ofstream f(out);
      if (!f) throw IoError("cannot open for writing: " + out.string());
      f << "x,u\n";
      for (std::size_t j = 0; j < grid.size(); ++j) {
        f << format_real(grid.x(j)) << ',' << format_real(s.field[j]) << '\n';
      }
      if (!f) throw IoError("failed writing " + out.string());
    } else {
      write_snapshot(out, s);
    }
    return static_cast<int>(kOk);
  });
}

int diagnose(const fs::path& snapshots, const fs::path& config, const fs::path& out) {
  return guarded("diagnose", [&] {
    const auto cfg = load_config(config);
    const auto states = read_snapshot_dir(snapshots);
    if (states.empty()) throw IoError("no *.gkdv files in " + snapshots.string());
    auto r = diagnose_states(cfg, states);
    // Snapshots are inputs here; do not write them back.
    r.trajectory.snapshots.clear();
    return finish(r, out, "diagnose");
  });
}

int sweep(const fs::path& dir, const fs::path& out, unsigned jobs) {
  std::vector<fs::path> configs;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec)) {
    if (e.is_regular_file() && e.path().extension() == ".ini") configs.push_back(e.path());
  }
  if (ec) {
    log_line("sweep: cannot read " + dir.string() + ": " + ec.message());
    return kFailure;
  }
  std::sort(configs.begin(), configs.end());
  if (configs.empty()) {
    log_line("sweep: no *.ini files in " + dir.string());
    return kFailure;
  }

  std::vector<int> codes(configs.size(), kOk);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      codes[i] = simulate(configs[i], out / configs[i].stem());
    }
  };
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(configs.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  // Worst outcome wins: failure > blow-up > hypothesis > ok.
  auto rank = [](int c) { return c == kFailure ? 3 : c == kBlowUp ? 2 : c == kHypothesis ? 1 : 0; };
  int worst = kOk;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::cout << configs[i].stem().string() << ' ' << codes[i] << '\n';
    if (rank(codes[i]) > rank(worst)) worst = codes[i];
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gkdv simulator and virial diagnostics"};
  app.require_subcommand(1);

  fs::path config, out, snapshots, configs;
  auto* sim = app.add_subcommand("simulate", "evolve one scenario and write its reports");
  sim->add_option("--config", config, "scenario INI file")->required()->check(CLI::ExistingFile);
  sim->add_option("--out", out, "output directory")->required();

  std::string solution, params;
  double t = 0.0;
  auto* ex = app.add_subcommand("exact", "sample a closed-form solution");
  ex->add_option("--solution", solution)
      ->required()
      ->check(CLI::IsMember({"kdv-soliton", "mkdv-soliton", "mkdv-breather", "gardner-breather"}));
  ex->add_option("--params", params, "k=v,... (grid: L, n)")->default_val("");
  ex->add_option("--t", t, "time")->default_val(0.0);
  ex->add_option("--out", out, "snapshot file, or .csv for x,u text")->required();

  auto* dg = app.add_subcommand("diagnose", "recompute the virial series from snapshots");
  dg->add_option("--snapshots", snapshots)->required()->check(CLI::ExistingDirectory);
  dg->add_option("--config", config)->required()->check(CLI::ExistingFile);
  dg->add_option("--out", out)->required();

  unsigned jobs = 1;
  auto* sw = app.add_subcommand("sweep", "run every *.ini in a directory");
  sw->add_option("--configs", configs)->required()->check(CLI::ExistingDirectory);
  sw->add_option("--out", out)->required();
  sw->add_option("--jobs", jobs)->default_val(1u)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kHypothesis;
  }

  if (sim->parsed()) return simulate(config, out);
  if (ex->parsed()) return exact(solution, params, t, out);
  if (dg->parsed()) return diagnose(snapshots, config, out);
  return sweep(configs, out, jobs);
}
