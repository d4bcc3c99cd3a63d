#include "gkdv/reports.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"
#include "gkdv/snapshot_io.hpp"

namespace gkdv {

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_cell(const std::string& text, std::size_t line) {
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw IoError("series.csv line " + std::to_string(line) + ": malformed number '" + text + "'");
  }
  return v;
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

void write_series_csv(std::ostream& out, const VirialSeries& series) {
  const auto& cols = VirialSeries::csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i) out << ',';
      if (cols[i] == "lambda_valid") {
        out << (row.lambda_valid ? '1' : '0');
      } else {
        out << format_real(VirialSeries::value(row, cols[i]));
      }
    }
    out << '\n';
  }
}

std::string series_csv(const VirialSeries& series) {
  std::ostringstream out;
  write_series_csv(out, series);
  return out.str();
}

VirialSeries read_series_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("series.csv is empty");
  const auto header = split_commas(line);
  if (header != VirialSeries::csv_columns()) throw IoError("series.csv header mismatch");
  VirialSeries out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != header.size()) {
      throw IoError("series.csv line " + std::to_string(lineno) + ": expected " +
                    std::to_string(header.size()) + " fields, got " +
                    std::to_string(cells.size()));
    }
    SeriesRow row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      VirialSeries::set_value(row, header[i], parse_cell(cells[i], lineno));
    }
    out.rows.push_back(row);
  }
  return out;
}

std::string manifest_text(const ExperimentResult& result) {
  const RunSummary& s = result.summary;
  std::string out = "format = gkdv-manifest 1\n";
  auto add = [&](const std::string& k, const std::string& v) { out += k + " = " + v + "\n"; };
  for (const auto& [k, v] : result.config.echo()) add("config." + k, v);
  for (std::size_t i = 0; i < result.warnings.size(); ++i) {
    add("warning." + std::to_string(i), result.warnings[i]);
  }
  add("status", s.status);
  if (result.trajectory.failed()) {
    add("failure_time", format_real(*result.trajectory.failure_time));
    add("failure_message", result.trajectory.failure_message);
  }
  add("steps", std::to_string(s.steps));
  add("rows", std::to_string(s.rows));
  add("snapshots", std::to_string(result.trajectory.snapshots.size()));
  add("initial_h1", format_real(s.initial_h1));
  add("sup_h1", format_real(s.sup_h1));
  add("sup_h1_time", format_real(s.sup_h1_time));
  add("epsilon", format_real(result.config.epsilon));
  add("sup_h1_below_epsilon", flag(s.below_epsilon));
  add("sup_l1", format_real(s.sup_l1));
  add("l1_bound_certified", "false");
  add("max_edge_amplitude", format_real(s.max_edge));
  add("max_box_flux_I", format_real(s.max_box_flux[0]));
  add("max_box_flux_J", format_real(s.max_box_flux[1]));
  add("max_box_flux_K", format_real(s.max_box_flux[2]));
  add("max_drift_mass", format_real(s.max_drift_mass));
  add("max_drift_l2", format_real(s.max_drift_l2));
  add("max_drift_energy", format_real(s.max_drift_energy));
  add("window_h1_trend",
      s.window_h1_trend ? format_real(*s.window_h1_trend) : std::string("nan"));
  add("soliton_region_h1", format_real(s.soliton_region_h1));
  return out;
}

std::map<std::string, std::string> parse_manifest(const std::string& text) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result,
                                                const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<fs::path> written;

  auto write_text = [&](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
    written.push_back(path);
  };
  write_text(dir / "series.csv", series_csv(result.series));
  write_text(dir / "manifest.txt", manifest_text(result));

  const auto& snaps = result.trajectory.snapshots;
  if (!snaps.empty()) {
    const fs::path sdir = dir / "snapshots";
    fs::create_directories(sdir, ec);
    if (ec) throw IoError("cannot create " + sdir.string() + ": " + ec.message());
    for (std::size_t i = 0; i < snaps.size(); ++i) {
      char name[32];
      std::snprintf(name, sizeof name, "snap_%06zu.gkdv", i);
      write_snapshot(sdir / name, snaps[i]);
      written.push_back(sdir / name);
    }
  }
  return written;
}

}  // namespace gkdv
