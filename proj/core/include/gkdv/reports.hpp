#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gkdv/runner.hpp"
#include "gkdv/series.hpp"

namespace gkdv {

/// series.csv: the fixed header, one row per observed state, shortest
/// round-trip decimal text, "nan" for undefined entries.
void write_series_csv(std::ostream& out, const VirialSeries& series);
std::string series_csv(const VirialSeries& series);
/// Parses a file produced by write_series_csv. Throws IoError on a header
/// mismatch or malformed number (with the line number).
VirialSeries read_series_csv(std::istream& in);

/// Plain-text `key = value` manifest: config echo, warnings and run summary.
std::string manifest_text(const ExperimentResult& result);
std::map<std::string, std::string> parse_manifest(const std::string& text);

/// Writes <dir>/series.csv, <dir>/manifest.txt and <dir>/snapshots/*.gkdv.
/// Creates dir if needed. Returns the paths written.
std::vector<std::filesystem::path> emit_reports(const ExperimentResult& result,
                                                const std::filesystem::path& dir);

}  // namespace gkdv
