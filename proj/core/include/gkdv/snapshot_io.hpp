#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

/// Binary snapshot layout, all little-endian:
///
///   offset  size  field
///   0       4     magic "GKDV"
///   4       4     u32 format version (= 1)
///   8       8     u64 n
///   16      8     f64 half_length
///   24      8     f64 time
///   32      8n    f64 values[n]
inline constexpr std::uint32_t kSnapshotVersion = 1;
inline constexpr std::size_t kSnapshotHeaderBytes = 32;

std::vector<std::byte> encode_snapshot(const State& s);
/// Throws SnapshotFormatError with the offending byte offset.
State decode_snapshot(std::span<const std::byte> bytes);

void write_snapshot(const std::filesystem::path& path, const State& s);
State read_snapshot(const std::filesystem::path& path);

/// Every *.gkdv file in dir, sorted by stored time.
std::vector<State> read_snapshot_dir(const std::filesystem::path& dir);

}  // namespace gkdv
