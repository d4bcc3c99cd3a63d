#include "gkdv/snapshot_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace {

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <class T>
void put_le(std::vector<std::byte>& out, T value) {
  auto raw = std::bit_cast<std::array<std::byte, sizeof(T)>>(value);
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  out.insert(out.end(), raw.begin(), raw.end());
}

template <class T>
T get_le(std::span<const std::byte> bytes, std::size_t offset) {
  std::array<std::byte, sizeof(T)> raw;
  std::memcpy(raw.data(), bytes.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(raw.begin(), raw.end());
  return std::bit_cast<T>(raw);
}

constexpr char kMagic[4] = {'G', 'K', 'D', 'V'};

}  // namespace

std::vector<std::byte> encode_snapshot(const State& s) {
  const Grid& g = s.field.grid();
  std::vector<std::byte> out;
  out.reserve(kSnapshotHeaderBytes + 8 * g.size());
  for (char c : kMagic) out.push_back(static_cast<std::byte>(c));
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint64_t>(out, g.size());
  put_le<double>(out, g.half_length());
  put_le<double>(out, s.time);
  for (double v : s.field.values()) put_le<double>(out, v);
  return out;
}

State decode_snapshot(std::span<const std::byte> bytes) {
  if (bytes.size() < kSnapshotHeaderBytes) {
    throw SnapshotFormatError("truncated snapshot header: " + std::to_string(bytes.size()) +
                                  " bytes, need " + std::to_string(kSnapshotHeaderBytes),
                              bytes.size());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    if (bytes[i] != static_cast<std::byte>(kMagic[i])) {
      throw SnapshotFormatError("bad magic, expected \"GKDV\"", i);
    }
  }
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kSnapshotVersion) {
    throw SnapshotFormatError("unsupported snapshot version " + std::to_string(version), 4);
  }
  const auto n = get_le<std::uint64_t>(bytes, 8);
  const double half_length = get_le<double>(bytes, 16);
  const double time = get_le<double>(bytes, 24);

  std::optional<Grid> grid;
  try {
    grid.emplace(half_length, static_cast<std::size_t>(n));
  } catch (const PreconditionError& e) {
    throw SnapshotFormatError(std::string("invalid grid in header: ") + e.what(), 8);
  }
  if (!std::isfinite(time) || time < 0.0) {
    throw SnapshotFormatError("snapshot time must be finite and nonnegative", 24);
  }
  const std::size_t expected = kSnapshotHeaderBytes + 8 * static_cast<std::size_t>(n);
  if (bytes.size() != expected) {
    throw SnapshotFormatError("snapshot payload has " + std::to_string(bytes.size()) +
                                  " bytes, header implies " + std::to_string(expected),
                              std::min(bytes.size(), expected));
  }
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t off = kSnapshotHeaderBytes + 8 * j;
    values[j] = get_le<double>(bytes, off);
    if (!std::isfinite(values[j])) throw SnapshotFormatError("non-finite sample", off);
  }
  return State(time, Field(*grid, std::move(values)));
}

void write_snapshot(const std::filesystem::path& path, const State& s) {
  const auto bytes = encode_snapshot(s);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open snapshot for writing: " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing snapshot: " + path.string());
}

State read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open snapshot: " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    return decode_snapshot(std::as_bytes(std::span<const char>(raw)));
  } catch (const SnapshotFormatError& e) {
    throw SnapshotFormatError(path.string() + ": " + e.detail(), e.offset());
  }
}

std::vector<State> read_snapshot_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("snapshot directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".gkdv") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<State> states;
  states.reserve(files.size());
  for (const auto& f : files) states.push_back(read_snapshot(f));
  std::stable_sort(states.begin(), states.end(),
                   [](const State& a, const State& b) { return a.time < b.time; });
  return states;
}

}  // namespace gkdv
