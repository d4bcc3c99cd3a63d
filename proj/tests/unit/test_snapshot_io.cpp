#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "gkdv/errors.hpp"
#include "gkdv/snapshot_io.hpp"

using namespace gkdv;
namespace fs = std::filesystem;

namespace {

State sample_state(double t = 1.25) {
  const Grid g(7.5, 32);
  return State(t, Field::sample(g, [](double x) { return std::sin(x) / 3.0 + 1e-300 * x; }));
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("gkdv_snapshot_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

template <class T>
void poke(std::vector<std::byte>& b, std::size_t off, T v) {
  std::memcpy(b.data() + off, &v, sizeof v);
}

std::uint64_t offset_of(const std::vector<std::byte>& b) {
  try {
    decode_snapshot(b);
  } catch (const SnapshotFormatError& e) {
    return e.offset();
  }
  return ~0ull;
}

}  // namespace

TEST(Snapshot, Layout) {
  const auto b = encode_snapshot(sample_state());
  ASSERT_EQ(b.size(), kSnapshotHeaderBytes + 8 * 32);
  EXPECT_EQ(std::memcmp(b.data(), "GKDV", 4), 0);
  std::uint32_t version;
  std::uint64_t n;
  double L, t;
  std::memcpy(&version, b.data() + 4, 4);
  std::memcpy(&n, b.data() + 8, 8);
  std::memcpy(&L, b.data() + 16, 8);
  std::memcpy(&t, b.data() + 24, 8);
  EXPECT_EQ(version, 1u);
  EXPECT_EQ(n, 32u);
  EXPECT_EQ(L, 7.5);
  EXPECT_EQ(t, 1.25);
}

TEST(Snapshot, RoundTripIsBitExact) {
  const State s = sample_state();
  const State back = decode_snapshot(encode_snapshot(s));
  EXPECT_EQ(back.time, s.time);
  EXPECT_EQ(back.field.grid(), s.field.grid());
  for (std::size_t j = 0; j < 32; ++j) EXPECT_EQ(back.field[j], s.field[j]);
}

TEST(Snapshot, Errors) {
  const auto good = encode_snapshot(sample_state());
  auto b = good;
  b.resize(20);
  EXPECT_EQ(offset_of(b), 20u);
  b = good;
  b[2] = std::byte{'X'};
  EXPECT_EQ(offset_of(b), 2u);
  b = good;
  poke<std::uint32_t>(b, 4, 2);
  EXPECT_EQ(offset_of(b), 4u);
  b = good;
  poke<std::uint64_t>(b, 8, 30);
  EXPECT_EQ(offset_of(b), 8u);
  b = good;
  poke<double>(b, 24, -1.0);
  EXPECT_EQ(offset_of(b), 24u);
  b = good;
  b.pop_back();
  EXPECT_EQ(offset_of(b), good.size() - 1);
  b = good;
  poke<double>(b, kSnapshotHeaderBytes + 8 * 5, NAN);
  EXPECT_EQ(offset_of(b), kSnapshotHeaderBytes + 40);
}

TEST(Snapshot, FileErrorsNamePath) {
  const auto dir = scratch_dir("errors");
  const auto path = dir / "broken.gkdv";
  std::ofstream(path) << "GKDVxx";
  try {
    read_snapshot(path);
    FAIL();
  } catch (const SnapshotFormatError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.gkdv"), std::string::npos);
    EXPECT_EQ(e.offset(), 6u);
    EXPECT_EQ(std::string(e.what()).find("offset 6 (at byte offset"), std::string::npos);
  }
  EXPECT_THROW(read_snapshot(dir / "missing.gkdv"), IoError);
  EXPECT_THROW(read_snapshot_dir(dir / "nope"), IoError);
}

TEST(Snapshot, DirectorySortedByTime) {
  const auto dir = scratch_dir("dir");
  write_snapshot(dir / "a.gkdv", sample_state(3.0));
  write_snapshot(dir / "b.gkdv", sample_state(1.0));
  write_snapshot(dir / "c.gkdv", sample_state(2.0));
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto states = read_snapshot_dir(dir);
  ASSERT_EQ(states.size(), 3u);
  EXPECT_EQ(states[0].time, 1.0);
  EXPECT_EQ(states[1].time, 2.0);
  EXPECT_EQ(states[2].time, 3.0);
}
