#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace gkdv {

/// Uniform periodic mesh on [-L, L) with n points, n a power of two >= 16.
class Grid {
 public:
  Grid(double half_length, std::size_t n);

  double half_length() const noexcept { return half_length_; }
  std::size_t size() const noexcept { return n_; }
  double length() const noexcept { return 2.0 * half_length_; }
  // Recomputed on every call so that spacing * n == 2L holds by construction.
  double spacing() const noexcept { return 2.0 * half_length_ / static_cast<double>(n_); }
  double x(std::size_t j) const noexcept {
    return -half_length_ + static_cast<double>(j) * spacing();
  }
  /// Angular wavenumber of Fourier mode k (0 <= k <= n/2): pi k / L.
  double wavenumber(std::size_t k) const noexcept;

  bool operator==(const Grid& other) const noexcept = default;

 private:
  double half_length_;
  std::size_t n_;
};

/// Real samples u(x_j) on a grid. Every value is finite.
class Field {
 public:
  Field(Grid grid, std::vector<double> values);

  static Field zeros(const Grid& grid);
  static Field sample(const Grid& grid, const std::function<double(double)>& fn);

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  double max_abs() const noexcept;

  /// Releases the sample vector (leaves the field empty).
  std::vector<double> take_values() && { return std::move(values_); }

 private:
  Grid grid_;
  std::vector<double> values_;
};

struct State {
  State(double time, Field field);

  double time;
  Field field;
};

}  // namespace gkdv
