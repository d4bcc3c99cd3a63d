#include "gkdv/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "gkdv/errors.hpp"

namespace gkdv {

Grid::Grid(double half_length, std::size_t n) : half_length_(half_length), n_(n) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw PreconditionError("grid half_length must be positive and finite");
  }
  if (n < 16 || !std::has_single_bit(n)) {
    throw PreconditionError("grid size must be a power of two >= 16, got " + std::to_string(n));
  }
}

double Grid::wavenumber(std::size_t k) const noexcept {
  return std::numbers::pi * static_cast<double>(k) / half_length_;
}

Field::Field(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw PreconditionError("field has " + std::to_string(values_.size()) +
                            " samples but grid has " + std::to_string(grid_.size()));
  }
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j])) {
      throw PreconditionError("field value at index " + std::to_string(j) + " is not finite");
    }
  }
}

Field Field::zeros(const Grid& grid) { return Field(grid, std::vector<double>(grid.size(), 0.0)); }

Field Field::sample(const Grid& grid, const std::function<double(double)>& fn) {
  std::vector<double> v(grid.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = fn(grid.x(j));
  return Field(grid, std::move(v));
}

double Field::max_abs() const noexcept {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

State::State(double t, Field f) : time(t), field(std::move(f)) {
  if (!std::isfinite(t) || t < 0.0) {
    throw PreconditionError("state time must be finite and nonnegative");
  }
}

}  // namespace gkdv
