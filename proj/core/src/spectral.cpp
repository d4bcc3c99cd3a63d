#include "gkdv/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "gkdv/errors.hpp"

namespace gkdv {

namespace detail {

void* fftw_aligned_alloc(std::size_t bytes) {
  void* p = fftw_malloc(bytes == 0 ? 1 : bytes);
  if (p == nullptr) throw std::bad_alloc();
  return p;
}

void fftw_aligned_free(void* p) noexcept { fftw_free(p); }

}  // namespace detail

namespace {

// The FFTW planner is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per size and kept for the process lifetime.
struct PlanPair {
  fftw_plan r2c;
  fftw_plan c2r;
};

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

PlanPair plans_for(std::size_t n, double* real, fftw_complex* spectrum) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // FFTW_ESTIMATE keeps the algorithm choice, and therefore every output bit,
  // independent of machine load.
  const int size = static_cast<int>(n);
  PlanPair p{fftw_plan_dft_r2c_1d(size, real, spectrum, FFTW_ESTIMATE),
             fftw_plan_dft_c2r_1d(size, spectrum, real, FFTW_ESTIMATE)};
  cache.emplace(n, p);
  return p;
}

}  // namespace

FourierTransform::FourierTransform(std::size_t n) : n_(n), real_(n), spectrum_(n / 2 + 1) {
  const PlanPair p = plans_for(n, real_.data(), reinterpret_cast<fftw_complex*>(spectrum_.data()));
  r2c_ = p.r2c;
  c2r_ = p.c2r;
}

void FourierTransform::forward() {
  fftw_execute_dft_r2c(static_cast<fftw_plan>(r2c_), real_.data(),
                       reinterpret_cast<fftw_complex*>(spectrum_.data()));
}

void FourierTransform::inverse() {
  fftw_execute_dft_c2r(static_cast<fftw_plan>(c2r_),
                       reinterpret_cast<fftw_complex*>(spectrum_.data()), real_.data());
  const double scale = 1.0 / static_cast<double>(n_);
  for (double& v : real_) v *= scale;
}

void FourierTransform::forward(std::span<const double> in, std::span<Complex> out) {
  std::copy(in.begin(), in.end(), real_.begin());
  forward();
  std::copy(spectrum_.begin(), spectrum_.end(), out.begin());
}

void FourierTransform::inverse(std::span<const Complex> in, std::span<double> out) {
  std::copy(in.begin(), in.end(), spectrum_.begin());
  inverse();
  std::copy(real_.begin(), real_.end(), out.begin());
}

FourierTransform& thread_transform(std::size_t n) {
  thread_local std::unordered_map<std::size_t, std::unique_ptr<FourierTransform>> cache;
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<FourierTransform>(n);
  return *slot;
}

void spectral_derivative(const Grid& grid, std::span<const double> values, int order,
                         std::span<double> out) {
  if (order < 1 || order > 3) {
    throw PreconditionError("spectral derivative order must be 1, 2 or 3");
  }
  const std::size_t n = grid.size();
  if (values.size() != n || out.size() != n) {
    throw PreconditionError("spectral derivative: sample count does not match grid");
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw PreconditionError("spectral derivative of non-finite field");
  }
  FourierTransform& ft = thread_transform(n);
  std::copy(values.begin(), values.end(), ft.real().begin());
  ft.forward();
  auto spec = ft.spectrum();
  const std::size_t nyquist = n / 2;
  for (std::size_t k = 0; k <= nyquist; ++k) {
    const double kappa = grid.wavenumber(k);
    Complex factor;
    switch (order) {
      case 1: factor = Complex(0.0, kappa); break;
      case 2: factor = Complex(-kappa * kappa, 0.0); break;
      default: factor = Complex(0.0, -kappa * kappa * kappa); break;
    }
    spec[k] *= factor;
  }
  if (order % 2 == 1) spec[nyquist] = 0.0;
  ft.inverse();
  std::copy(ft.real().begin(), ft.real().end(), out.begin());
}

Field spectral_derivative(const Field& f, int order) {
  std::vector<double> out(f.size());
  spectral_derivative(f.grid(), f.values(), order, out);
  return Field(f.grid(), std::move(out));
}

double integrate(const Grid& grid, std::span<const double> values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return grid.spacing() * sum;
}

double integrate(const Field& f) { return integrate(f.grid(), f.values()); }

Norms norms(const State& s) {
  const Field& u = s.field;
  const Grid& g = u.grid();
  std::vector<double> ux(u.size());
  spectral_derivative(g, u.values(), 1, ux);
  double l1 = 0.0, l2sq = 0.0, dsq = 0.0, linf = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double v = u[j];
    l1 += std::abs(v);
    l2sq += v * v;
    dsq += ux[j] * ux[j];
    linf = std::max(linf, std::abs(v));
  }
  const double h = g.spacing();
  return {h * l1, std::sqrt(h * l2sq), std::sqrt(h * (l2sq + dsq)), linf};
}

WindowNorms window_norms(const State& s, double a, double b) {
  const Field& u = s.field;
  const Grid& g = u.grid();
  if (!(a < b)) throw PreconditionError("window must satisfy a < b");
  if (a < -g.half_length() || b > g.half_length()) {
    throw PreconditionError("window [a, b] must lie inside the grid domain [-L, L]");
  }
  std::vector<double> ux(u.size());
  spectral_derivative(g, u.values(), 1, ux);
  double l2sq = 0.0, dsq = 0.0;
  std::size_t count = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = g.x(j);
    if (x < a || x > b) continue;
    l2sq += u[j] * u[j];
    dsq += ux[j] * ux[j];
    ++count;
  }
  if (count == 0) throw PreconditionError("window contains no grid points");
  const double h = g.spacing();
  return {std::sqrt(h * l2sq), std::sqrt(h * (l2sq + dsq))};
}

}  // namespace gkdv
