#pragma once

#include <complex>
#include <cstddef>
#include <limits>
#include <new>
#include <span>
#include <vector>

#include "gkdv/grid.hpp"

namespace gkdv {

using Complex = std::complex<double>;

namespace detail {
void* fftw_aligned_alloc(std::size_t bytes);
void fftw_aligned_free(void* p) noexcept;
}  // namespace detail

/// Allocator handing out FFTW's SIMD-aligned memory.
template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) noexcept {}
  T* allocate(std::size_t n) {
    if (n > std::numeric_limits<std::size_t>::max() / sizeof(T)) throw std::bad_alloc();
    return static_cast<T*>(detail::fftw_aligned_alloc(n * sizeof(T)));
  }
  void deallocate(T* p, std::size_t) noexcept { detail::fftw_aligned_free(p); }
  template <class U>
  bool operator==(const FftwAllocator<U>&) const noexcept { return true; }
};

using AlignedReal = std::vector<double, FftwAllocator<double>>;
using AlignedComplex = std::vector<Complex, FftwAllocator<Complex>>;

/// Real-to-complex DFT of fixed size n with owned, aligned work buffers.
///
/// forward(): spectrum[k] = sum_j u[j] exp(-2 pi i j k / n), k = 0..n/2.
/// inverse(): the exact inverse (the 1/n factor is applied here).
/// Plans are shared process-wide; an instance itself must not be used from
/// two threads at once.
class FourierTransform {
 public:
  explicit FourierTransform(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  std::size_t modes() const noexcept { return n_ / 2 + 1; }

  void forward(std::span<const double> in, std::span<Complex> out);
  void inverse(std::span<const Complex> in, std::span<double> out);

  // In-place access for hot loops: fill real(), call forward(), read spectrum().
  std::span<double> real() noexcept { return real_; }
  std::span<Complex> spectrum() noexcept { return spectrum_; }
  void forward();
  /// Consumes spectrum() (FFTW may overwrite it) and writes real(), normalized.
  void inverse();

 private:
  std::size_t n_;
  AlignedReal real_;
  AlignedComplex spectrum_;
  void* r2c_;
  void* c2r_;
};

/// Per-thread transform for grid size n, used by the free functions below.
FourierTransform& thread_transform(std::size_t n);

/// Derivative of the trigonometric interpolant of f; order in {1,2,3}.
/// The Nyquist mode is dropped for odd orders.
Field spectral_derivative(const Field& f, int order);
void spectral_derivative(const Grid& grid, std::span<const double> values, int order,
                         std::span<double> out);

/// Rectangle rule h * sum_j values[j]; spectrally accurate for smooth periodic integrands.
double integrate(const Field& f);
double integrate(const Grid& grid, std::span<const double> values);

struct Norms {
  double l1;
  double l2;
  double h1;
  double linf;
};

Norms norms(const State& s);

struct WindowNorms {
  double l2_window;
  double h1_window;
};

/// L2 and H1 norms restricted to grid points with a <= x_j <= b. The
/// derivative is computed on the whole grid and then restricted.
WindowNorms window_norms(const State& s, double a, double b);

}  // namespace gkdv
