#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gkdv/errors.hpp"
#include "gkdv/grid.hpp"
#include "gkdv/nonlinearity.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

struct SolverConfig {
  double dt = 5e-4;
  double t_end = 1.0;
  bool dealias = true;
  std::size_t snapshot_stride = 1;

  void validate() const;
};

/// Blow-up guard: abort once max|u| exceeds this multiple of the initial max.
inline constexpr double kBlowUpFactor = 100.0;

/// Fourth-order exponential time differencing Runge-Kutta (ETDRK4, phi-function
/// coefficients averaged over a complex contour) for u_t = -u_xxx - (f(u))_x on
/// a periodic grid.
///
/// In Fourier space the linear part is i k^3 and is integrated exactly; the
/// flux -i k f(u)^ is evaluated pseudospectrally. With dealiasing on, f(u) is
/// truncated to modes k < n/3, and when the highest degree q in f is 3 or
/// more it is evaluated on a zero-padded grid of ceil((q + 1)/2) n points.
class EtdRk4 {
 public:
  EtdRk4(const Grid& grid, const NonlinearitySpec& spec, double dt, bool dealias = true);

  const Grid& grid() const noexcept { return grid_; }
  double dt() const noexcept { return dt_; }
  std::size_t retained_modes() const noexcept { return kept_modes_; }
  std::size_t padding() const noexcept { return pad_; }

  /// Sets the reference amplitude of the blow-up guard.
  void set_reference_amplitude(double amplitude) noexcept { reference_amplitude_ = amplitude; }

  /// Advances the spectrum by one step. `time` is only used for error reports.
  void advance(std::span<Complex> spectrum, double time);

  void to_spectrum(std::span<const double> values, std::span<Complex> spectrum);
  void to_physical(std::span<const Complex> spectrum, std::span<double> values);

 private:
  void nonlinear(std::span<const Complex> in, std::span<Complex> out, bool guard, double time);

  Grid grid_;
  NonlinearitySpec spec_;
  double dt_;
  std::size_t pad_;
  std::size_t kept_modes_;
  double reference_amplitude_ = 0.0;
  FourierTransform ft_;
  FourierTransform padded_ft_;
  std::vector<double> wavenumber_;
  AlignedComplex e_, e2_, q_, f1_, f2_, f3_;
  AlignedComplex nv_, na_, nb_, nc_, a_, b_, c_;
};

/// Ordered snapshots observed during an evolution plus the final state.
struct Trajectory {
  std::vector<State> snapshots;
  std::optional<State> final_state;
  std::optional<double> failure_time;
  std::string failure_message;
  std::size_t steps_taken = 0;

  bool failed() const noexcept { return failure_time.has_value(); }
};

/// Thrown by evolve() on blow-up; carries what was observed up to the failure.
class EvolutionError : public BlowUpError {
 public:
  EvolutionError(const BlowUpError& cause, std::shared_ptr<Trajectory> partial)
      : BlowUpError(cause), partial_(std::move(partial)) {}
  const Trajectory& partial() const noexcept { return *partial_; }

 private:
  std::shared_ptr<Trajectory> partial_;
};

/// Receives every snapshot_stride-th state (including the initial one).
/// Observers must not retain references to the state past the call.
using Observer = std::function<void(const State&)>;

struct EvolveOptions {
  /// Keep observed snapshots in the returned trajectory. Long runs that only
  /// need observers should turn this off.
  bool retain_snapshots = true;
};

/// One ETDRK4 step of size cfg.dt. Throws BlowUpError.
State step(const State& s, const NonlinearitySpec& spec, const SolverConfig& cfg);

/// Steps from initial.time to cfg.t_end. The step count is
/// ceil((t_end - t0)/dt) and the step is shrunk so that the last one lands on
/// t_end exactly. Throws EvolutionError on blow-up.
Trajectory evolve(const State& initial, const NonlinearitySpec& spec, const SolverConfig& cfg,
                  std::span<const Observer> observers = {}, EvolveOptions options = {});

/// Number of steps evolve() takes for the given span of time.
std::size_t step_count(double t0, double t_end, double dt);

struct ConservedQuantities {
  double mass;    // integral of u
  double l2;      // integral of u^2
  double energy;  // integral of u_x^2 / 2 - F(u)
};

ConservedQuantities conserved_quantities(const State& s, const NonlinearitySpec& spec);

struct ConservationReport {
  double time;
  double mass;
  double l2;
  double energy;
  double drift_mass;
  double drift_l2;
  double drift_energy;
};

/// Relative drift (q - q0)/|q0|, or the absolute drift when |q0| < 1e-12.
double drift(double value, double reference) noexcept;

std::vector<ConservationReport> conservation_report(const Trajectory& traj,
                                                    const NonlinearitySpec& spec);

/// Streaming form of conservation_report for observers.
class ConservationMonitor {
 public:
  explicit ConservationMonitor(NonlinearitySpec spec) : spec_(std::move(spec)) {}
  const ConservationReport& record(const State& s);
  const std::vector<ConservationReport>& reports() const noexcept { return reports_; }

 private:
  NonlinearitySpec spec_;
  std::optional<ConservedQuantities> initial_;
  std::vector<ConservationReport> reports_;
};

}  // namespace gkdv
