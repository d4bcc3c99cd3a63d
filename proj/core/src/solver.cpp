#include "gkdv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gkdv/format.hpp"

namespace gkdv {

void SolverConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("solver dt must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw PreconditionError("solver t_end must be positive");
  }
  if (snapshot_stride == 0) throw PreconditionError("snapshot_stride must be positive");
}

namespace {

constexpr int kContourPoints = 32;

// Cubic and higher f alias onto the kept modes even under the 2/3 rule, so f
// is evaluated on a grid ceil((q + 1) / 2) times finer.
std::size_t pad_factor(const NonlinearitySpec& spec, bool dealias) {
  const int q = spec.max_degree();
  if (!dealias || q <= 2) return 1;
  return static_cast<std::size_t>((q + 2) / 2);
}
constexpr double kContourThreshold = 1.0;

struct PhiCoefficients {
  Complex q, f1, f2, f3;
};

// ETDRK4 weights for z = dt * L, each multiplied by dt. Near z = 0 the closed
// forms cancel catastrophically, so they are averaged over a unit circle
// centred at z instead.
PhiCoefficients phi_coefficients(Complex z, double dt) {
  auto eval = [](Complex w) {
    const Complex ew = std::exp(w);
    const Complex w3 = w * w * w;
    return PhiCoefficients{(std::exp(0.5 * w) - 1.0) / w,
                           (-4.0 - w + ew * (4.0 - 3.0 * w + w * w)) / w3,
                           (2.0 + w + ew * (w - 2.0)) / w3,
                           (-4.0 - 3.0 * w - w * w + ew * (4.0 - w)) / w3};
  };
  PhiCoefficients out{};
  if (std::abs(z) >= kContourThreshold) {
    out = eval(z);
  } else {
    for (int j = 0; j < kContourPoints; ++j) {
      const double theta = 2.0 * std::numbers::pi * (j + 0.5) / kContourPoints;
      const PhiCoefficients c = eval(z + std::polar(1.0, theta));
      out.q += c.q;
      out.f1 += c.f1;
      out.f2 += c.f2;
      out.f3 += c.f3;
    }
    const double inv = 1.0 / kContourPoints;
    out.q *= inv;
    out.f1 *= inv;
    out.f2 *= inv;
    out.f3 *= inv;
  }
  out.q *= dt;
  out.f1 *= dt;
  out.f2 *= dt;
  out.f3 *= dt;
  return out;
}

}  // namespace

EtdRk4::EtdRk4(const Grid& grid, const NonlinearitySpec& spec, double dt, bool dealias)
    : grid_(grid),
      spec_(spec),
      dt_(dt),
      pad_(pad_factor(spec, dealias)),
      ft_(grid.size()),
      padded_ft_(pad_ * grid.size()) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw PreconditionError("solver dt must be positive");
  const std::size_t n = grid.size();
  const std::size_t modes = n / 2 + 1;
  // 2/3 rule: f(u) keeps the modes k < n/3.
  kept_modes_ = dealias ? (n - 1) / 3 + 1 : n / 2;
  wavenumber_.resize(modes);
  for (std::size_t k = 0; k < modes; ++k) wavenumber_[k] = grid.wavenumber(k);

  e_.resize(modes);
  e2_.resize(modes);
  q_.resize(modes);
  f1_.resize(modes);
  f2_.resize(modes);
  f3_.resize(modes);
  for (std::size_t k = 0; k < modes; ++k) {
    const double kap = wavenumber_[k];
    const Complex z(0.0, dt * kap * kap * kap);  // dt * (i k^3)
    e_[k] = std::exp(z);
    e2_[k] = std::exp(0.5 * z);
    const PhiCoefficients c = phi_coefficients(z, dt);
    q_[k] = c.q;
    f1_[k] = c.f1;
    f2_[k] = c.f2;
    f3_[k] = c.f3;
  }
  for (auto* v : {&nv_, &na_, &nb_, &nc_, &a_, &b_, &c_}) v->resize(modes);
}

void EtdRk4::to_spectrum(std::span<const double> values, std::span<Complex> spectrum) {
  ft_.forward(values, spectrum);
}

void EtdRk4::to_physical(std::span<const Complex> spectrum, std::span<double> values) {
  ft_.inverse(spectrum, values);
}

void EtdRk4::nonlinear(std::span<const Complex> in, std::span<Complex> out, bool guard,
                       double time) {
  FourierTransform& ft = pad_ > 1 ? padded_ft_ : ft_;
  if (pad_ > 1) {
    // Same trigonometric interpolant sampled on pad_ * n points. The Nyquist
    // mode becomes an ordinary mode there, so it enters at half weight.
    const std::size_t nyq = in.size() - 1;
    auto s = ft.spectrum();
    const double scale = static_cast<double>(pad_);
    for (std::size_t k = 0; k < nyq; ++k) s[k] = scale * in[k];
    s[nyq] = 0.5 * scale * in[nyq];
    std::fill(s.begin() + static_cast<std::ptrdiff_t>(nyq) + 1, s.end(), Complex(0.0));
  } else {
    std::copy(in.begin(), in.end(), ft.spectrum().begin());
  }
  ft.inverse();
  auto u = ft.real();
  if (guard) {
    double peak = 0.0;
    for (double v : u) {
      if (!std::isfinite(v)) {
        throw BlowUpError("non-finite value in solution at t = " + format_real(time), time);
      }
      peak = std::max(peak, std::abs(v));
    }
    if (reference_amplitude_ > 0.0 && peak > kBlowUpFactor * reference_amplitude_) {
      throw BlowUpError("max|u| = " + format_real(peak) + " exceeds " +
                            format_real(kBlowUpFactor) + " x initial amplitude at t = " +
                            format_real(time),
                        time);
    }
  }
  for (double& v : u) v = spec_.f(v);
  ft.forward();
  auto s = ft.spectrum();
  const double unscale = 1.0 / static_cast<double>(pad_);
  for (std::size_t k = 0; k < kept_modes_; ++k) {
    out[k] = Complex(0.0, -wavenumber_[k] * unscale) * s[k];
  }
  for (std::size_t k = kept_modes_; k < out.size(); ++k) out[k] = 0.0;
}

void EtdRk4::advance(std::span<Complex> v, double time) {
  const std::size_t m = v.size();
  nonlinear(v, nv_, true, time);
  for (std::size_t k = 0; k < m; ++k) a_[k] = e2_[k] * v[k] + q_[k] * nv_[k];
  nonlinear(a_, na_, false, time);
  for (std::size_t k = 0; k < m; ++k) b_[k] = e2_[k] * v[k] + q_[k] * na_[k];
  nonlinear(b_, nb_, false, time);
  for (std::size_t k = 0; k < m; ++k) c_[k] = e2_[k] * a_[k] + q_[k] * (2.0 * nb_[k] - nv_[k]);
  nonlinear(c_, nc_, false, time);
  for (std::size_t k = 0; k < m; ++k) {
    v[k] = e_[k] * v[k] + f1_[k] * nv_[k] + 2.0 * f2_[k] * (na_[k] + nb_[k]) + f3_[k] * nc_[k];
  }
}

std::size_t step_count(double t0, double t_end, double dt) {
  const double span = t_end - t0;
  if (span <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(span / dt - 1e-9));
}

namespace {

void check_final(std::span<const double> values, double amplitude, double time) {
  double peak = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw BlowUpError("non-finite value in solution at t = " + format_real(time), time);
    }
    peak = std::max(peak, std::abs(v));
  }
  if (amplitude > 0.0 && peak > kBlowUpFactor * amplitude) {
    throw BlowUpError("max|u| exceeds blow-up threshold at t = " + format_real(time), time);
  }
}

}  // namespace

State step(const State& s, const NonlinearitySpec& spec, const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw PreconditionError("solver dt must be positive");
  const Grid& g = s.field.grid();
  EtdRk4 scheme(g, spec, cfg.dt, cfg.dealias);
  const double amp = s.field.max_abs();
  scheme.set_reference_amplitude(amp);
  AlignedComplex spec_v(g.size() / 2 + 1);
  scheme.to_spectrum(s.field.values(), spec_v);
  scheme.advance(spec_v, s.time);
  std::vector<double> out(g.size());
  scheme.to_physical(spec_v, out);
  const double t = s.time + cfg.dt;
  check_final(out, amp, t);
  return State(t, Field(g, std::move(out)));
}

Trajectory evolve(const State& initial, const NonlinearitySpec& spec, const SolverConfig& cfg,
                  std::span<const Observer> observers, EvolveOptions options) {
  if (!(cfg.dt > 0.0)) throw PreconditionError("solver dt must be positive");
  if (cfg.snapshot_stride == 0) throw PreconditionError("snapshot_stride must be positive");
  if (cfg.t_end < initial.time) {
    throw PreconditionError("t_end must not precede the initial time");
  }
  const Grid& g = initial.field.grid();
  const double amp = initial.field.max_abs();
  if (amp > 0.0 && cfg.dt > 0.5 * g.spacing() / amp) {
    throw PreconditionError("dt = " + format_real(cfg.dt) +
                            " violates the nonlinear step bound 0.5 * spacing / max|u| = " +
                            format_real(0.5 * g.spacing() / amp));
  }

  auto traj = std::make_shared<Trajectory>();
  auto emit = [&](const State& st) {
    for (const Observer& obs : observers) obs(st);
    if (options.retain_snapshots) traj->snapshots.push_back(st);
  };

  const std::size_t steps = step_count(initial.time, cfg.t_end, cfg.dt);
  emit(initial);
  if (steps == 0) {
    traj->final_state = initial;
    return std::move(*traj);
  }

  const double dt = (cfg.t_end - initial.time) / static_cast<double>(steps);
  EtdRk4 scheme(g, spec, dt, cfg.dealias);
  scheme.set_reference_amplitude(amp);
  AlignedComplex v(g.size() / 2 + 1);
  scheme.to_spectrum(initial.field.values(), v);
  std::vector<double> phys(g.size());

  double time = initial.time;
  try {
    for (std::size_t k = 1; k <= steps; ++k) {
      scheme.advance(v, time);
      // k * span / steps is exact whenever the true time is representable.
      time = k == steps ? cfg.t_end
                        : initial.time + static_cast<double>(k) * (cfg.t_end - initial.time) /
                                             static_cast<double>(steps);
      traj->steps_taken = k;
      const bool observe = k % cfg.snapshot_stride == 0;
      if (observe || k == steps) {
        scheme.to_physical(v, phys);
        check_final(phys, amp, time);
        State st(time, Field(g, phys));
        if (observe) emit(st);
        if (k == steps) traj->final_state = std::move(st);
      }
    }
  } catch (const BlowUpError& e) {
    traj->failure_time = e.time();
    traj->failure_message = e.what();
    throw EvolutionError(e, traj);
  } catch (const PreconditionError& e) {
    // Field construction rejects non-finite samples; report it as blow-up.
    BlowUpError cause(e.what(), time);
    traj->failure_time = time;
    traj->failure_message = e.what();
    throw EvolutionError(cause, traj);
  }
  return std::move(*traj);
}

ConservedQuantities conserved_quantities(const State& s, const NonlinearitySpec& spec) {
  const Field& u = s.field;
  const Grid& g = u.grid();
  std::vector<double> ux(u.size());
  spectral_derivative(g, u.values(), 1, ux);
  double mass = 0.0, l2 = 0.0, energy = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    mass += u[j];
    l2 += u[j] * u[j];
    energy += 0.5 * ux[j] * ux[j] - spec.F(u[j]);
  }
  const double h = g.spacing();
  return {h * mass, h * l2, h * energy};
}

double drift(double value, double reference) noexcept {
  const double d = value - reference;
  if (std::abs(reference) < 1e-12) return d;
  return d / std::abs(reference);
}

const ConservationReport& ConservationMonitor::record(const State& s) {
  const ConservedQuantities q = conserved_quantities(s, spec_);
  if (!initial_) initial_ = q;
  reports_.push_back({s.time, q.mass, q.l2, q.energy, drift(q.mass, initial_->mass),
                      drift(q.l2, initial_->l2), drift(q.energy, initial_->energy)});
  return reports_.back();
}

std::vector<ConservationReport> conservation_report(const Trajectory& traj,
                                                    const NonlinearitySpec& spec) {
  if (traj.snapshots.empty()) throw PreconditionError("conservation report of empty trajectory");
  ConservationMonitor monitor(spec);
  for (const State& s : traj.snapshots) monitor.record(s);
  return monitor.reports();
}

}  // namespace gkdv
