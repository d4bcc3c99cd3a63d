#include "gkdv/virial.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

double IdentityTerms::printed_sum() const noexcept {
  return std::accumulate(printed.begin(), printed.end(), 0.0);
}

namespace {

double ipow(double s, int d) {
  double r = 1.0;
  for (int i = 0; i < d; ++i) r *= s;
  return r;
}

// int_L^inf sech^2(x/ell) cos(kappa x) dx for kappa L a multiple of pi, from
// sech^2 y = 4 sum_m (-1)^(m+1) m e^(-2 m y); q = e^(-2 L / ell).
double sech2_tail(double q, double ell, double kappa, int parity) {
  double sum = 0.0;
  double decay = 1.0;
  for (int m = 1; m < 100000; ++m) {
    decay *= q;
    if (decay < 1e-300) break;
    const double a = 2.0 * m / ell;
    const double term = 4.0 * m * decay * a / (a * a + kappa * kappa);
    sum += (m % 2 == 1 ? term : -term);
    if (term < 1e-18 * std::abs(sum)) break;
  }
  return parity * sum;
}

}  // namespace

double integrate_tanh_weighted(const Grid& grid, std::span<const double> g, double ell) {
  const std::size_t n = grid.size();
  if (g.size() != n) throw PreconditionError("integrand size does not match grid");
  if (!(ell > 0.0)) throw PreconditionError("weight scale must be positive");
  FourierTransform& ft = thread_transform(n);
  std::copy(g.begin(), g.end(), ft.real().begin());
  ft.forward();
  const auto spec = ft.spectrum();
  const double half_length = grid.half_length();
  const double th = std::tanh(half_length / ell);
  const double q = std::exp(-2.0 * half_length / ell);
  const double pi = std::numbers::pi;
  double acc = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double kappa = grid.wavenumber(k);
    const int parity = (k % 2 == 0) ? 1 : -1;
    // S_k = int_0^L tanh(x/ell) sin(kappa x) dx
    const double a = 0.5 * pi * kappa * ell;
    const double full = a > 700.0 ? 0.0 : 0.5 * pi * ell / std::sinh(a);
    const double s_k = -parity * th / kappa + full -
                       sech2_tail(q, ell, kappa, parity) / (kappa * ell);
    acc += -4.0 * parity * s_k * spec[k].imag();
  }
  return acc / static_cast<double>(n);
}

VirialEvaluator::VirialEvaluator(const State& s, const NonlinearitySpec& spec)
    : spec_(spec), grid_(s.field.grid()), time_(s.time) {
  const std::size_t n = grid_.size();
  const auto vals = s.field.values();
  u_.assign(vals.begin(), vals.end());
  ux_.resize(n);
  uxx_.resize(n);
  spectral_derivative(grid_, u_, 1, ux_);
  spectral_derivative(grid_, u_, 2, uxx_);
  g_.resize(n);
  big_f_.resize(n);
  w_.resize(n);
  energy_.resize(n);
  half_sq_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    g_[j] = spec_.f(u_[j]);
    big_f_[j] = spec_.F(u_[j]);
    w_[j] = uxx_[j] + g_[j];
    energy_[j] = 0.5 * ux_[j] * ux_[j] - big_f_[j];
    half_sq_[j] = 0.5 * u_[j] * u_[j];
  }
  gx_.resize(n);
  wx_.resize(n);
  spectral_derivative(grid_, g_, 1, gx_);
  spectral_derivative(grid_, w_, 1, wx_);
}

VirialEvaluator::Sampled VirialEvaluator::sample(const WeightProfile& w, double lam) const {
  const std::size_t n = grid_.size();
  Sampled out;
  out.w.resize(n);
  out.d1.resize(n);
  out.d2.resize(n);
  out.d3.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto v = w.eval(grid_.x(j) / lam);
    out.w[j] = v.w;
    out.d1[j] = v.d1;
    out.d2[j] = v.d2;
    out.d3[j] = v.d3;
  }
  const double edge = grid_.half_length() / lam;
  const auto hi = w.eval(edge);
  const auto lo = w.eval(-edge);
  out.jump[0] = hi.w - lo.w;
  out.jump[1] = hi.d1 - lo.d1;
  out.jump[2] = hi.d2 - lo.d2;
  out.jump[3] = hi.d3 - lo.d3;
  out.xjump = edge * (hi.d1 + lo.d1);
  return out;
}

double VirialEvaluator::rect(std::span<const double> a, std::span<const double> b,
                             double a_jump) const {
  double acc = 0.5 * a_jump * b[0];
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc * grid_.spacing();
}

double VirialEvaluator::weighted(const WeightProfile& w, double lam,
                                 std::span<const double> g) const {
  if (!(lam > 0.0) || !std::isfinite(lam)) throw PreconditionError("lambda must be positive");
  if (w.is_odd()) return integrate_tanh_weighted(grid_, g, lam / w.parameter());
  double acc = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) acc += w.eval(grid_.x(j) / lam).w * g[j];
  return acc * grid_.spacing();
}

double VirialEvaluator::I(const WeightProfile& psi, double lam) const {
  return weighted(psi, lam, u_);
}

double VirialEvaluator::J(const WeightProfile& phi, double lam) const {
  return weighted(phi, lam, half_sq_);
}

double VirialEvaluator::K(const WeightProfile& phi, double lam) const {
  return weighted(phi, lam, energy_);
}

IdentityTerms VirialEvaluator::dI(const WeightProfile& psi, const LambdaValues& l) const {
  const double lam = l.lam;
  const auto wt = sample(psi, lam);
  const std::size_t n = grid_.size();
  std::vector<double> xw(n);
  for (std::size_t j = 0; j < n; ++j) xw[j] = grid_.x(j) / lam * wt.d1[j];

  IdentityTerms out;
  out.printed = {
      -l.ratio * rect(xw, u_, wt.xjump),
      rect(wt.d3, u_, wt.jump[3]) / (lam * lam * lam),
      rect(wt.d1, g_, wt.jump[1]) / lam,
  };
  const double ub = u_[0], uxb = ux_[0], wb = w_[0];
  out.box_flux = -wt.jump[0] * wb + wt.jump[1] * uxb / lam - wt.jump[2] * ub / (lam * lam);
  return out;
}

IdentityTerms VirialEvaluator::dJ(const WeightProfile& phi, const LambdaValues& l) const {
  const double lam = l.lam;
  const auto wt = sample(phi, lam);
  const std::size_t n = grid_.size();
  const int p = spec_.p();
  std::vector<double> xw(n), sq(n), uxsq(n), tail(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = u_[j];
    xw[j] = grid_.x(j) / lam * wt.d1[j];
    sq[j] = u * u;
    uxsq[j] = ux_[j] * ux_[j];
    // u f(u) - F(u) = p/(p+1) u^(p+1) + u f1(u) - F1(u)
    tail[j] = p / (p + 1.0) * ipow(u, p + 1) + u * spec_.f1(u) - spec_.F1(u);
  }
  IdentityTerms out;
  out.printed = {
      -0.5 * l.ratio * rect(xw, sq, wt.xjump),
      -1.5 / lam * rect(wt.d1, uxsq, wt.jump[1]),
      0.5 / (lam * lam * lam) * rect(wt.d3, sq, wt.jump[3]),
      rect(wt.d1, tail, wt.jump[1]) / lam,
  };
  const double ub = u_[0], uxb = ux_[0], wb = w_[0], fb = big_f_[0];
  out.box_flux = wt.jump[0] * (-ub * wb + 0.5 * uxb * uxb + fb) + wt.jump[1] * ub * uxb / lam -
                 wt.jump[2] * ub * ub / (2.0 * lam * lam);
  return out;
}

IdentityTerms VirialEvaluator::dK(const WeightProfile& phi, const LambdaValues& l) const {
  const double lam = l.lam;
  const double lam3 = lam * lam * lam;
  const auto wt = sample(phi, lam);
  const std::size_t n = grid_.size();
  const int p = spec_.p();
  std::vector<double> xw(n), dens(n), uxxsq(n), uxsq(n), upow(n), f1big(n), gxux(n), gux(n),
      gsq(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = u_[j];
    xw[j] = grid_.x(j) / lam * wt.d1[j];
    dens[j] = ux_[j] * ux_[j] - 2.0 * big_f_[j];
    uxxsq[j] = uxx_[j] * uxx_[j];
    uxsq[j] = ux_[j] * ux_[j];
    upow[j] = ipow(u, p + 1) / (p + 1.0);
    f1big[j] = spec_.F1(u);
    gxux[j] = gx_[j] * ux_[j];
    gux[j] = g_[j] * ux_[j];
    gsq[j] = g_[j] * g_[j];
  }
  IdentityTerms out;
  out.printed = {
      -0.5 * l.ratio * rect(xw, dens, wt.xjump),
      -1.5 / lam * rect(wt.d1, uxxsq, wt.jump[1]),
      0.5 / lam3 * rect(wt.d3, uxsq, wt.jump[3]),
      rect(wt.d3, upow, wt.jump[3]) / lam3,
      rect(wt.d3, f1big, wt.jump[3]) / lam3,
      2.0 / lam * rect(wt.d1, gxux, wt.jump[1]),
      2.0 / (lam * lam) * rect(wt.d2, gux, wt.jump[2]),
      -0.5 / lam * rect(wt.d1, gsq, wt.jump[1]),
  };
  const double uxb = ux_[0], wb = w_[0], fb = big_f_[0], gb = g_[0];
  const double utb = -wx_[0];
  out.box_flux = wt.jump[0] * (uxb * utb + 0.5 * wb * wb) +
                 wt.jump[1] * (uxb * wb - 2.0 * uxb * gb) / lam -
                 wt.jump[2] * (0.5 * uxb * uxb + fb) / (lam * lam);
  return out;
}

DecayIntegrands VirialEvaluator::decay(double lam, double c0) const {
  if (!(lam > 0.0)) throw PreconditionError("lambda must be positive");
  if (!(c0 > 0.0)) throw PreconditionError("c0 must be positive");
  DecayIntegrands d{0.0, 0.0, 0.0, 0.0};
  for (std::size_t j = 0; j < grid_.size(); ++j) {
    const double x = grid_.x(j);
    const double y = std::abs(x / lam);
    const double s = y > 700.0 ? 0.0 : 1.0 / std::cosh(y);
    const double s2 = s * s;
    const double u2 = u_[j] * u_[j];
    const double ux2 = ux_[j] * ux_[j];
    const double uxx2 = uxx_[j] * uxx_[j];
    d.i2 += s2 * u2;
    d.i3 += s2 * s2 * ux2;
    d.i9 += s2 * s2 * s2 * uxx2;
    d.kato += std::exp(-c0 * std::abs(x)) * (u2 + ux2 + uxx2);
  }
  const double h = grid_.spacing();
  d.i2 *= h / lam;
  d.i3 *= h / lam;
  d.i9 *= h / lam;
  d.kato *= h;
  return d;
}

namespace {
const NonlinearitySpec& plain_spec() {
  static const NonlinearitySpec s = NonlinearitySpec::kdv();
  return s;
}
}  // namespace

double functional_I(const State& s, const WeightProfile& psi, const ScalingLaw& law, double t) {
  return VirialEvaluator(s, plain_spec()).I(psi, law.eval(t).lam);
}

double functional_J(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t) {
  return VirialEvaluator(s, plain_spec()).J(phi, law.eval(t).lam);
}

double functional_K(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                    const NonlinearitySpec& spec) {
  return VirialEvaluator(s, spec).K(phi, law.eval(t).lam);
}

double dI_dt_rhs(const State& s, const WeightProfile& psi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec) {
  return VirialEvaluator(s, spec).dI(psi, law.eval(t)).total();
}

double dJ_dt_rhs(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec) {
  return VirialEvaluator(s, spec).dJ(phi, law.eval(t)).total();
}

double dK_dt_rhs(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec) {
  return VirialEvaluator(s, spec).dK(phi, law.eval(t)).total();
}

DecayIntegrands decay_integrands(const State& s, const ScalingLaw& law, double t,
                                 const NonlinearitySpec& spec, double c0) {
  return VirialEvaluator(s, spec).decay(law.eval(t).lam, c0);
}

WindowInterval window_interval(double t, double window_C) {
  if (!(t >= 2.0) || !std::isfinite(t)) {
    throw PreconditionError("window interval needs t >= 2, got t = " + format_real(t));
  }
  if (!(window_C > 0.0) || !std::isfinite(window_C)) {
    throw PreconditionError("window constant must be positive");
  }
  const double r = window_C * std::sqrt(t) / std::log(t);
  return {-r, r, false};
}

WindowInterval window_interval(double t, double window_C, const Grid& grid) {
  WindowInterval w = window_interval(t, window_C);
  const double lo = -grid.half_length();
  const double hi = grid.half_length() - grid.spacing();
  if (w.a < lo) {
    w.a = lo;
    w.clipped = true;
  }
  if (w.b > hi) {
    w.b = hi;
    w.clipped = true;
  }
  return w;
}

}  // namespace gkdv
