#include "gkdv/exact_solutions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"
#include "gkdv/spectral.hpp"

namespace gkdv {

namespace {

double sech(double x) noexcept {
  const double a = std::abs(x);
  if (a > 700.0) return 0.0;
  return 1.0 / std::cosh(a);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw PreconditionError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

SolitonParams::SolitonParams(double c, int p, double x0) : c_(c), p_(p), x0_(x0) {
  require_positive(c, "soliton speed c");
  if (p != 2 && p != 3) {
    throw PreconditionError("closed-form solitons exist here only for p = 2 or p = 3");
  }
  if (!std::isfinite(x0)) throw PreconditionError("soliton center must be finite");
}

double SolitonParams::profile(double y) const noexcept {
  const double rc = std::sqrt(c_);
  if (p_ == 2) {
    const double s = sech(0.5 * rc * y);
    return 1.5 * c_ * s * s;
  }
  return std::sqrt(2.0 * c_) * sech(rc * y);
}

MkdvBreatherParams::MkdvBreatherParams(double alpha, double beta, double x0)
    : alpha_(alpha), beta_(beta), x0_(x0) {
  require_positive(alpha, "breather alpha");
  require_positive(beta, "breather beta");
}

MkdvBreatherParams MkdvBreatherParams::standing(double alpha, double x0) {
  MkdvBreatherParams b(alpha, std::sqrt(3.0) * alpha, x0);
  b.standing_ = true;
  return b;
}

double MkdvBreatherParams::internal_period() const {
  const double rate = alpha_ * std::abs(delta() - gamma());
  return 2.0 * std::numbers::pi / rate;
}

double MkdvBreatherParams::value(double t, double x) const noexcept {
  const double a = alpha_, b = beta_;
  const double y1 = x - x0_ + delta() * t;
  const double y2 = x - x0_ + gamma() * t;
  // d/dx arctan(N/D) = (N'D - N D')/(D^2 + N^2), divided through by cosh^2(b y2).
  const double sn = std::sin(a * y1), cs = std::cos(a * y1);
  const double sh = sech(b * y2), th = std::tanh(b * y2);
  const double num = a * a * b * cs * sh - a * b * b * sn * th * sh;
  const double den = a * a + b * b * sn * sn * sh * sh;
  return 2.0 * std::numbers::sqrt2 * num / den;
}

GardnerBreatherParams::GardnerBreatherParams(double alpha, double beta, double mu, double x0)
    : alpha_(alpha), beta_(beta), mu_(mu), x0_(x0) {
  require_positive(alpha, "breather alpha");
  require_positive(beta, "breather beta");
  require_positive(mu, "Gardner mu");
  const double d = admissibility(alpha, beta, mu);
  if (!(d > 0.0)) {
    throw AdmissibilityError("Gardner breather not admissible: Delta = alpha^2 + beta^2 - 2/(9 mu) = " +
                                 format_real(d) + " must be > 0",
                             d);
  }
}

double GardnerBreatherParams::value(double t, double x) const noexcept {
  const double a = alpha_, b = beta_, m = mu_;
  const double D = Delta();
  const double r = std::sqrt(a * a + b * b);
  const double y1 = x - x0_ + delta() * t;
  const double y2 = x - x0_ + gamma() * t;

  const double cG1 = b * r / (a * std::sqrt(D));
  const double cG2 = std::numbers::sqrt2 * b / (3.0 * std::sqrt(m) * D);
  const double cF = std::numbers::sqrt2 * b / (3.0 * std::sqrt(m) * a * r * std::sqrt(D));

  // Every term is multiplied by s = exp(-b |y2|) so that cosh, sinh and
  // cosh + sinh = exp(b y2) stay bounded; the quotient is unchanged.
  const double s = std::exp(-b * std::abs(y2));
  const double e_plus = std::exp(b * (y2 - std::abs(y2)));            // s * exp(b y2)
  const double e_minus = std::exp(-b * (y2 + std::abs(y2)));          // s * exp(-b y2)
  const double ch = 0.5 * (e_plus + e_minus);                         // s * cosh
  const double shy = 0.5 * (e_plus - e_minus);                        // s * sinh
  const double sn = std::sin(a * y1), cs = std::cos(a * y1);

  const double G = cG1 * s * sn - cG2 * e_plus;
  const double F = ch - cF * s * (a * cs - b * sn);
  const double dG = cG1 * a * s * cs - cG2 * b * e_plus;
  const double dF = b * shy + cF * a * s * (a * sn + b * cs);

  return 2.0 * std::sqrt(2.0 / m) * (dG * F - G * dF) / (F * F + G * G);
}

Field soliton_profile(const SolitonParams& params, double t, const Grid& g) {
  return Field::sample(g, [&](double x) { return params.value(t, x); });
}

Field mkdv_breather(const MkdvBreatherParams& params, double t, const Grid& g) {
  return Field::sample(g, [&](double x) { return params.value(t, x); });
}

Field gardner_breather(const GardnerBreatherParams& params, double t, const Grid& g) {
  return Field::sample(g, [&](double x) { return params.value(t, x); });
}

ClosedForm closed_form(const SolitonParams& params) {
  return [params](double t, const Grid& g) { return soliton_profile(params, t, g); };
}

ClosedForm closed_form(const MkdvBreatherParams& params) {
  return [params](double t, const Grid& g) { return mkdv_breather(params, t, g); };
}

ClosedForm closed_form(const GardnerBreatherParams& params) {
  return [params](double t, const Grid& g) { return gardner_breather(params, t, g); };
}

double pde_residual(const ClosedForm& u_of_t, double t, const Grid& g,
                    const NonlinearitySpec& spec, double dt_probe) {
  if (!(dt_probe >= 1e-8 && dt_probe <= 1e-4)) {
    throw PreconditionError("dt_probe must lie in [1e-8, 1e-4]");
  }
  const Field plus = u_of_t(t + dt_probe, g);
  const Field minus = u_of_t(t - dt_probe, g);
  const Field now = u_of_t(t, g);
  const std::size_t n = g.size();

  std::vector<double> flux(n);
  spectral_derivative(g, now.values(), 2, flux);
  for (std::size_t j = 0; j < n; ++j) flux[j] += spec.f(now[j]);
  std::vector<double> dflux(n);
  spectral_derivative(g, flux, 1, dflux);

  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double ut = (plus[j] - minus[j]) / (2.0 * dt_probe);
    worst = std::max(worst, std::abs(ut + dflux[j]));
  }
  return worst;
}

}  // namespace gkdv
