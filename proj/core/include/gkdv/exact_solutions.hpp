#pragma once

#include <functional>

#include "gkdv/grid.hpp"
#include "gkdv/nonlinearity.hpp"

namespace gkdv {

/// Traveling wave Q_c(x - c t - x0) for the pure powers p = 2 and p = 3.
class SolitonParams {
 public:
  SolitonParams(double c, int p, double x0 = 0.0);

  double c() const noexcept { return c_; }
  int p() const noexcept { return p_; }
  double x0() const noexcept { return x0_; }

  /// Q_c(y): (3c/2) sech^2(sqrt(c) y / 2) for p = 2, sqrt(2c) sech(sqrt(c) y) for p = 3.
  double profile(double y) const noexcept;
  double value(double t, double x) const noexcept { return profile(x - c_ * t - x0_); }

 private:
  double c_;
  int p_;
  double x0_;
};

/// mKdV breather 2 sqrt(2) d/dx arctan(beta sin(alpha y1) / (alpha cosh(beta y2))),
/// y1 = x + delta t, y2 = x + gamma t.
class MkdvBreatherParams {
 public:
  MkdvBreatherParams(double alpha, double beta, double x0 = 0.0);

  /// beta = sqrt(3) alpha, so the envelope does not move.
  static MkdvBreatherParams standing(double alpha, double x0 = 0.0);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double x0() const noexcept { return x0_; }
  // A standing breather uses beta^2 = 3 alpha^2 exactly, whatever sqrt(3) rounds to.
  double delta() const noexcept {
    return standing_ ? -8.0 * alpha_ * alpha_ : alpha_ * alpha_ - 3.0 * beta_ * beta_;
  }
  double gamma() const noexcept { return standing_ ? 0.0 : 3.0 * alpha_ * alpha_ - beta_ * beta_; }
  bool is_standing() const noexcept { return gamma() == 0.0; }
  /// Period of the internal oscillation seen in the frame of the envelope.
  double internal_period() const;

  double value(double t, double x) const noexcept;

 private:
  double alpha_;
  double beta_;
  double x0_;
  bool standing_ = false;
};

/// Gardner breather 2 sqrt(2/mu) d/dx arctan(G/F); requires Delta > 0.
class GardnerBreatherParams {
 public:
  /// Throws AdmissibilityError when Delta = alpha^2 + beta^2 - 2/(9 mu) <= 0.
  GardnerBreatherParams(double alpha, double beta, double mu, double x0 = 0.0);

  static double admissibility(double alpha, double beta, double mu) noexcept {
    return alpha * alpha + beta * beta - 2.0 / (9.0 * mu);
  }

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double mu() const noexcept { return mu_; }
  double x0() const noexcept { return x0_; }
  double delta() const noexcept { return alpha_ * alpha_ - 3.0 * beta_ * beta_; }
  double gamma() const noexcept { return 3.0 * alpha_ * alpha_ - beta_ * beta_; }
  double Delta() const noexcept { return admissibility(alpha_, beta_, mu_); }

  double value(double t, double x) const noexcept;

 private:
  double alpha_;
  double beta_;
  double mu_;
  double x0_;
};

Field soliton_profile(const SolitonParams& params, double t, const Grid& g);
Field mkdv_breather(const MkdvBreatherParams& params, double t, const Grid& g);
Field gardner_breather(const GardnerBreatherParams& params, double t, const Grid& g);

/// A closed-form solution sampled at time t on a grid.
using ClosedForm = std::function<Field(double t, const Grid& g)>;

ClosedForm closed_form(const SolitonParams& params);
ClosedForm closed_form(const MkdvBreatherParams& params);
ClosedForm closed_form(const GardnerBreatherParams& params);

/// Max norm of [u(t+dt) - u(t-dt)]/(2 dt) + d/dx(u_xx + f(u)) at time t, with
/// spectral space derivatives. dt_probe must lie in [1e-8, 1e-4].
double pde_residual(const ClosedForm& u_of_t, double t, const Grid& g,
                    const NonlinearitySpec& spec, double dt_probe = 1e-6);

}  // namespace gkdv
