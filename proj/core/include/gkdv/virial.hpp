#pragma once

#include <span>
#include <vector>

#include "gkdv/grid.hpp"
#include "gkdv/nonlinearity.hpp"
#include "gkdv/scaling_law.hpp"
#include "gkdv/weight_profile.hpp"

namespace gkdv {

/// Right-hand side of a virial identity, term by term.
///
/// `printed` holds the whole-line terms in their usual order. `box_flux` is
/// what integration by parts leaves at x = +-L on the periodic box, where an
/// odd weight tanh(k x / lambda) jumps by 2 tanh(k L / lambda); it vanishes when
/// u and its derivatives vanish at the boundary.
struct IdentityTerms {
  std::vector<double> printed;
  double box_flux = 0.0;

  double printed_sum() const noexcept;
  double total() const noexcept { return printed_sum() + box_flux; }
};

struct DecayIntegrands {
  double i2;    // lambda^-1 int sech^2(x/lambda) u^2
  double i3;    // lambda^-1 int sech^4(x/lambda) u_x^2
  double i9;    // lambda^-1 int sech^6(x/lambda) u_xx^2
  double kato;  // int exp(-c0 |x|) (u^2 + u_x^2 + u_xx^2)
};

/// Precomputes the spectral derivatives and nonlinear composites of one state
/// so that every functional and right-hand side can reuse them.
///
/// With f = s^p + f1 and F its antiderivative, the functionals are
///   I = int psi(x/lam) u,  J = 1/2 int phi(x/lam) u^2,
///   K = int phi(x/lam) (u_x^2 / 2 - F(u)).
/// For p = 2 these are the usual I, J, K with the cubic term written out.
///
/// Odd (tanh) weights are integrated exactly against the trigonometric
/// interpolant of the integrand; the rectangle rule would see the jump of
/// the weight at the seam. Even weights use the rectangle rule.
class VirialEvaluator {
 public:
  VirialEvaluator(const State& s, const NonlinearitySpec& spec);

  const Grid& grid() const noexcept { return grid_; }
  double time() const noexcept { return time_; }

  double I(const WeightProfile& psi, double lam) const;
  double J(const WeightProfile& phi, double lam) const;
  double K(const WeightProfile& phi, double lam) const;

  IdentityTerms dI(const WeightProfile& psi, const LambdaValues& l) const;
  IdentityTerms dJ(const WeightProfile& phi, const LambdaValues& l) const;
  IdentityTerms dK(const WeightProfile& phi, const LambdaValues& l) const;

  DecayIntegrands decay(double lam, double c0) const;

  std::span<const double> u() const noexcept { return u_; }
  std::span<const double> ux() const noexcept { return ux_; }
  std::span<const double> uxx() const noexcept { return uxx_; }

 private:
  struct Sampled {
    std::vector<double> w, d1, d2, d3;
    double jump[4];  // w^(k)(L/lam) - w^(k)(-L/lam)
    double xjump;    // same for y w'(y)
  };
  Sampled sample(const WeightProfile& w, double lam) const;
  double weighted(const WeightProfile& w, double lam, std::span<const double> g) const;
  // Rectangle rule for a b, with b periodic. A weight factor a that differs
  // at +-L by a_jump gets the trapezoid end weights across the seam.
  double rect(std::span<const double> a, std::span<const double> b, double a_jump = 0.0) const;

  NonlinearitySpec spec_;
  Grid grid_;
  double time_;
  std::vector<double> u_, ux_, uxx_, g_, gx_, big_f_, w_, wx_, energy_, half_sq_;
};

/// Exact integral over [-L, L) of tanh(x / ell) times the trigonometric
/// interpolant of the samples g.
double integrate_tanh_weighted(const Grid& grid, std::span<const double> g, double ell);

// Single-shot spellings; each builds a VirialEvaluator. `t` selects lambda(t).
double functional_I(const State& s, const WeightProfile& psi, const ScalingLaw& law, double t);
double functional_J(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t);
double functional_K(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                    const NonlinearitySpec& spec);
double dI_dt_rhs(const State& s, const WeightProfile& psi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec);
double dJ_dt_rhs(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec);
double dK_dt_rhs(const State& s, const WeightProfile& phi, const ScalingLaw& law, double t,
                 const NonlinearitySpec& spec);
DecayIntegrands decay_integrands(const State& s, const ScalingLaw& law, double t,
                                 const NonlinearitySpec& spec, double c0 = 1.0);

struct WindowInterval {
  double a;
  double b;
  bool clipped = false;
};

/// (-C t^{1/2} / log t, C t^{1/2} / log t). Requires t >= 2 and C > 0.
WindowInterval window_interval(double t, double window_C);
/// Same, clipped to the grid domain [-L, L - h].
WindowInterval window_interval(double t, double window_C, const Grid& grid);

}  // namespace gkdv
