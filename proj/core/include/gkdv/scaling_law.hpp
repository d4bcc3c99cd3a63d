#pragma once

namespace gkdv {

struct LambdaValues {
  double lam;
  double lam_prime;
  double ratio;  // lam_prime / lam
};

/// Dilation of the virial weights: lambda(t) = t^{1/2} / log t for t >= 2, or a
/// constant c0 (then lambda' = 0 and every transport term drops out).
class ScalingLaw {
 public:
  enum class Mode { Dynamic, Constant };

  static ScalingLaw dynamic() { return ScalingLaw(Mode::Dynamic, 1.0); }
  static ScalingLaw constant(double c0);

  Mode mode() const noexcept { return mode_; }
  double c0() const noexcept { return c0_; }
  bool evaluable(double t) const noexcept { return mode_ == Mode::Constant || t >= 2.0; }

  /// Throws PreconditionError for t < 2 in dynamic mode.
  LambdaValues eval(double t) const;

 private:
  ScalingLaw(Mode mode, double c0) : mode_(mode), c0_(c0) {}

  Mode mode_;
  double c0_;
};

inline LambdaValues lambda_eval(const ScalingLaw& law, double t) { return law.eval(t); }

}  // namespace gkdv
