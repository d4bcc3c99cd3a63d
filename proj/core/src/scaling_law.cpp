#include "gkdv/scaling_law.hpp"

#include <cmath>
#include <string>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"

namespace gkdv {

ScalingLaw ScalingLaw::constant(double c0) {
  if (!(c0 > 0.0) || !std::isfinite(c0)) {
    throw PreconditionError("constant scaling c0 must be positive");
  }
  return ScalingLaw(Mode::Constant, c0);
}

LambdaValues ScalingLaw::eval(double t) const {
  if (mode_ == Mode::Constant) return {c0_, 0.0, 0.0};
  if (!(t >= 2.0) || !std::isfinite(t)) {
    throw PreconditionError("dynamic scaling law needs t >= 2, got t = " + format_real(t));
  }
  const double lg = std::log(t);
  const double rt = std::sqrt(t);
  const double bracket = 0.5 - 1.0 / lg;
  return {rt / lg, bracket / (rt * lg), bracket / t};
}

}  // namespace gkdv
