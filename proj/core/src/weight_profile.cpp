#include "gkdv/weight_profile.hpp"

#include <cmath>

#include "gkdv/errors.hpp"

namespace gkdv {

WeightProfile WeightProfile::tanh(int k) {
  if (k < 1 || k > 3) throw PreconditionError("tanh weight needs k in {1, 2, 3}");
  return WeightProfile(Family::Tanh, k);
}

WeightProfile WeightProfile::sech(int m) {
  if (m != 2 && m != 4 && m != 6 && m != 8) {
    throw PreconditionError("sech weight needs m in {2, 4, 6, 8}");
  }
  return WeightProfile(Family::Sech, m);
}

WeightProfile WeightProfile::parse(const std::string& name) {
  const auto us = name.find('_');
  if (us == std::string::npos) throw PreconditionError("unknown weight profile '" + name + "'");
  const std::string fam = name.substr(0, us);
  const int p = std::stoi(name.substr(us + 1));
  if (fam == "tanh") return tanh(p);
  if (fam == "sech") return sech(p);
  throw PreconditionError("unknown weight profile '" + name + "'");
}

std::string WeightProfile::name() const {
  return (family_ == Family::Tanh ? "tanh_" : "sech_") + std::to_string(param_);
}

WeightDerivatives WeightProfile::eval(double y) const noexcept {
  if (family_ == Family::Tanh) {
    const double k = param_;
    const double th = std::tanh(k * y);
    const double s2 = 1.0 - th * th;  // sech^2(k y)
    return {th, k * s2, -2.0 * k * k * s2 * th, -2.0 * k * k * k * s2 * (1.0 - 3.0 * th * th)};
  }
  // g = sech^m, g' = -m T g, g'' = -m g (1 - (m+1) T^2),
  // g''' = m T g ((3m + 2) - (m+1)(m+2) T^2), T = tanh y.
  const double m = param_;
  const double a = std::abs(y);
  const double s = a > 700.0 ? 0.0 : 1.0 / std::cosh(a);
  const double t = std::tanh(y);
  const double g = std::pow(s, m);
  return {g, -m * t * g, -m * g * (1.0 - (m + 1.0) * t * t),
          m * t * g * ((3.0 * m + 2.0) - (m + 1.0) * (m + 2.0) * t * t)};
}

}  // namespace gkdv
