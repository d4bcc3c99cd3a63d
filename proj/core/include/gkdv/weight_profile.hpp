#pragma once

#include <string>

namespace gkdv {

struct WeightDerivatives {
  double w;
  double d1;
  double d2;
  double d3;
};

/// Bounded virial weight with closed-form derivatives up to third order:
/// tanh(k y) for k in {1, 2, 3}, or sech^m(y) for m in {2, 4, 6, 8}.
class WeightProfile {
 public:
  enum class Family { Tanh, Sech };

  static WeightProfile tanh(int k);
  static WeightProfile sech(int m);
  /// "tanh_1", "sech_6", ...
  static WeightProfile parse(const std::string& name);

  Family family() const noexcept { return family_; }
  int parameter() const noexcept { return param_; }
  bool is_odd() const noexcept { return family_ == Family::Tanh; }
  std::string name() const;

  WeightDerivatives eval(double y) const noexcept;

  bool operator==(const WeightProfile&) const = default;

 private:
  WeightProfile(Family f, int p) : family_(f), param_(p) {}

  Family family_;
  int param_;
};

inline WeightDerivatives weight_eval(const WeightProfile& w, double x) { return w.eval(x); }

}  // namespace gkdv
