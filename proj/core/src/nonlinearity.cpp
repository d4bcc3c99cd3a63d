#include "gkdv/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "gkdv/errors.hpp"
#include "gkdv/format.hpp"

namespace gkdv {

namespace {

double ipow(double s, int d) {
  double r = 1.0;
  for (int i = 0; i < d; ++i) r *= s;
  return r;
}

}  // namespace

NonlinearitySpec::NonlinearitySpec(int p, std::vector<Monomial> f1) : p_(p), f1_(std::move(f1)) {
  if (p_ < 2) throw PreconditionError("nonlinearity power p must be >= 2");
  for (const Monomial& m : f1_) {
    if (m.degree <= p_) {
      throw PreconditionError("every f1 monomial must have degree > p (degree " +
                              std::to_string(m.degree) + ", p = " + std::to_string(p_) + ")");
    }
    if (!std::isfinite(m.coeff)) throw PreconditionError("f1 coefficient must be finite");
  }
}

int NonlinearitySpec::max_degree() const noexcept {
  int d = p_;
  for (const Monomial& m : f1_) d = std::max(d, m.degree);
  return d;
}

double NonlinearitySpec::f1(double s) const noexcept {
  double r = 0.0;
  for (const Monomial& m : f1_) r += m.coeff * ipow(s, m.degree);
  return r;
}

double NonlinearitySpec::f(double s) const noexcept { return ipow(s, p_) + f1(s); }

double NonlinearitySpec::F1(double s) const noexcept {
  double r = 0.0;
  for (const Monomial& m : f1_) r += m.coeff * ipow(s, m.degree + 1) / (m.degree + 1);
  return r;
}

double NonlinearitySpec::F(double s) const noexcept {
  return ipow(s, p_ + 1) / (p_ + 1) + F1(s);
}

std::string NonlinearitySpec::f1_to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < f1_.size(); ++i) {
    if (i > 0) out += ", ";
    out += "[" + std::to_string(f1_[i].degree) + ", " + format_real(f1_[i].coeff) + "]";
  }
  return out + "]";
}

std::vector<Monomial> NonlinearitySpec::parse_f1(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse f1 list '" + text + "': " + e.what());
  }
  if (!j.is_array()) throw ConfigError("f1 must be a list of [degree, coeff] pairs");
  std::vector<Monomial> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number()) {
      throw ConfigError("f1 entries must be [degree, coeff] pairs, got " + item.dump());
    }
    out.push_back({item[0].get<int>(), item[1].get<double>()});
  }
  return out;
}

bool check_smallness_domination(const NonlinearitySpec& spec, double amplitude) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) return false;
  if (spec.f1_terms().empty()) return true;

  double bound = 0.0;
  for (const Monomial& m : spec.f1_terms()) {
    bound += std::abs(m.coeff) * ipow(amplitude, m.degree - spec.p());
  }
  const bool bound_ok = bound <= 0.5;

  const bool even = spec.p() % 2 == 0;
  constexpr int kSamples = 1000;
  bool sampled_ok = true;
  for (int i = 0; i < kSamples && sampled_ok; ++i) {
    const double s = -amplitude + 2.0 * amplitude * i / (kSamples - 1);
    const double sp = ipow(s, spec.p());
    if (even) {
      sampled_ok = sp + spec.f1(s) >= 0.5 * sp;
    } else {
      sampled_ok = std::abs(spec.f1(s)) <= 0.5 * std::abs(sp);
    }
  }
  return bound_ok && sampled_ok;
}

}  // namespace gkdv
