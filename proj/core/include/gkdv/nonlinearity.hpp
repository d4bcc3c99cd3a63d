#pragma once

#include <string>
#include <vector>

namespace gkdv {

struct Monomial {
  int degree;
  double coeff;
};

/// f(s) = s^p + f1(s), with f1 a finite sum of monomials of degree > p.
///
/// F1 and F are the antiderivatives of f1 and f normalized by F1(0) = F(0) = 0.
class NonlinearitySpec {
 public:
  NonlinearitySpec(int p, std::vector<Monomial> f1);

  static NonlinearitySpec kdv() { return NonlinearitySpec(2, {}); }
  static NonlinearitySpec mkdv() { return NonlinearitySpec(3, {}); }
  static NonlinearitySpec gardner(double mu) { return NonlinearitySpec(2, {{3, mu}}); }

  int p() const noexcept { return p_; }
  const std::vector<Monomial>& f1_terms() const noexcept { return f1_; }
  /// Highest polynomial degree appearing in f (sets the dealiasing fraction).
  int max_degree() const noexcept;

  double f(double s) const noexcept;
  double f1(double s) const noexcept;
  double F1(double s) const noexcept;
  double F(double s) const noexcept;

  /// Serialized as `p = <int>` and `f1 = [[degree, coeff], ...]`.
  std::string f1_to_string() const;
  static std::vector<Monomial> parse_f1(const std::string& text);

  bool operator==(const NonlinearitySpec&) const = default;

 private:
  int p_;
  std::vector<Monomial> f1_;
};

inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.degree == b.degree && a.coeff == b.coeff;
}

// Free-function spellings of the member evaluators.
inline double eval_f(const NonlinearitySpec& spec, double s) { return spec.f(s); }
inline double eval_f1(const NonlinearitySpec& spec, double s) { return spec.f1(s); }
inline double eval_F1(const NonlinearitySpec& spec, double s) { return spec.F1(s); }
inline double eval_F(const NonlinearitySpec& spec, double s) { return spec.F(s); }

/// Advisory check that s^p + f1(s) >= s^p / 2 on |s| <= amplitude (p even),
/// by sampling 1000 points and by the coefficient bound
/// sum |coeff| amplitude^(degree - p) <= 1/2. For odd p only the coefficient
/// bound applies. Returns false instead of throwing.
bool check_smallness_domination(const NonlinearitySpec& spec, double amplitude);

}  // namespace gkdv
