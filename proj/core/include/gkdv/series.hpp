#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkdv/grid.hpp"
#include "gkdv/nonlinearity.hpp"
#include "gkdv/scaling_law.hpp"

namespace gkdv {

/// One observed time. Undefined entries (virial quantities before t = 2 in
/// dynamic mode, finite differences at the ends) are NaN.
struct SeriesRow {
  double t = 0.0;
  double I = 0.0, dI_fd = 0.0, dI_rhs = 0.0;
  double J_tanh2 = 0.0, dJ_fd = 0.0, dJ_rhs = 0.0, J_sech6 = 0.0;
  double K_tanh3 = 0.0, dK_fd = 0.0, dK_rhs = 0.0, K_sech8 = 0.0;
  double i2 = 0.0, i3 = 0.0, i9 = 0.0, kato = 0.0;
  double cum_i2 = 0.0, cum_i3 = 0.0, cum_i9 = 0.0, cum_kato = 0.0;
  double win_a = 0.0, win_b = 0.0, win_l2 = 0.0, win_h1 = 0.0;
  double mass = 0.0, l2 = 0.0, energy = 0.0;
  bool lambda_valid = false;

  // Not part of series.csv.
  double lam = 0.0;
  double box_I = 0.0, box_J = 0.0, box_K = 0.0;
  double h1 = 0.0, l1 = 0.0, linf = 0.0;
  double edge_max = 0.0;    // max |u| over |x| >= 0.95 L
  double soliton_h1 = 0.0;  // H1 norm over x > v t
  bool window_clipped = false;
};

struct VirialSeries {
  std::vector<SeriesRow> rows;

  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }

  /// The series.csv header, in order.
  static const std::vector<std::string>& csv_columns();
  /// A CSV column by name (lambda_valid as 0/1). Throws PreconditionError.
  std::vector<double> column(std::string_view name) const;
  static double value(const SeriesRow& row, std::string_view name);
  static void set_value(SeriesRow& row, std::string_view name, double v);
};

/// Printed right-hand-side terms of each identity at one time.
struct IdentityTermValues {
  std::vector<double> I, J, K;
};

struct SeriesOptions {
  NonlinearitySpec spec = NonlinearitySpec::kdv();
  ScalingLaw law = ScalingLaw::dynamic();
  double window_C = 1.0;
  double c0 = 1.0;
  double soliton_v = 0.05;
};

/// Single-writer accumulator: feed states in increasing time, then finish().
class SeriesBuilder {
 public:
  explicit SeriesBuilder(SeriesOptions options);

  void observe(const State& s);
  /// Fills the central-difference and cumulative columns.
  VirialSeries finish() const;

  const SeriesOptions& options() const noexcept { return options_; }
  std::size_t size() const noexcept { return rows_.size(); }

 private:
  SeriesOptions options_;
  std::vector<SeriesRow> rows_;
};

struct ProbeOptions {
  double t_start = 2.0;
  /// Time between probe centres.
  double every = 0.25;
  /// Steps between the five evaluations of a probe; Delta = offset * dt.
  std::size_t offset = 2;
};

/// Functionals at t + k Delta, k = -2..2, and the right-hand sides at t.
struct ProbeSample {
  double t = 0.0;
  double delta = 0.0;
  double F[3][5] = {};  // I (tanh_1), J (tanh_2), K (tanh_3)
  double rhs[3] = {};
  double box[3] = {};
  IdentityTermValues terms;

  /// Central difference with spacing h * Delta, h in {1, 2}.
  double fd(int which, int h) const noexcept;
  /// (4 fd(Delta) - fd(2 Delta)) / 3, fourth order in Delta.
  double richardson(int which) const noexcept;
};

/// Dense identity check around a sparse set of times. Observe every step of
/// an evolution started at t0 with step dt; states far from a probe centre are
/// skipped cheaply.
class IdentityProbe {
 public:
  IdentityProbe(SeriesOptions options, double t0, double dt, ProbeOptions probe = {});

  void observe(const State& s);
  /// Probes with all five evaluations present, in time order.
  std::vector<ProbeSample> samples() const;

 private:
  SeriesOptions options_;
  double t0_;
  double dt_;
  ProbeOptions probe_;
  long long first_centre_;
  long long period_;
  std::vector<ProbeSample> pending_;
  std::vector<int> filled_;
};

/// Central differences (F[i+1] - F[i-1]) / (t[i+1] - t[i-1]); NaN at the ends
/// and wherever a neighbour is NaN.
std::vector<double> central_difference(std::span<const double> t, std::span<const double> f);

/// Trapezoid running integral starting at the first index with t >= t_start
/// and finite f; zero before that.
std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f,
                                         double t_start);

}  // namespace gkdv
