#include "gkdv/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gkdv/errors.hpp"
#include "gkdv/virial.hpp"

namespace gkdv {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct ColumnDef {
  const char* name;
  double SeriesRow::*member;
};

// lambda_valid is a bool and handled separately.
constexpr ColumnDef kColumns[] = {
    {"t", &SeriesRow::t},
    {"I", &SeriesRow::I},
    {"dI_fd", &SeriesRow::dI_fd},
    {"dI_rhs", &SeriesRow::dI_rhs},
    {"J_tanh2", &SeriesRow::J_tanh2},
    {"dJ_fd", &SeriesRow::dJ_fd},
    {"dJ_rhs", &SeriesRow::dJ_rhs},
    {"J_sech6", &SeriesRow::J_sech6},
    {"K_tanh3", &SeriesRow::K_tanh3},
    {"dK_fd", &SeriesRow::dK_fd},
    {"dK_rhs", &SeriesRow::dK_rhs},
    {"K_sech8", &SeriesRow::K_sech8},
    {"i2", &SeriesRow::i2},
    {"i3", &SeriesRow::i3},
    {"i9", &SeriesRow::i9},
    {"kato", &SeriesRow::kato},
    {"cum_i2", &SeriesRow::cum_i2},
    {"cum_i3", &SeriesRow::cum_i3},
    {"cum_i9", &SeriesRow::cum_i9},
    {"cum_kato", &SeriesRow::cum_kato},
    {"win_a", &SeriesRow::win_a},
    {"win_b", &SeriesRow::win_b},
    {"win_l2", &SeriesRow::win_l2},
    {"win_h1", &SeriesRow::win_h1},
    {"mass", &SeriesRow::mass},
    {"l2", &SeriesRow::l2},
    {"energy", &SeriesRow::energy},
};

}  // namespace

const std::vector<std::string>& VirialSeries::csv_columns() {
  static const std::vector<std::string> cols = [] {
    std::vector<std::string> c;
    for (const auto& d : kColumns) c.emplace_back(d.name);
    c.emplace_back("lambda_valid");
    return c;
  }();
  return cols;
}

double VirialSeries::value(const SeriesRow& row, std::string_view name) {
  if (name == "lambda_valid") return row.lambda_valid ? 1.0 : 0.0;
  for (const auto& d : kColumns) {
    if (name == d.name) return row.*(d.member);
  }
  throw PreconditionError("unknown series column '" + std::string(name) + "'");
}

void VirialSeries::set_value(SeriesRow& row, std::string_view name, double v) {
  if (name == "lambda_valid") {
    row.lambda_valid = v != 0.0;
    return;
  }
  for (const auto& d : kColumns) {
    if (name == d.name) {
      row.*(d.member) = v;
      return;
    }
  }
  throw PreconditionError("unknown series column '" + std::string(name) + "'");
}

std::vector<double> VirialSeries::column(std::string_view name) const {
  value(SeriesRow{}, name);  // validates the name
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(value(r, name));
  return out;
}

std::vector<double> central_difference(std::span<const double> t, std::span<const double> f) {
  if (t.size() != f.size()) throw PreconditionError("time and value series differ in length");
  std::vector<double> out(f.size(), kNaN);
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (std::isfinite(f[i - 1]) && std::isfinite(f[i + 1])) {
      out[i] = (f[i + 1] - f[i - 1]) / (t[i + 1] - t[i - 1]);
    }
  }
  return out;
}

std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f,
                                         double t_start) {
  if (t.size() != f.size()) throw PreconditionError("time and value series differ in length");
  std::vector<double> out(f.size(), 0.0);
  bool started = false;
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!started) {
      started = t[i] >= t_start && std::isfinite(f[i]);
    } else {
      if (std::isfinite(f[i]) && std::isfinite(f[i - 1])) {
        acc += 0.5 * (f[i] + f[i - 1]) * (t[i] - t[i - 1]);
      }
    }
    out[i] = acc;
  }
  return out;
}

SeriesBuilder::SeriesBuilder(SeriesOptions options) : options_(std::move(options)) {
  if (!(options_.window_C > 0.0)) throw PreconditionError("window_C must be positive");
  if (!(options_.c0 > 0.0)) throw PreconditionError("c0 must be positive");
  if (!(options_.soliton_v >= 0.0)) throw PreconditionError("soliton_v must be nonnegative");
}

void SeriesBuilder::observe(const State& s) {
  if (!rows_.empty() && !(s.time > rows_.back().t)) {
    throw PreconditionError("series times must be strictly increasing");
  }
  const Grid& grid = s.field.grid();
  const VirialEvaluator ev(s, options_.spec);
  const auto u = ev.u();
  const auto ux = ev.ux();
  const double h = grid.spacing();
  const double t = s.time;
  const auto& spec = options_.spec;

  SeriesRow r;
  r.t = t;
  double mass = 0, l2 = 0, energy = 0, l1 = 0, sq_ux = 0, linf = 0, edge = 0, sol = 0;
  const double edge_x = 0.95 * grid.half_length();
  for (std::size_t j = 0; j < u.size(); ++j) {
    const double x = grid.x(j);
    const double u2 = u[j] * u[j];
    const double ux2 = ux[j] * ux[j];
    mass += u[j];
    l2 += u2;
    energy += 0.5 * ux2 - spec.F(u[j]);
    l1 += std::abs(u[j]);
    sq_ux += ux2;
    linf = std::max(linf, std::abs(u[j]));
    if (std::abs(x) >= edge_x) edge = std::max(edge, std::abs(u[j]));
    if (x > options_.soliton_v * t) sol += u2 + ux2;
  }
  r.mass = mass * h;
  r.l2 = l2 * h;
  r.energy = energy * h;
  r.l1 = l1 * h;
  r.h1 = std::sqrt((l2 + sq_ux) * h);
  r.linf = linf;
  r.edge_max = edge;
  r.soliton_h1 = std::sqrt(sol * h);
  r.kato = ev.decay(1.0, options_.c0).kato;

  if (options_.law.evaluable(t)) {
    const LambdaValues lv = options_.law.eval(t);
    r.lam = lv.lam;
    r.lambda_valid = t >= 2.0 && lv.lam <= grid.half_length() / 10.0;
    const auto tanh1 = WeightProfile::tanh(1);
    const auto tanh2 = WeightProfile::tanh(2);
    const auto tanh3 = WeightProfile::tanh(3);
    r.I = ev.I(tanh1, lv.lam);
    r.J_tanh2 = ev.J(tanh2, lv.lam);
    r.J_sech6 = ev.J(WeightProfile::sech(6), lv.lam);
    r.K_tanh3 = ev.K(tanh3, lv.lam);
    r.K_sech8 = ev.K(WeightProfile::sech(8), lv.lam);
    const auto di = ev.dI(tanh1, lv);
    const auto dj = ev.dJ(tanh2, lv);
    const auto dk = ev.dK(tanh3, lv);
    r.dI_rhs = di.total();
    r.dJ_rhs = dj.total();
    r.dK_rhs = dk.total();
    r.box_I = di.box_flux;
    r.box_J = dj.box_flux;
    r.box_K = dk.box_flux;
    const auto d = ev.decay(lv.lam, options_.c0);
    r.i2 = d.i2;
    r.i3 = d.i3;
    r.i9 = d.i9;
  } else {
    r.lam = kNaN;
    r.I = r.dI_rhs = r.J_tanh2 = r.dJ_rhs = r.J_sech6 = kNaN;
    r.K_tanh3 = r.dK_rhs = r.K_sech8 = kNaN;
    r.i2 = r.i3 = r.i9 = kNaN;
    r.box_I = r.box_J = r.box_K = kNaN;
  }

  if (t >= 2.0) {
    const auto win = window_interval(t, options_.window_C, grid);
    r.win_a = win.a;
    r.win_b = win.b;
    r.window_clipped = win.clipped;
    double wl2 = 0, wux = 0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      const double x = grid.x(j);
      if (x >= win.a && x <= win.b) {
        wl2 += u[j] * u[j];
        wux += ux[j] * ux[j];
      }
    }
    r.win_l2 = std::sqrt(wl2 * h);
    r.win_h1 = std::sqrt((wl2 + wux) * h);
  } else {
    r.win_a = r.win_b = r.win_l2 = r.win_h1 = kNaN;
  }
  rows_.push_back(r);
}

VirialSeries SeriesBuilder::finish() const {
  VirialSeries out;
  out.rows = rows_;
  const std::size_t n = rows_.size();
  std::vector<double> t(n), a(n), b(n), c(n), i2(n), i3(n), i9(n), kato(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = rows_[i].t;
    a[i] = rows_[i].I;
    b[i] = rows_[i].J_tanh2;
    c[i] = rows_[i].K_tanh3;
    i2[i] = rows_[i].i2;
    i3[i] = rows_[i].i3;
    i9[i] = rows_[i].i9;
    kato[i] = rows_[i].kato;
  }
  const auto da = central_difference(t, a);
  const auto db = central_difference(t, b);
  const auto dc = central_difference(t, c);
  const auto ci2 = cumulative_trapezoid(t, i2, 2.0);
  const auto ci3 = cumulative_trapezoid(t, i3, 2.0);
  const auto ci9 = cumulative_trapezoid(t, i9, 2.0);
  const auto ck = cumulative_trapezoid(t, kato, 2.0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& r = out.rows[i];
    r.dI_fd = da[i];
    r.dJ_fd = db[i];
    r.dK_fd = dc[i];
    r.cum_i2 = ci2[i];
    r.cum_i3 = ci3[i];
    r.cum_i9 = ci9[i];
    r.cum_kato = ck[i];
  }
  return out;
}

double ProbeSample::fd(int which, int h) const noexcept {
  return (F[which][2 + h] - F[which][2 - h]) / (2.0 * h * delta);
}

double ProbeSample::richardson(int which) const noexcept {
  return (4.0 * fd(which, 1) - fd(which, 2)) / 3.0;
}

IdentityProbe::IdentityProbe(SeriesOptions options, double t0, double dt, ProbeOptions probe)
    : options_(std::move(options)), t0_(t0), dt_(dt), probe_(probe) {
  if (!(dt > 0.0)) throw PreconditionError("probe step must be positive");
  if (probe_.offset == 0) throw PreconditionError("probe offset must be positive");
  period_ = std::llround(probe_.every / dt);
  if (period_ <= static_cast<long long>(4 * probe_.offset)) {
    throw PreconditionError("probe spacing must exceed four offsets");
  }
  const double lead = std::max(probe_.t_start - t0, 0.0);
  first_centre_ = static_cast<long long>(std::ceil(lead / dt - 1e-9)) +
                  2 * static_cast<long long>(probe_.offset);
}

void IdentityProbe::observe(const State& s) {
  const long long k = std::llround((s.time - t0_) / dt_);
  const long long off = static_cast<long long>(probe_.offset);
  int slot = -1;
  long long centre = 0;
  for (int m = -2; m <= 2; ++m) {
    const long long c = k - m * off;
    if (c >= first_centre_ && (c - first_centre_) % period_ == 0) {
      slot = m + 2;
      centre = c;
      break;
    }
  }
  if (slot < 0) return;
  const double tc = t0_ + static_cast<double>(centre) * dt_;
  if (pending_.empty() || std::abs(pending_.back().t - tc) > 0.5 * dt_) {
    ProbeSample p;
    p.t = tc;
    p.delta = static_cast<double>(off) * dt_;
    pending_.push_back(p);
    filled_.push_back(0);
  }
  ProbeSample& p = pending_.back();
  const VirialEvaluator ev(s, options_.spec);
  const LambdaValues lv = options_.law.eval(tc);
  const auto w1 = WeightProfile::tanh(1);
  const auto w2 = WeightProfile::tanh(2);
  const auto w3 = WeightProfile::tanh(3);
  const LambdaValues here = options_.law.eval(s.time);
  p.F[0][slot] = ev.I(w1, here.lam);
  p.F[1][slot] = ev.J(w2, here.lam);
  p.F[2][slot] = ev.K(w3, here.lam);
  ++filled_.back();
  if (slot == 2) {
    const IdentityTerms terms[3] = {ev.dI(w1, lv), ev.dJ(w2, lv), ev.dK(w3, lv)};
    std::vector<double>* sums[3] = {&p.terms.I, &p.terms.J, &p.terms.K};
    for (int i = 0; i < 3; ++i) {
      p.rhs[i] = terms[i].total();
      p.box[i] = terms[i].box_flux;
      sums[i]->assign(terms[i].printed.begin(), terms[i].printed.end());
    }
  }
}

std::vector<ProbeSample> IdentityProbe::samples() const {
  std::vector<ProbeSample> out;
  for (std::size_t i = 0; i < pending_.size(); ++i) {
    if (filled_[i] == 5) out.push_back(pending_[i]);
  }
  return out;
}

}  // namespace gkdv
