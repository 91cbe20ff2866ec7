#include "lmhd/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmhd/errors.hpp"
#include "lmhd/littlewood_paley.hpp"
#include "lmhd/osgood.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

namespace {
double sq(double x) { return x * x; }
}  // namespace

const std::vector<std::string>& record_field_names() {
  static const std::vector<std::string> names{
      "t",          "energy",     "diss_u",    "diss_b",   "X",        "Y_s",           "gamma_norm", "grad_u_inf",
      "split_low",  "split_high", "L1_grad_u", "cum_diss", "cum_diss_b", "cum_L1_grad_u", "div_u",    "div_b"};
  return names;
}

std::vector<double> record_values(const DiagnosticRecord& r) {
  return {r.t,         r.energy,     r.diss_u,    r.diss_b,   r.X,          r.Y_s,           r.gamma_norm, r.grad_u_inf,
          r.split_low, r.split_high, r.L1_grad_u, r.cum_diss, r.cum_diss_b, r.cum_L1_grad_u, r.div_u,      r.div_b};
}

DiagnosticRecord record_from_values(const std::vector<double>& v) {
  detail::require(v.size() == record_field_names().size(), "wrong number of diagnostic values");
  DiagnosticRecord r;
  std::size_t i = 0;
  for (double* field : {&r.t, &r.energy, &r.diss_u, &r.diss_b, &r.X, &r.Y_s, &r.gamma_norm, &r.grad_u_inf,
                        &r.split_low, &r.split_high, &r.L1_grad_u, &r.cum_diss, &r.cum_diss_b, &r.cum_L1_grad_u,
                        &r.div_u, &r.div_b}) {
    *field = v[i++];
  }
  return r;
}

DiagnosticSettings DiagnosticSettings::defaults(int dim) { return {(3.0 + dim) / 2.0, 3.0 + dim}; }

DiagnosticRecord record(const SolutionPair& state, const SystemParams& params, const DiagnosticSettings& settings) {
  DiagnosticRecord r;
  r.t = state.time;
  r.energy = 0.5 * (sq(l2_norm(state.u)) + sq(l2_norm(state.b)));
  r.diss_u = sq(l2_norm(apply_L(state.u, params.diss_u)));
  r.diss_b = sq(l2_norm(apply_L(state.b, params.diss_b)));
  r.X = sq(hs_norm(state.u, 1.0)) + sq(hs_norm(state.b, 1.0));
  r.Y_s = sq(hs_norm(state.u, settings.s)) + sq(hs_norm(state.b, settings.s));
  r.gamma_norm = sq(hs_norm(state.u, settings.gamma)) + sq(hs_norm(state.b, settings.gamma));
  const SplitTerms split = grad_uinf_split(state.u, params.diss_u, std::numbers::e + r.X);
  r.grad_u_inf = split.lhs;
  r.split_low = split.low;
  r.split_high = split.high;
  r.L1_grad_u = sq(L_grad_norm(state.u, params.diss_u));
  r.div_u = solenoidal_defect(state.u);
  r.div_b = solenoidal_defect(state.b);
  return r;
}

DiagnosticTracker::DiagnosticTracker(SystemParams params, DiagnosticSettings settings)
    : params_(std::move(params)), settings_(settings) {}

const DiagnosticRecord& DiagnosticTracker::observe(const SolutionPair& state) {
  DiagnosticRecord r = record(state, params_, settings_);
  if (!series_.empty()) {
    const DiagnosticRecord& prev = series_.back();
    const double h = r.t - prev.t;
    r.cum_diss = prev.cum_diss + 0.5 * h * (prev.diss_u + r.diss_u);
    r.cum_diss_b = prev.cum_diss_b + 0.5 * h * (prev.diss_b + r.diss_b);
    r.cum_L1_grad_u = prev.cum_L1_grad_u + 0.5 * h * (prev.L1_grad_u + r.L1_grad_u);
  }
  series_.push_back(r);
  return series_.back();
}

void require_uniform_cadence(const DiagnosticSeries& series, std::size_t min_records) {
  detail::require(!series.empty(), "empty diagnostic series");
  detail::require(series.size() >= min_records,
                  "diagnostic series has " + std::to_string(series.size()) + " records, needs " +
                      std::to_string(min_records));
  if (series.size() < 2) return;
  const double h = series[1].t - series[0].t;
  detail::require(h > 0.0, "diagnostic times must increase");
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double hi = series[i].t - series[i - 1].t;
    const bool last = i + 1 == series.size();
    const bool ok = last ? (hi > 0.0 && hi <= h * (1.0 + 1e-9)) : std::abs(hi - h) <= 1e-9 * h;
    detail::require(ok, "diagnostic series cadence is not uniform");
  }
}

double energy_balance_residual(const DiagnosticSeries& series, double nu, double eta) {
  require_uniform_cadence(series, 3);
  const double e0 = series.front().energy;
  detail::require(e0 > 0.0, "energy balance needs nonzero initial energy");
  double worst = 0.0;
  for (const auto& r : series) {
    worst = std::max(worst, std::abs(r.energy - e0 + nu * r.cum_diss + eta * r.cum_diss_b) / e0);
  }
  return worst;
}

GronwallReport gronwall_bound_check(const DiagnosticSeries& series, const GFunction& g1) {
  require_uniform_cadence(series, 2);
  GronwallReport report;
  const double y0 = std::numbers::e + series.front().X;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double lhs = osgood_integral(g1, y0, std::numbers::e + series[i].X);
    const double rhs = (series[i].t - series.front().t) + (series[i].cum_diss - series.front().cum_diss);
    if (lhs <= 0.0) continue;
    if (rhs <= 0.0) {
      report.finite = false;
      report.constant = INFINITY;
      return report;
    }
    report.constant = std::max(report.constant, lhs / rhs);
  }
  report.finite = std::isfinite(report.constant);
  return report;
}

GronwallReport gronwall_bound_check(const DiagnosticSeries& series, const GFunction& g1, const SystemParams& params,
                                    int dim) {
  GronwallReport report = gronwall_bound_check(series, g1);
  if (!params.theorem_regime(dim)) report.warning = "parameters outside the regime nu > 0, eta = 0, alpha >= 1 + N/2";
  return report;
}

GammaReport gamma_log_derivative_check(const DiagnosticSeries& series) {
  detail::require(series.size() >= kMinGammaSamples,
                  "gamma log-derivative check needs >= " + std::to_string(kMinGammaSamples) + " samples");
  require_uniform_cadence(series, kMinGammaSamples);
  GammaReport report;
  for (const auto& r : series) report.sup_gamma_norm = std::max(report.sup_gamma_norm, r.gamma_norm);
  auto rhs_at = [](const DiagnosticRecord& r) { return std::sqrt(r.diss_u) + std::sqrt(r.L1_grad_u); };
  for (std::size_t i = 1; i < series.size(); ++i) {
    const auto& a = series[i - 1];
    const auto& b = series[i];
    const double slope =
        (std::log(std::numbers::e + b.gamma_norm) - std::log(std::numbers::e + a.gamma_norm)) / (b.t - a.t);
    if (slope <= 0.0) continue;
    const double rhs = 0.5 * (rhs_at(a) + rhs_at(b));
    if (rhs <= 0.0) {
      report.constant = INFINITY;
      report.finite = false;
      return report;
    }
    report.constant = std::max(report.constant, slope / rhs);
  }
  report.finite = std::isfinite(report.constant);
  return report;
}

double y_growth_rate(const DiagnosticSeries& series) {
  double worst = -INFINITY;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double slope =
        (std::log(std::numbers::e + series[i].Y_s) - std::log(std::numbers::e + series[i - 1].Y_s)) /
        (series[i].t - series[i - 1].t);
    worst = std::max(worst, slope);
  }
  return series.size() < 2 ? 0.0 : worst;
}

bool constants_agree(double a, double b, double rel_tol, double abs_floor) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  if (std::abs(a) <= abs_floor && std::abs(b) <= abs_floor) return true;
  return std::abs(a - b) <= rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace lmhd
