#include "lmhd/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>

#include "lmhd/errors.hpp"
#include "lmhd/initial_conditions.hpp"
#include "lmhd/integrator.hpp"
#include "lmhd/series_io.hpp"
#include "lmhd/snapshot.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return "ok";
    case RunStatus::config_error: return "config_error";
    case RunStatus::blowup: return "blowup";
    case RunStatus::check_failed: return "check_failed";
  }
  return "unknown";
}

int exit_code(RunStatus status) {
  switch (status) {
    case RunStatus::ok: return 0;
    case RunStatus::config_error: return 2;
    case RunStatus::blowup: return 3;
    case RunStatus::check_failed: return 4;
  }
  return 1;
}

namespace {

nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

nlohmann::json record_json(const DiagnosticRecord& r) {
  nlohmann::json j;
  const auto& names = record_field_names();
  const auto values = record_values(r);
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = number(values[i]);
  return j;
}

std::filesystem::path snapshot_path(const std::filesystem::path& prefix, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "_t%.6f.lmhd", t);
  return prefix.string() + buf;
}

void write_snapshot_of(const std::filesystem::path& path, const SolutionPair& s) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::vector<SpectralField> fields;
  for (const auto& c : s.u) fields.push_back(c);
  for (const auto& c : s.b) fields.push_back(c);
  write_snapshot(path, fields);
}

bool checks_pass(const nlohmann::json& checks) {
  for (const auto& [name, check] : checks.items()) {
    if (check.is_object() && check.contains("pass") && !check["pass"].get<bool>()) return false;
  }
  return true;
}

std::filesystem::path with_suffix(const std::string& path, const std::string& suffix) {
  if (path.empty()) return {};
  std::filesystem::path p(path);
  return p.parent_path() / (p.stem().string() + "_" + suffix + p.extension().string());
}

}  // namespace

nlohmann::json check_series(const DiagnosticSeries& series, const SystemParams& params, int dim) {
  nlohmann::json checks = nlohmann::json::object();
  if (series.empty()) return checks;

  double max_div = 0.0;
  double max_x = 0.0;
  double max_split = 0.0;
  bool nonnegative = true;
  bool cum_monotone = true;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& r = series[i];
    max_div = std::max({max_div, r.div_u, r.div_b});
    max_x = std::max(max_x, r.X);
    const double rhs = r.split_low + r.split_high;
    max_split = std::max(max_split, rhs > 0.0 ? r.grad_u_inf / rhs : (r.grad_u_inf > 0.0 ? INFINITY : 0.0));
    nonnegative = nonnegative && r.energy >= 0 && r.X >= 0 && r.Y_s >= 0 && r.gamma_norm >= 0 && r.cum_diss >= 0;
    if (i > 0) cum_monotone = cum_monotone && r.cum_diss >= series[i - 1].cum_diss;
  }
  checks["solenoidality"] = {{"max_defect", number(max_div)}, {"tolerance", kSolenoidalTolerance},
                             {"pass", max_div <= kSolenoidalTolerance}};
  checks["record_invariants"] = {{"pass", nonnegative && cum_monotone}};
  checks["splitting"] = {{"max_ratio", number(max_split)}, {"pass", std::isfinite(max_split)}};
  checks["max_X"] = number(max_x);
  checks["cum_L1_grad_u"] = number(series.back().cum_L1_grad_u);
  checks["y_growth_rate"] = number(y_growth_rate(series));

  if (series.size() >= 3 && series.front().energy > 0.0) {
    const double residual = energy_balance_residual(series, params.diss_u.coefficient, params.diss_b.coefficient);
    checks["energy_balance"] = {{"residual", number(residual)}, {"pass", std::isfinite(residual)}};
  }
  if (series.size() >= 2) {
    const GronwallReport g = gronwall_bound_check(series, params.diss_u.g, params, dim);
    checks["gronwall"] = {{"constant", number(g.constant)}, {"pass", g.finite}};
    if (g.warning) checks["gronwall"]["warning"] = *g.warning;
  }
  if (series.size() >= kMinGammaSamples) {
    const GammaReport g = gamma_log_derivative_check(series);
    checks["gamma_log_derivative"] = {
        {"constant", number(g.constant)}, {"sup_gamma_norm", number(g.sup_gamma_norm)}, {"pass", g.finite}};
  }
  return checks;
}

ExperimentResult run_experiment(const RunConfig& config) {
  ExperimentResult result;
  nlohmann::json& summary = result.summary;
  summary["config"] = config.entries;
  try {
    const Grid grid(config.dim, config.points);
    const SolutionPair state0 = initial_condition(config.ic_name, config.ic_params, grid);
    DiagnosticTracker tracker(config.params, config.diag);
    std::vector<double> pending = config.snapshot_times;
    std::sort(pending.begin(), pending.end());
    std::size_t next_snapshot = 0;

    auto observer = [&](double t, const SolutionPair& state) {
      tracker.observe(state);
      while (!config.snapshot_prefix.empty() && next_snapshot < pending.size() &&
             t >= pending[next_snapshot] - 1e-12) {
        write_snapshot_of(snapshot_path(config.snapshot_prefix, t), state);
        ++next_snapshot;
      }
    };

    try {
      RunOutcome outcome = run(state0, config.params, config.stepper, observer);
      result.steps = outcome.steps;
      result.wall_seconds = outcome.wall_seconds;
      result.final_state = std::move(outcome.state);
      result.series = tracker.take_series();
      summary["checks"] = check_series(result.series, config.params, config.dim);
      result.status = checks_pass(summary["checks"]) ? RunStatus::ok : RunStatus::check_failed;
    } catch (const BlowUp& e) {
      result.status = RunStatus::blowup;
      result.message = e.what();
      result.series = tracker.take_series();
      summary["blowup_time"] = e.time();
      result.steps = e.step();
    }
  } catch (const ConfigError& e) {
    result.status = RunStatus::config_error;
    result.message = e.what();
  } catch (const InvalidArgument& e) {
    result.status = RunStatus::config_error;
    result.message = e.what();
  }

  summary["status"] = to_string(result.status);
  summary["message"] = result.message;
  summary["steps"] = result.steps;
  summary["wall_seconds"] = result.wall_seconds;
  summary["records"] = result.series.size();
  if (!result.series.empty()) summary["last_record"] = record_json(result.series.back());

  if (result.status != RunStatus::config_error) {
    if (!config.series_path.empty()) write_series_csv(config.series_path, result.series);
    if (!config.summary_path.empty()) {
      if (config.summary_path.has_parent_path()) std::filesystem::create_directories(config.summary_path.parent_path());
      std::ofstream(config.summary_path) << summary.dump(2) << '\n';
    }
  }
  return result;
}

ExperimentResult run_experiment(const std::filesystem::path& config_path) {
  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const ConfigError& e) {
    ExperimentResult result;
    result.status = RunStatus::config_error;
    result.message = e.what();
    result.summary = {{"status", to_string(result.status)}, {"message", result.message}};
    return result;
  }
  return run_experiment(config);
}

std::vector<ExperimentResult> run_sweep(const ConfigEntries& base, const std::string& key,
                                        const std::vector<std::string>& values) {
  const std::string full_key = key == "g1" ? "params.g1.kind" : key == "g2" ? "params.g2.kind" : key;
  std::vector<std::future<ExperimentResult>> futures;
  for (const auto& value : values) {
    ConfigEntries entries = base;
    entries[full_key] = value;
    for (const char* out_key : {"out.series", "out.snapshots", "out.summary"}) {
      auto it = entries.find(out_key);
      if (it != entries.end()) it->second = with_suffix(it->second, value).string();
    }
    futures.push_back(std::async(std::launch::async, [entries = std::move(entries), value]() {
      ExperimentResult r;
      try {
        r = run_experiment(build_config(entries));
      } catch (const ConfigError& e) {
        r.status = RunStatus::config_error;
        r.message = e.what();
        r.summary = {{"status", to_string(r.status)}, {"message", r.message}};
      }
      r.summary["sweep_value"] = value;
      return r;
    }));
  }
  std::vector<ExperimentResult> results;
  for (auto& f : futures) results.push_back(f.get());
  return results;
}

}  // namespace lmhd
