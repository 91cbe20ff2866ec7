// Command-line driver: run, sweep, check, osgood.
#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmhd/config.hpp"
#include "lmhd/errors.hpp"
#include "lmhd/experiment.hpp"
#include "lmhd/osgood.hpp"
#include "lmhd/series_io.hpp"

namespace {

using lmhd::RunStatus;

int report(const lmhd::ExperimentResult& r) {
  std::cout << r.summary.dump(2) << '\n';
  if (!r.message.empty()) std::cerr << lmhd::to_string(r.status) << ": " << r.message << '\n';
  return lmhd::exit_code(r.status);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  for (char c : s) {
    if (c == ',') {
      if (!item.empty()) out.push_back(item);
      item.clear();
    } else {
      item += c;
    }
  }
  if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_sweep(const std::string& path, const std::string& vary) {
  const auto eq = vary.find('=');
  if (eq == std::string::npos || eq == 0) throw lmhd::ConfigError("--vary expects key=v1,v2,...");
  const auto values = split_commas(vary.substr(eq + 1));
  if (values.empty()) throw lmhd::ConfigError("--vary lists no values");
  const auto results = lmhd::run_sweep(lmhd::read_config_file(path), vary.substr(0, eq), values);

  nlohmann::json all = nlohmann::json::array();
  RunStatus worst = RunStatus::ok;
  for (const auto& r : results) {
    all.push_back(r.summary);
    if (lmhd::exit_code(r.status) > lmhd::exit_code(worst)) worst = r.status;
  }
  std::cout << all.dump(2) << '\n';
  return lmhd::exit_code(worst);
}

int cmd_check(const std::string& series_path, const std::string& config_path, double nu, double eta,
              const std::string& g1, int dim) {
  lmhd::SystemParams params;
  if (!config_path.empty()) {
    const auto config = lmhd::load_config(config_path);
    params = config.params;
    dim = config.dim;
  } else {
    params.diss_u = {nu, 1.0 + dim / 2.0, lmhd::GFunction::from_catalog(g1)};
    params.diss_b = {eta, 1.0, lmhd::GFunction::constant_one()};
  }
  const auto series = lmhd::read_series_csv(series_path);
  if (series.empty()) throw lmhd::ConfigError("series " + series_path + " has no records");
  const auto checks = lmhd::check_series(series, params, dim);
  std::cout << checks.dump(2) << '\n';
  for (const auto& [name, check] : checks.items()) {
    if (check.is_object() && check.contains("pass") && !check["pass"].get<bool>()) return 4;
  }
  return 0;
}

int cmd_osgood(const std::string& name, const std::vector<std::string>& raw_params, const std::string& limit,
               int samples) {
  std::map<std::string, double> params;
  for (const auto& p : raw_params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw lmhd::ConfigError("osgood parameter '" + p + "' is not key=value");
    params[p.substr(0, eq)] = lmhd::parse_real(p.substr(0, eq), p.substr(eq + 1));
  }
  const auto g = lmhd::GFunction::from_catalog(name, params);
  const auto upper = limit.empty() ? lmhd::default_osgood_limit() : lmhd::OsgoodLimit::parse(limit);
  const auto v = lmhd::osgood_classify(g, upper, samples);
  nlohmann::json out{{"g", g.describe()},
                     {"classification", lmhd::to_string(v.classification)},
                     {"partial_integral", v.partial_integral},
                     {"log_upper_limit", v.log_upper_limit_used},
                     {"windows", v.window_integrals.size()},
                     {"tail_ratios", v.tail_ratios}};
  if (std::isfinite(v.upper_limit_used)) out["upper_limit"] = v.upper_limit_used;
  std::cout << out.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral MHD with logarithmically supercritical dissipation"};
  app.require_subcommand(1);

  std::string run_path;
  auto* run = app.add_subcommand("run", "Run one experiment from a config file");
  run->add_option("config", run_path)->required();

  std::string sweep_path, vary;
  auto* sweep = app.add_subcommand("sweep", "Run one experiment per value of a config key");
  sweep->add_option("config", sweep_path)->required();
  sweep->add_option("--vary", vary, "key=v1,v2,... (g1 is short for params.g1.kind)")->required();

  std::string series_path, check_config, g1 = "constant_one";
  double nu = 1.0, eta = 0.0;
  int dim = 2;
  auto* check = app.add_subcommand("check", "Re-run the inequality checks on a saved series");
  check->add_option("series", series_path)->required();
  check->add_option("--config", check_config, "Config the series was produced with");
  check->add_option("--nu", nu);
  check->add_option("--eta", eta);
  check->add_option("--g1", g1);
  check->add_option("--dim", dim);

  std::string g_name, limit;
  std::vector<std::string> g_params;
  int samples = 1000;
  auto* osgood = app.add_subcommand("osgood", "Classify the Osgood integral of a catalog g");
  osgood->add_option("g", g_name)->required();
  osgood->add_option("params", g_params, "key=value parameters of g");
  osgood->add_option("--limit", limit, "Upper limit R, e.g. 1e300 or e^1e100");
  osgood->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*run) return report(lmhd::run_experiment(std::filesystem::path(run_path)));
    if (*sweep) return cmd_sweep(sweep_path, vary);
    if (*check) return cmd_check(series_path, check_config, nu, eta, g1, dim);
    if (*osgood) return cmd_osgood(g_name, g_params, limit, samples);
  } catch (const lmhd::ConfigError& e) {
    std::cerr << "config_error: " << e.what() << '\n';
    return 2;
  } catch (const lmhd::InvalidArgument& e) {
    std::cerr << "config_error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
