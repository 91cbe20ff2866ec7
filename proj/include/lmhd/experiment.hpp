#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lmhd/config.hpp"
#include "lmhd/diagnostics.hpp"

namespace lmhd {

enum class RunStatus { ok, config_error, blowup, check_failed };
std::string to_string(RunStatus status);
/// 0 ok, 2 config_error, 3 blowup, 4 check_failed.
int exit_code(RunStatus status);

struct ExperimentResult {
  RunStatus status = RunStatus::ok;
  std::string message;
  DiagnosticSeries series;
  std::optional<SolutionPair> final_state;
  long steps = 0;
  double wall_seconds = 0.0;
  nlohmann::json summary;
};

/// Runs the integrator with the diagnostics observer, evaluates every check on
/// the series and writes the configured artifacts (series CSV, snapshots, summary JSON).
ExperimentResult run_experiment(const RunConfig& config);
/// Same, starting from a config file; parse errors become config_error.
ExperimentResult run_experiment(const std::filesystem::path& config_path);

/// All checks that can be evaluated on a series.
nlohmann::json check_series(const DiagnosticSeries& series, const SystemParams& params, int dim);

/// One experiment per value of `key` ("g1" and "g2" are short for
/// params.g1.kind / params.g2.kind); output paths get a "_<value>" suffix.
/// Experiments run concurrently.
std::vector<ExperimentResult> run_sweep(const ConfigEntries& base, const std::string& key,
                                        const std::vector<std::string>& values);

}  // namespace lmhd
