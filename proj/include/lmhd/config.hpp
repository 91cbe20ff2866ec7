#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lmhd/diagnostics.hpp"
#include "lmhd/integrator.hpp"
#include "lmhd/mhd.hpp"

namespace lmhd {

/// Raw `key = value` pairs in file order-independent form.
using ConfigEntries = std::map<std::string, std::string>;

/// Parses the flat text format: one `key = value` per line, `#` starts a
/// comment, blank lines ignored. Duplicate keys are an error.
ConfigEntries parse_config_text(std::string_view text);
ConfigEntries read_config_file(const std::filesystem::path& path);

/// Recognized keys:
///   grid.n, grid.points
///   params.nu, params.eta, params.alpha, params.beta, params.nonlinear
///   params.g1.kind, params.g1.<param>, params.g1.table  (same for g2)
///   ic.name, ic.<param>
///   stepper.dt (number or "adaptive"), stepper.cfl, stepper.dt_max,
///   stepper.t_end, stepper.max_steps
///   diag.cadence, diag.gamma, diag.s
///   out.series, out.snapshots, out.snapshot_times, out.summary
struct RunConfig {
  int dim = 2;
  int points = 64;
  SystemParams params;
  std::string ic_name = "orszag_tang_2d";
  std::map<std::string, std::string> ic_params;
  StepperConfig stepper;
  DiagnosticSettings diag = DiagnosticSettings::defaults(2);
  std::filesystem::path series_path;
  std::filesystem::path snapshot_prefix;
  std::vector<double> snapshot_times;
  std::filesystem::path summary_path;
  ConfigEntries entries;
};

/// Throws ConfigError on unknown keys, unparsable values or failed validation.
RunConfig build_config(const ConfigEntries& entries);
RunConfig load_config(const std::filesystem::path& path);

/// "name" or "tabulated" g built from params.<prefix>.* entries.
GFunction g_from_entries(const ConfigEntries& entries, const std::string& prefix);

double parse_real(std::string_view key, std::string_view text);
std::vector<double> parse_real_list(std::string_view key, std::string_view text);

}  // namespace lmhd
