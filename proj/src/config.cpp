#include "lmhd/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

const std::vector<std::string>& plain_keys() {
  static const std::vector<std::string> keys{
      "grid.n",          "grid.points",     "params.nu",      "params.eta",      "params.alpha", "params.beta",
      "params.nonlinear", "ic.name",        "stepper.dt",     "stepper.cfl",     "stepper.dt_max",
      "stepper.t_end",   "stepper.max_steps", "diag.cadence", "diag.gamma",      "diag.s",
      "out.series",      "out.snapshots",   "out.snapshot_times", "out.summary"};
  return keys;
}

bool known_key(const std::string& key) {
  for (const auto& k : plain_keys()) {
    if (k == key) return true;
  }
  return starts_with(key, "params.g1.") || starts_with(key, "params.g2.") || starts_with(key, "ic.");
}

std::string value_or(const ConfigEntries& e, const std::string& key, const std::string& fallback) {
  auto it = e.find(key);
  return it == e.end() ? fallback : it->second;
}

int parse_int(std::string_view key, std::string_view text) {
  const double v = parse_real(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw ConfigError(std::string(key) + ": expected an integer");
  return static_cast<int>(v);
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + std::string(text) + "'");
}

}  // namespace

double parse_real(std::string_view key, std::string_view text) {
  const std::string s = trim(text);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(std::string(key) + ": expected a number, got '" + s + "'");
  }
}

std::vector<double> parse_real_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(parse_real(key, item));
  }
  return out;
}

ConfigEntries parse_config_text(std::string_view text) {
  ConfigEntries entries;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    if (!entries.emplace(key, value).second) throw ConfigError("duplicate key '" + key + "'");
  }
  return entries;
}

ConfigEntries read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

GFunction g_from_entries(const ConfigEntries& entries, const std::string& prefix) {
  const std::string base = "params." + prefix + ".";
  const std::string kind = value_or(entries, base + "kind", "constant_one");
  try {
    if (kind == "tabulated") {
      auto it = entries.find(base + "table");
      if (it == entries.end()) throw ConfigError(base + "table is required for tabulated g");
      std::vector<std::pair<double, double>> table;
      std::stringstream ss{it->second};
      std::string item;
      while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError(base + "table: expected radius:value pairs");
        table.emplace_back(parse_real(base + "table", item.substr(0, colon)),
                           parse_real(base + "table", item.substr(colon + 1)));
      }
      return GFunction::tabulated(std::move(table));
    }
    std::map<std::string, double> params;
    for (const auto& [key, value] : entries) {
      if (!starts_with(key, base) || key == base + "kind" || key == base + "table") continue;
      params[key.substr(base.size())] = parse_real(key, value);
    }
    return GFunction::from_catalog(kind, params);
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

RunConfig build_config(const ConfigEntries& entries) {
  for (const auto& [key, value] : entries) {
    if (!known_key(key)) throw ConfigError("unknown config key '" + key + "'");
  }
  RunConfig c;
  c.entries = entries;
  auto real = [&](const std::string& key, double fallback) {
    auto it = entries.find(key);
    return it == entries.end() ? fallback : parse_real(key, it->second);
  };

  c.dim = entries.count("grid.n") ? parse_int("grid.n", entries.at("grid.n")) : 2;
  c.points = entries.count("grid.points") ? parse_int("grid.points", entries.at("grid.points")) : 64;
  if (c.dim != 2 && c.dim != 3) throw ConfigError("grid.n must be 2 or 3");
  if (c.points < 8 || (c.points & (c.points - 1)) != 0) throw ConfigError("grid.points must be a power of two >= 8");

  c.params.diss_u = {real("params.nu", 1.0), real("params.alpha", 1.0 + c.dim / 2.0), g_from_entries(entries, "g1")};
  c.params.diss_b = {real("params.eta", 0.0), real("params.beta", 1.0), g_from_entries(entries, "g2")};
  if (entries.count("params.nonlinear")) c.params.nonlinear = parse_bool("params.nonlinear", entries.at("params.nonlinear"));

  c.ic_name = value_or(entries, "ic.name", "orszag_tang_2d");
  for (const auto& [key, value] : entries) {
    if (starts_with(key, "ic.") && key != "ic.name") c.ic_params[key.substr(3)] = value;
  }

  const std::string dt = value_or(entries, "stepper.dt", "1e-3");
  if (dt != "adaptive") c.stepper.dt = parse_real("stepper.dt", dt);
  c.stepper.cfl_number = real("stepper.cfl", 0.5);
  c.stepper.dt_max = real("stepper.dt_max", 1e-2);
  c.stepper.t_end = real("stepper.t_end", 1.0);
  if (entries.count("stepper.max_steps")) c.stepper.max_steps = parse_int("stepper.max_steps", entries.at("stepper.max_steps"));
  if (entries.count("diag.cadence")) c.stepper.observe_every = parse_int("diag.cadence", entries.at("diag.cadence"));

  c.diag = DiagnosticSettings::defaults(c.dim);
  c.diag.gamma = real("diag.gamma", c.diag.gamma);
  c.diag.s = real("diag.s", c.diag.s);
  if (!(c.diag.gamma > 1.0 + c.dim / 2.0 && c.diag.gamma < 2.0 + c.dim / 2.0)) {
    throw ConfigError("diag.gamma must lie in (1 + N/2, 2 + N/2)");
  }

  c.series_path = value_or(entries, "out.series", "");
  c.snapshot_prefix = value_or(entries, "out.snapshots", "");
  c.summary_path = value_or(entries, "out.summary", "");
  if (entries.count("out.snapshot_times")) c.snapshot_times = parse_real_list("out.snapshot_times", entries.at("out.snapshot_times"));

  try {
    c.params.validate();
    c.stepper.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

RunConfig load_config(const std::filesystem::path& path) { return build_config(read_config_file(path)); }

}  // namespace lmhd
