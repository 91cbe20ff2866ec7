#include "lmhd/series_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "lmhd/errors.hpp"

namespace lmhd {

void write_series_csv(std::ostream& out, const DiagnosticSeries& series) {
  const auto& names = record_field_names();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  char buf[32];
  for (const auto& r : series) {
    const auto values = record_values(r);
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", values[i]);
      out << (i ? "," : "") << buf;
    }
    out << '\n';
  }
}

void write_series_csv(const std::filesystem::path& path, const DiagnosticSeries& series) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  detail::require(static_cast<bool>(out), "cannot write " + path.string());
  write_series_csv(out, series);
}

DiagnosticSeries read_series_csv(std::istream& in) {
  std::string line;
  detail::require(static_cast<bool>(std::getline(in, line)), "series file is empty");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  detail::require(header == record_field_names(), "series header does not match the diagnostic record");
  DiagnosticSeries series;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        values.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw InvalidArgument("series: cannot parse '" + cell + "'");
      }
    }
    series.push_back(record_from_values(values));
  }
  return series;
}

DiagnosticSeries read_series_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  detail::require(static_cast<bool>(in), "cannot read " + path.string());
  return read_series_csv(in);
}

}  // namespace lmhd
