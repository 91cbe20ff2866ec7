#pragma once

#include <filesystem>
#include <iosfwd>

#include "lmhd/diagnostics.hpp"

namespace lmhd {

/// Comma-separated table with a header row of record_field_names().
void write_series_csv(std::ostream& out, const DiagnosticSeries& series);
void write_series_csv(const std::filesystem::path& path, const DiagnosticSeries& series);
DiagnosticSeries read_series_csv(std::istream& in);
DiagnosticSeries read_series_csv(const std::filesystem::path& path);

}  // namespace lmhd
