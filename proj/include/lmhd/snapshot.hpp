#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "lmhd/field.hpp"

namespace lmhd {

/// Binary field snapshot.
///
/// Layout: "LMHD", then u32 version, u32 dim, u32 points per axis and
/// u32 field count, all little-endian; then for each field its complex
/// coefficients as little-endian doubles (re, im) in flat FFT order.
inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(std::ostream& out, std::span<const SpectralField> fields);
std::vector<SpectralField> read_snapshot(std::istream& in);

void write_snapshot(const std::filesystem::path& path, std::span<const SpectralField> fields);
std::vector<SpectralField> read_snapshot(const std::filesystem::path& path);

}  // namespace lmhd
