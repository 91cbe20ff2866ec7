#include "lmhd/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {
constexpr std::array<char, 4> kMagic{'L', 'M', 'H', 'D'};

template <typename T>
void put_le(std::ostream& out, T value) {
  std::array<unsigned char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> bytes;
  in.read(reinterpret_cast<char*>(bytes.data()), sizeof(T));
  detail::require(static_cast<bool>(in), "truncated snapshot");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}
}  // namespace

void write_snapshot(std::ostream& out, std::span<const SpectralField> fields) {
  detail::require(!fields.empty(), "snapshot needs at least one field");
  const Grid& grid = fields.front().grid();
  for (const auto& f : fields) detail::require(f.grid() == grid, "snapshot fields must share one grid");
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kSnapshotVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.dim()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(grid.points()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(fields.size()));
  for (const auto& f : fields) {
    for (const auto& c : f.coeffs()) {
      put_le<double>(out, c.real());
      put_le<double>(out, c.imag());
    }
  }
}

std::vector<SpectralField> read_snapshot(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  detail::require(static_cast<bool>(in) && magic == kMagic, "not an LMHD snapshot");
  const auto version = get_le<std::uint32_t>(in);
  detail::require(version == kSnapshotVersion, "unsupported snapshot version");
  const auto dim = get_le<std::uint32_t>(in);
  const auto points = get_le<std::uint32_t>(in);
  const auto count = get_le<std::uint32_t>(in);
  Grid grid(static_cast<int>(dim), static_cast<int>(points));
  std::vector<SpectralField> fields;
  fields.reserve(count);
  for (std::uint32_t f = 0; f < count; ++f) {
    std::vector<Complex> coeffs(grid.size());
    for (auto& c : coeffs) {
      const double re = get_le<double>(in);
      const double im = get_le<double>(in);
      c = {re, im};
    }
    fields.emplace_back(grid, std::move(coeffs));
  }
  return fields;
}

void write_snapshot(const std::filesystem::path& path, std::span<const SpectralField> fields) {
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), "cannot open " + path.string());
  write_snapshot(out, fields);
}

std::vector<SpectralField> read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), "cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace lmhd
