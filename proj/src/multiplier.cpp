#include "lmhd/multiplier.hpp"

#include <cmath>

#include "lmhd/errors.hpp"

namespace lmhd {

void DissipationSpec::validate() const {
  detail::require(coefficient >= 0.0 && std::isfinite(coefficient), "dissipation coefficient must be >= 0");
  detail::require(exponent > 0.0 && std::isfinite(exponent), "dissipation exponent must be > 0");
}

double symbol(const DissipationSpec& spec, double radius) {
  detail::require(radius >= 0.0, "symbol evaluated at a negative radius");
  if (radius == 0.0) return 0.0;
  return std::pow(radius, spec.exponent) / spec.g(radius);
}

std::vector<double> symbol_table(const Grid& grid, const DissipationSpec& spec) {
  const int max_k2 = grid.dim() * (grid.points() / 2) * (grid.points() / 2);
  std::vector<double> table(static_cast<std::size_t>(max_k2) + 1);
  for (int k2 = 0; k2 <= max_k2; ++k2) table[static_cast<std::size_t>(k2)] = symbol(spec, std::sqrt(double(k2)));
  return table;
}

namespace {
SpectralField scale_by_table(const SpectralField& f, const std::vector<double>& table, bool squared, double factor) {
  const Grid& grid = f.grid();
  SpectralField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double m = table[static_cast<std::size_t>(grid.radius_squared(i))];
    out[i] = factor * (squared ? m * m : m) * f[i];
  }
  return out;
}
}  // namespace

SpectralField apply_L(const SpectralField& f, const DissipationSpec& spec) {
  return scale_by_table(f, symbol_table(f.grid(), spec), false, 1.0);
}

VectorField apply_L(const VectorField& v, const DissipationSpec& spec) {
  const auto table = symbol_table(v.grid(), spec);
  std::vector<SpectralField> comps;
  for (const auto& c : v) comps.push_back(scale_by_table(c, table, false, 1.0));
  return VectorField(std::move(comps));
}

SpectralField apply_dissipation(const SpectralField& f, const DissipationSpec& spec) {
  spec.validate();
  return scale_by_table(f, symbol_table(f.grid(), spec), true, spec.coefficient);
}

VectorField apply_dissipation(const VectorField& v, const DissipationSpec& spec) {
  spec.validate();
  const auto table = symbol_table(v.grid(), spec);
  std::vector<SpectralField> comps;
  for (const auto& c : v) comps.push_back(scale_by_table(c, table, true, spec.coefficient));
  return VectorField(std::move(comps));
}

}  // namespace lmhd
