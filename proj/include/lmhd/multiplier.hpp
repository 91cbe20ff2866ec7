#pragma once

#include <vector>

#include "lmhd/field.hpp"
#include "lmhd/gfunction.hpp"

namespace lmhd {

/// Coefficient (ν or η), exponent (α or β) and weight g of one dissipation term.
struct DissipationSpec {
  double coefficient = 0.0;
  double exponent = 1.0;
  GFunction g = GFunction::constant_one();

  void validate() const;
};

/// m(r) = r^exponent / g(r), with m(0) = 0.
double symbol(const DissipationSpec& spec, double radius);

/// symbol() tabulated by integer |k|² for every |k|² the grid contains.
std::vector<double> symbol_table(const Grid& grid, const DissipationSpec& spec);

/// Unsquared operator 𝓛: multiplies each coefficient by m(|k|).
SpectralField apply_L(const SpectralField& f, const DissipationSpec& spec);
VectorField apply_L(const VectorField& v, const DissipationSpec& spec);

/// coefficient · 𝓛²: multiplies each coefficient by coefficient · m(|k|)².
SpectralField apply_dissipation(const SpectralField& f, const DissipationSpec& spec);
VectorField apply_dissipation(const VectorField& v, const DissipationSpec& spec);

}  // namespace lmhd
