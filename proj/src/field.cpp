#include "lmhd/field.hpp"

#include <algorithm>
#include <cmath>

#include "lmhd/errors.hpp"

namespace lmhd {

SpectralField::SpectralField(Grid grid) : grid_(std::move(grid)), coeffs_(grid_.size()) {}

SpectralField::SpectralField(Grid grid, std::vector<Complex> coeffs)
    : grid_(std::move(grid)), coeffs_(std::move(coeffs)) {
  detail::require(coeffs_.size() == grid_.size(), "coefficient count does not match grid");
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  detail::require(grid_ == other.grid_, "grid mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  detail::require(grid_ == other.grid_, "grid mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::all_finite() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double scale, SpectralField a) { return a *= scale; }

VectorField::VectorField(const Grid& grid)
    : components_(static_cast<std::size_t>(grid.dim()), SpectralField(grid)) {}

VectorField::VectorField(std::vector<SpectralField> components) : components_(std::move(components)) {
  detail::require(!components_.empty(), "vector field needs components");
  const Grid& g = components_.front().grid();
  detail::require(static_cast<int>(components_.size()) == g.dim(), "component count must equal grid dimension");
  for (const auto& c : components_) detail::require(c.grid() == g, "components must share one grid");
}

VectorField& VectorField::operator+=(const VectorField& other) {
  detail::require(dim() == other.dim(), "dimension mismatch");
  for (int i = 0; i < dim(); ++i) (*this)[i] += other[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  detail::require(dim() == other.dim(), "dimension mismatch");
  for (int i = 0; i < dim(); ++i) (*this)[i] -= other[i];
  return *this;
}

VectorField& VectorField::operator*=(double scale) {
  for (auto& c : components_) c *= scale;
  return *this;
}

bool VectorField::all_finite() const {
  return std::all_of(components_.begin(), components_.end(), [](const SpectralField& c) { return c.all_finite(); });
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double scale, VectorField a) { return a *= scale; }

}  // namespace lmhd
