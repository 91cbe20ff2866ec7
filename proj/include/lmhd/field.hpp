#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lmhd/grid.hpp"

namespace lmhd {

/// Fourier-series coefficients of one scalar field on a periodic grid.
///
/// coeff(k) = (1/size) Σ_x f(x) e^{-ik·x}, so coeff(0) is the mean.
class SpectralField {
 public:
  explicit SpectralField(Grid grid);
  SpectralField(Grid grid, std::vector<Complex> coeffs);

  const Grid& grid() const { return grid_; }
  std::span<Complex> coeffs() { return coeffs_; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Complex& operator[](std::size_t flat) { return coeffs_[flat]; }
  const Complex& operator[](std::size_t flat) const { return coeffs_[flat]; }
  Complex& at(const WaveVector& k) { return coeffs_[grid_.index_of(k)]; }
  const Complex& at(const WaveVector& k) const { return coeffs_[grid_.index_of(k)]; }

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);

  double max_abs() const;
  bool all_finite() const;

 private:
  Grid grid_;
  std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double scale, SpectralField a);

/// dim() scalar components on one shared grid.
class VectorField {
 public:
  /// Zero field with grid.dim() components.
  explicit VectorField(const Grid& grid);
  explicit VectorField(std::vector<SpectralField> components);

  const Grid& grid() const { return components_.front().grid(); }
  int dim() const { return static_cast<int>(components_.size()); }

  SpectralField& operator[](int i) { return components_[static_cast<std::size_t>(i)]; }
  const SpectralField& operator[](int i) const { return components_[static_cast<std::size_t>(i)]; }

  auto begin() { return components_.begin(); }
  auto end() { return components_.end(); }
  auto begin() const { return components_.begin(); }
  auto end() const { return components_.end(); }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double scale);

  bool all_finite() const;

 private:
  std::vector<SpectralField> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double scale, VectorField a);

}  // namespace lmhd
