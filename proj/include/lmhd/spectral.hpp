#pragma once

#include <span>
#include <vector>

#include "lmhd/field.hpp"

namespace lmhd {

/// Physical samples -> Fourier coefficients, normalized so coeff(0) is the mean.
SpectralField forward_transform(const Grid& grid, std::span<const double> samples);
/// Coefficients -> physical samples; rejects input that is not conjugate symmetric.
std::vector<double> inverse_transform(const SpectralField& f);
/// Same as inverse_transform without the symmetry check (real part of the sum).
std::vector<double> to_physical(const SpectralField& f);

/// Relative tolerance used by the conjugate-symmetry check.
inline constexpr double kSymmetryTolerance = 1e-10;
bool is_conjugate_symmetric(const SpectralField& f, double rel_tol = kSymmetryTolerance);

/// Λ^s: multiplies by |k|^s and sends the zero mode to 0.
SpectralField fractional_derivative(const SpectralField& f, double s);
VectorField fractional_derivative(const VectorField& v, double s);

/// ∂/∂x_axis; the Nyquist wavenumber is treated as 0.
SpectralField partial(const SpectralField& f, int axis);
VectorField gradient(const SpectralField& f);
SpectralField divergence(const VectorField& v);

/// Orthogonal projection onto divergence-free fields. The zero mode is left as is.
VectorField leray_project(const VectorField& v);

/// 2/3 rule: zero every mode with some |k_j| >= points/3.
SpectralField dealias(const SpectralField& f);
VectorField dealias(const VectorField& v);
bool is_retained(const Grid& grid, std::size_t flat);
/// Largest per-axis wavenumber kept by the 2/3 rule.
int max_retained_wavenumber(const Grid& grid);

/// Zero-pad (or truncate) the spectrum onto a grid with `points` per axis.
/// Coarse Nyquist modes are split evenly between ±points_coarse/2.
SpectralField resample(const SpectralField& f, int points);

/// Sampling used for L^∞: the grid itself, or a 2x zero-padded grid.
/// Grid sampling underestimates the true supremum.
enum class LinfSampling { grid, padded2x };

/// L^p norm on [0,2π)^N for p in {1, 2, ∞} (pass INFINITY for ∞).
/// L² uses Parseval; L¹ and L^∞ use physical samples.
double lp_norm(const SpectralField& f, double p, LinfSampling sampling = LinfSampling::grid);
/// L² norm computed from physical samples (cross-check for the spectral one).
double l2_norm_physical(const SpectralField& f);
/// ‖Λ^s f‖_{L²}.
double hs_norm(const SpectralField& f, double s);

/// Euclidean combination of component L² norms.
double l2_norm(const VectorField& v);
double hs_norm(const VectorField& v, double s);
/// max over components and samples of |v_i(x)|.
double linf_norm(const VectorField& v, LinfSampling sampling = LinfSampling::grid);

/// ∫ f h over the torus for real fields f, h.
double inner_product(const SpectralField& f, const SpectralField& h);
double inner_product(const VectorField& f, const VectorField& h);

/// max_k |k·v̂(k)| / max(1, ‖v‖_{L²}).
double solenoidal_defect(const VectorField& v);
inline constexpr double kSolenoidalTolerance = 1e-12;

}  // namespace lmhd
