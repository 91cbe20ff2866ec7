#pragma once

#include <vector>

#include "lmhd/field.hpp"
#include "lmhd/multiplier.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

/// Smooth radial cutoff: 1 on [0, 1/2], 0 on [1, ∞), C^∞ in between.
double lp_cutoff(double r);

/// Inhomogeneous dyadic partition of unity on a grid.
///
/// Ψ̂(r) = χ(r), Φ̂_j(r) = χ(r/2^{j+1}) - χ(r/2^j) for j >= 0, so that
/// Ψ̂ + Σ_{j<=J} Φ̂_j = χ(r/2^{J+1}) telescopes to 1 on every grid mode once
/// 2^{j_max} >= max |k|. supp Φ̂_j ⊂ (2^{j-1}, 2^{j+1}).
class DyadicPartition {
 public:
  explicit DyadicPartition(const Grid& grid);

  const Grid& grid() const { return grid_; }
  int j_min() const { return -1; }
  int j_max() const { return j_max_; }
  int block_count() const { return j_max_ + 2; }

  /// Ψ̂ for j = -1, Φ̂_j for j >= 0, evaluated at radius r.
  static double weight(int j, double r);
  /// Weight of block j on the mode with |k|² = k2.
  double weight_k2(int j, int k2) const;

 private:
  Grid grid_;
  int j_max_;
  // profiles_[j + 1][k2]
  std::vector<std::vector<double>> profiles_;
};

/// Δ_j f for j = -1 .. j_max (index 0 holds j = -1).
std::vector<SpectralField> dyadic_blocks(const SpectralField& f, const DyadicPartition& part);

struct BesovIndex {
  double s = 0.0;
  double p = 2.0;  // 1, 2 or INFINITY
  double q = 2.0;  // 1, 2 or INFINITY
};

/// (Σ_j (2^{js} ‖Δ_j f‖_{L^p})^q)^{1/q}, sup over j when q = ∞.
double besov_norm(const SpectralField& f, const BesovIndex& idx, const DyadicPartition& part,
                  LinfSampling sampling = LinfSampling::grid);

/// sup_{|γ|=k} ‖∂^γ f‖_{L^q} / (2^{j(k + N(1/p - 1/q))} ‖f‖_{L^p}) for f
/// supported in the annulus 2^{j-1} < |k| < 2^{j+1}; rejects other supports.
double bernstein_ratio(const SpectralField& f, int j, int k_order, double p, double q,
                       LinfSampling sampling = LinfSampling::grid);
/// Same with Λ^s in place of the integer-order derivatives.
double bernstein_ratio_fractional(const SpectralField& f, int j, double s, double p, double q,
                                  LinfSampling sampling = LinfSampling::grid);
bool supported_in_annulus(const SpectralField& f, int j);

/// Terms of the ‖∇u‖_∞ splitting bound at threshold M1 >= e.
struct SplitTerms {
  double low = 0.0;   // g(M1) sqrt(ln M1) ‖𝓛u‖_{L²}
  double high = 0.0;  // M1^{-1/2} ‖𝓛∇u‖_{L²}
  double lhs = 0.0;   // ‖∇u‖_{L^∞}, max over components of the grid samples
  double ratio() const;
};

SplitTerms grad_uinf_split(const VectorField& u, const DissipationSpec& diss, double M1);

/// ‖𝓛∇u‖_{L²} = (Σ_{i,j} ‖𝓛 ∂_j u_i‖²)^{1/2}.
double L_grad_norm(const VectorField& u, const DissipationSpec& diss);
/// max over i, j and grid samples of |∂_j u_i|.
double grad_linf(const VectorField& u, LinfSampling sampling = LinfSampling::grid);

/// (p, p1, p2, p3, p4) with 1/p = 1/p1 + 1/p2 = 1/p3 + 1/p4, entries in {1, 2, ∞}.
struct HolderExponents {
  double p = 2.0;
  double p1 = INFINITY;
  double p2 = 2.0;
  double p3 = 2.0;
  double p4 = INFINITY;
  void validate() const;
};

struct CommutatorTerms {
  double lhs = 0.0;  // ‖Λ^s(fg) - f Λ^s g‖_{L^p}
  double rhs = 0.0;  // ‖∇f‖_{p1} ‖Λ^{s-1}g‖_{p2} + ‖Λ^s f‖_{p3} ‖g‖_{p4}
  double ratio() const;
};

/// Products are formed on a grid padded 2x so they are exact trigonometric
/// polynomials; ∇f is measured through its pointwise Euclidean magnitude.
CommutatorTerms commutator_terms(const SpectralField& f, const SpectralField& g, double s,
                                 const HolderExponents& exps);
double commutator_ratio(const SpectralField& f, const SpectralField& g, double s, const HolderExponents& exps);

}  // namespace lmhd
