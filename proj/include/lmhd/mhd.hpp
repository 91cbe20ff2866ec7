#pragma once

#include "lmhd/field.hpp"
#include "lmhd/multiplier.hpp"

namespace lmhd {

/// Velocity u and magnetic field b at time `time`.
struct SolutionPair {
  VectorField u;
  VectorField b;
  double time = 0.0;

  const Grid& grid() const { return u.grid(); }
  bool all_finite() const { return u.all_finite() && b.all_finite(); }
};

/// Zero fields on `grid` at time 0.
SolutionPair zero_state(const Grid& grid);

struct SystemParams {
  DissipationSpec diss_u;  // ν, α, g₁
  DissipationSpec diss_b;  // η, β, g₂
  /// Switches the transport/stretching terms off (linear decay tests).
  bool nonlinear = true;

  void validate() const;
  /// ν > 0, η = 0, α >= 1 + dim/2.
  bool theorem_regime(int dim) const;
};

struct Tendency {
  VectorField du;
  VectorField db;
};

/// du = P(-(u·∇)u + (b·∇)b), db = P(-(u·∇)b + (b·∇)u).
///
/// Products are formed on the physical grid, transformed back and truncated
/// by the 2/3 rule before projection; the mean mode of both is set to 0.
Tendency nonlinear_tendency(const SolutionPair& state);

/// Nonlinear tendency minus (ν𝓛₁²u, η𝓛₂²b); the nonlinear part is dropped when
/// params.nonlinear is false.
Tendency full_tendency(const SolutionPair& state, const SystemParams& params);

struct EnergyFlux {
  /// ⟨du_nl, u⟩ + ⟨db_nl, b⟩; zero up to round-off for solenoidal dealiased data.
  double nonlinear_rate = 0.0;
  /// ν‖𝓛₁u‖² + η‖𝓛₂b‖².
  double dissipation_rate = 0.0;
};

EnergyFlux energy_flux_identity(const SolutionPair& state, const SystemParams& params);

}  // namespace lmhd
