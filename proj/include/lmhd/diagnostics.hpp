#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmhd/gfunction.hpp"
#include "lmhd/mhd.hpp"

namespace lmhd {

/// One sample of every tracked quantity. Squared norms are L² norms over the torus.
struct DiagnosticRecord {
  double t = 0.0;
  double energy = 0.0;        // ½(‖u‖² + ‖b‖²)
  double diss_u = 0.0;        // ‖𝓛₁u‖²
  double diss_b = 0.0;        // ‖𝓛₂b‖²
  double X = 0.0;             // ‖∇u‖² + ‖∇b‖²
  double Y_s = 0.0;           // ‖Λ^s u‖² + ‖Λ^s b‖²
  double gamma_norm = 0.0;    // ‖Λ^γ u‖² + ‖Λ^γ b‖²
  double grad_u_inf = 0.0;    // ‖∇u‖_∞ on the grid
  double split_low = 0.0;     // g₁(M₁) sqrt(ln M₁) ‖𝓛₁u‖, M₁ = e + X
  double split_high = 0.0;    // M₁^{-1/2} ‖𝓛₁∇u‖
  double L1_grad_u = 0.0;     // ‖𝓛₁∇u‖²
  double cum_diss = 0.0;      // ∫₀^t ‖𝓛₁u‖², trapezoidal
  double cum_diss_b = 0.0;    // ∫₀^t ‖𝓛₂b‖²
  double cum_L1_grad_u = 0.0; // ∫₀^t ‖𝓛₁∇u‖²
  double div_u = 0.0;         // solenoidal defect of u
  double div_b = 0.0;         // solenoidal defect of b
};

/// Column names in CSV order.
const std::vector<std::string>& record_field_names();
std::vector<double> record_values(const DiagnosticRecord& r);
DiagnosticRecord record_from_values(const std::vector<double>& values);

struct DiagnosticSettings {
  double gamma = 2.5;  // exponent of the H^γ tracker
  double s = 5.0;      // exponent of Y(t)

  /// γ = (3 + N)/2, s = 3 + N.
  static DiagnosticSettings defaults(int dim);
};

/// Instantaneous quantities; the cumulative integrals are left at 0.
DiagnosticRecord record(const SolutionPair& state, const SystemParams& params, const DiagnosticSettings& settings);

/// Appends records and accumulates the time integrals by the trapezoidal rule.
class DiagnosticTracker {
 public:
  DiagnosticTracker(SystemParams params, DiagnosticSettings settings);

  const DiagnosticRecord& observe(const SolutionPair& state);
  const std::vector<DiagnosticRecord>& series() const { return series_; }
  std::vector<DiagnosticRecord> take_series() { return std::move(series_); }

 private:
  SystemParams params_;
  DiagnosticSettings settings_;
  std::vector<DiagnosticRecord> series_;
};

using DiagnosticSeries = std::vector<DiagnosticRecord>;

/// Throws unless the series has >= min_records samples with increasing times
/// and a uniform spacing (the final interval may be shorter).
void require_uniform_cadence(const DiagnosticSeries& series, std::size_t min_records);

/// max_t |E(t) - E(0) + ν ∫‖𝓛₁u‖² + η ∫‖𝓛₂b‖²| / E(0).
double energy_balance_residual(const DiagnosticSeries& series, double nu, double eta);

/// Smallest C with F(e + X(t)) - F(e + X(0)) <= C ∫₀^t (1 + ‖𝓛₁u‖²) over the
/// series, F(y) = ∫_e^y dτ / (g₁² ln τ τ).
struct GronwallReport {
  double constant = 0.0;
  bool finite = true;
  std::optional<std::string> warning;
};

GronwallReport gronwall_bound_check(const DiagnosticSeries& series, const GFunction& g1);
GronwallReport gronwall_bound_check(const DiagnosticSeries& series, const GFunction& g1, const SystemParams& params,
                                    int dim);

/// Smallest C with d/dt ln(e + ‖Λ^γu‖² + ‖Λ^γb‖²) <= C (‖𝓛₁u‖ + ‖𝓛₁∇u‖),
/// derivative by finite differences. Needs >= 50 samples.
struct GammaReport {
  double constant = 0.0;
  bool finite = true;
  double sup_gamma_norm = 0.0;
};

inline constexpr std::size_t kMinGammaSamples = 50;
GammaReport gamma_log_derivative_check(const DiagnosticSeries& series);

/// max over the series of d/dt ln(e + Y(t)), by finite differences.
double y_growth_rate(const DiagnosticSeries& series);

/// |a - b| <= rel_tol · max(|a|, |b|), or both below abs_floor.
bool constants_agree(double a, double b, double rel_tol, double abs_floor = 1e-12);

}  // namespace lmhd
