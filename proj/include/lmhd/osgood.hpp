#pragma once

#include <string>
#include <vector>

#include "lmhd/gfunction.hpp"

namespace lmhd {

/// Upper integration limit R, carried as ln R so that R may exceed double range.
class OsgoodLimit {
 public:
  static OsgoodLimit value(double upper_limit);
  static OsgoodLimit exp_of(double log_upper_limit);
  /// Parses "1e300" (a value) or "e^1e100" (exp of the exponent).
  static OsgoodLimit parse(const std::string& text);

  double log_value() const { return log_; }
  /// R itself, or +inf when it overflows.
  double value_or_inf() const;

 private:
  explicit OsgoodLimit(double log_value) : log_(log_value) {}
  double log_;
};

/// Default limit: ln R = 1e100.
inline OsgoodLimit default_osgood_limit() { return OsgoodLimit::exp_of(1e100); }

enum class OsgoodClass { diverges, converges, inconclusive };
std::string to_string(OsgoodClass c);

struct OsgoodVerdict {
  OsgoodClass classification = OsgoodClass::inconclusive;
  /// ∫_e^R dτ / (g²(τ) ln(τ) τ).
  double partial_integral = 0.0;
  double upper_limit_used = 0.0;
  double log_upper_limit_used = 0.0;
  /// Integral over each complete window τ ∈ [e^{2^m}, e^{2^{m+1}}].
  std::vector<double> window_integrals;
  /// Ratios of consecutive window integrals over the tested tail.
  std::vector<double> tail_ratios;
};

inline constexpr int kOsgoodTailWindows = 10;
inline constexpr double kOsgoodDivergentRatio = 0.99;
inline constexpr double kOsgoodConvergentRatio = 0.9;

/// Integrates the Osgood integrand from e to R on windows dyadic in ln τ and
/// classifies the tail with a ratio test over the last 10 windows: every
/// ratio >= 0.99 means divergent, every ratio <= 0.9 means the tail is
/// dominated by a geometric series, anything else is inconclusive.
/// Requires R >= 10e and samples >= 1000.
OsgoodVerdict osgood_classify(const GFunction& g, OsgoodLimit upper_limit = default_osgood_limit(),
                              int samples = 1000);

/// F(hi) - F(lo) with F(y) = ∫_e^y dτ / (g²(τ) ln(τ) τ); lo, hi >= e.
double osgood_integral(const GFunction& g, double lo, double hi);

}  // namespace lmhd
