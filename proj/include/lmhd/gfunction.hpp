#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lmhd {

/// Radial weight g(r) >= 1, non-decreasing, dividing the dissipation symbol.
///
/// Catalog (τ is the radius):
///   constant_one        g = 1
///   power_log(c)        g = ln(e + τ)^c
///   iterated_log        g = sqrt(ln(e + ln(e + τ)))
///   power(eps)          g = (e + τ)^eps
///   spiky(period, h)    staircase: g = h^J(τ), J counts the jump points
///                       ln ln τ_j = period·(1 + h² + ... + h^{2(j-1)}), j >= 1
///   tabulated(table)    piecewise linear in τ through (radius, value) pairs,
///                       constant outside the table
///
/// The spiky stretches between jumps grow by h² in ln ln τ, so each flat piece
/// contributes exactly `period` to ∫ dτ / (g² τ ln τ).
class GFunction {
 public:
  enum class Kind { constant_one, power_log, iterated_log, power, spiky, tabulated };

  static GFunction constant_one();
  static GFunction power_log(double c = 0.5);
  static GFunction iterated_log();
  static GFunction power(double eps);
  static GFunction spiky(double period = 0.5, double height = 2.0);
  /// Throws InvalidArgument on unsorted radii, values < 1 or a decreasing value
  /// ("monotonicity violation").
  static GFunction tabulated(std::vector<std::pair<double, double>> table);

  /// Catalog lookup. Parameters by name: power_log{c}, power{eps},
  /// spiky{period, height}. Missing parameters take the defaults above.
  static GFunction from_catalog(std::string_view name, const std::map<std::string, double>& params = {});
  static std::vector<std::string> catalog_names();

  Kind kind() const { return kind_; }
  std::string name() const;
  std::string describe() const;

  double operator()(double radius) const;
  /// ln g(τ) as a function of ln τ; finite for ln τ far beyond double range of τ.
  double log_value_at_log(double log_radius) const;
  /// Discontinuities or kinks, as values of ln ln τ inside (lo, hi).
  std::vector<double> breakpoints_loglog(double lo, double hi) const;

  /// Samples g on a log-spaced mesh and throws if g < 1 or g decreases.
  void validate(double max_radius = 1e12, int samples = 2000) const;

  const std::vector<std::pair<double, double>>& table() const { return table_; }
  double param(std::string_view key) const;

 private:
  GFunction(Kind kind, double a, double b) : kind_(kind), a_(a), b_(b) {}
  int spiky_jumps(double loglog_radius) const;

  Kind kind_ = Kind::constant_one;
  double a_ = 0.0;
  double b_ = 0.0;
  std::vector<std::pair<double, double>> table_;
};

}  // namespace lmhd
