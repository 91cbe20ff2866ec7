#include "lmhd/osgood.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {
constexpr double kLn2 = std::numbers::ln2;

// Integrand after τ = exp(exp(w)): dτ / (g² τ ln τ) = dw / g².
double integrand(const GFunction& g, double w) { return std::exp(-2.0 * g.log_value_at_log(std::exp(w))); }

double integrate_piece(const GFunction& g, double a, double b) {
  if (b <= a) return 0.0;
  auto f = [&g](double w) { return integrand(g, w); };
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-10);
}

// ∫ over [a, b] in w, split into `pieces` equal parts plus g's breakpoints.
double integrate_range(const GFunction& g, double a, double b, int pieces) {
  if (b <= a) return 0.0;
  std::vector<double> cuts;
  for (int i = 0; i <= pieces; ++i) cuts.push_back(a + (b - a) * i / pieces);
  for (double w : g.breakpoints_loglog(a, b)) cuts.push_back(w);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) total += integrate_piece(g, cuts[i - 1], cuts[i]);
  return total;
}
}  // namespace

OsgoodLimit OsgoodLimit::value(double upper_limit) {
  detail::require(upper_limit > 0.0 && std::isfinite(upper_limit), "Osgood limit must be positive and finite");
  return OsgoodLimit(std::log(upper_limit));
}

OsgoodLimit OsgoodLimit::exp_of(double log_upper_limit) {
  detail::require(std::isfinite(log_upper_limit), "Osgood log-limit must be finite");
  return OsgoodLimit(log_upper_limit);
}

OsgoodLimit OsgoodLimit::parse(const std::string& text) {
  try {
    if (text.rfind("e^", 0) == 0) return exp_of(std::stod(text.substr(2)));
    return value(std::stod(text));
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse Osgood limit '" + text + "'");
  }
}

double OsgoodLimit::value_or_inf() const { return log_ > 709.0 ? INFINITY : std::exp(log_); }

std::string to_string(OsgoodClass c) {
  switch (c) {
    case OsgoodClass::diverges: return "diverges";
    case OsgoodClass::converges: return "converges";
    case OsgoodClass::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

OsgoodVerdict osgood_classify(const GFunction& g, OsgoodLimit upper_limit, int samples) {
  const double log_r = upper_limit.log_value();
  detail::require(log_r >= std::log(10.0 * std::numbers::e), "Osgood upper limit must be >= 10e");
  detail::require(samples >= 1000, "Osgood classification needs >= 1000 samples");
  if (g.kind() == GFunction::Kind::tabulated) g.validate();

  OsgoodVerdict verdict;
  verdict.log_upper_limit_used = log_r;
  verdict.upper_limit_used = upper_limit.value_or_inf();

  const double w_max = std::log(log_r);
  const int complete = static_cast<int>(std::floor(w_max / kLn2));
  const int pieces = std::max(1, samples / std::max(1, complete + 1));

  for (int m = 0; m < complete; ++m) {
    const double integral = integrate_range(g, m * kLn2, (m + 1) * kLn2, pieces);
    verdict.window_integrals.push_back(integral);
    verdict.partial_integral += integral;
  }
  verdict.partial_integral += integrate_range(g, complete * kLn2, w_max, pieces);

  const auto& windows = verdict.window_integrals;
  if (static_cast<int>(windows.size()) < kOsgoodTailWindows + 1) return verdict;

  for (std::size_t m = windows.size() - kOsgoodTailWindows; m < windows.size(); ++m) {
    const double prev = windows[m - 1];
    const double next = windows[m];
    verdict.tail_ratios.push_back(prev > 0.0 ? next / prev : (next > 0.0 ? INFINITY : 0.0));
  }
  const auto [lo, hi] = std::minmax_element(verdict.tail_ratios.begin(), verdict.tail_ratios.end());
  if (*lo >= kOsgoodDivergentRatio) {
    verdict.classification = OsgoodClass::diverges;
  } else if (*hi <= kOsgoodConvergentRatio) {
    verdict.classification = OsgoodClass::converges;
  }
  return verdict;
}

double osgood_integral(const GFunction& g, double lo, double hi) {
  detail::require(lo >= std::numbers::e && hi >= std::numbers::e, "Osgood integral limits must be >= e");
  if (hi < lo) return -osgood_integral(g, hi, lo);
  const double a = std::log(std::log(lo));
  const double b = std::log(std::log(hi));
  const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / kLn2)));
  return integrate_range(g, a, b, pieces);
}

}  // namespace lmhd
