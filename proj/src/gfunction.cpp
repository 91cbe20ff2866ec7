#include "lmhd/gfunction.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {
constexpr double kE = std::numbers::e;

// ln(e + τ) given u = ln τ.
double log_e_plus(double u) {
  if (u > 0.0) return u + std::log1p(kE * std::exp(-u));
  return std::log(kE + std::exp(u));
}

double get(const std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}
}  // namespace

GFunction GFunction::constant_one() { return {Kind::constant_one, 0.0, 0.0}; }

GFunction GFunction::power_log(double c) {
  detail::require(c >= 0.0 && std::isfinite(c), "power_log exponent must be >= 0");
  return {Kind::power_log, c, 0.0};
}

GFunction GFunction::iterated_log() { return {Kind::iterated_log, 0.0, 0.0}; }

GFunction GFunction::power(double eps) {
  detail::require(eps >= 0.0 && std::isfinite(eps), "power exponent must be >= 0");
  return {Kind::power, eps, 0.0};
}

GFunction GFunction::spiky(double period, double height) {
  detail::require(period > 0.0 && std::isfinite(period), "spiky period must be > 0");
  detail::require(height > 1.0 && std::isfinite(height), "spiky height must be > 1");
  return {Kind::spiky, period, height};
}

GFunction GFunction::tabulated(std::vector<std::pair<double, double>> table) {
  detail::require(!table.empty(), "tabulated g needs at least one point");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [r, v] = table[i];
    detail::require(r >= 0.0 && std::isfinite(r) && std::isfinite(v), "tabulated g: invalid point");
    detail::require(v >= 1.0, "tabulated g: values must be >= 1");
    if (i > 0) {
      detail::require(r > table[i - 1].first, "tabulated g: radii must be strictly increasing");
      if (v < table[i - 1].second) {
        std::ostringstream msg;
        msg << "tabulated g: monotonicity violation at radius " << r << " (" << v << " < " << table[i - 1].second
            << ")";
        throw InvalidArgument(msg.str());
      }
    }
  }
  GFunction g{Kind::tabulated, 0.0, 0.0};
  g.table_ = std::move(table);
  return g;
}

GFunction GFunction::from_catalog(std::string_view name, const std::map<std::string, double>& params) {
  if (name == "constant_one") return constant_one();
  if (name == "power_log") return power_log(get(params, "c", 0.5));
  if (name == "iterated_log") return iterated_log();
  if (name == "power") return power(get(params, "eps", 0.1));
  if (name == "spiky") return spiky(get(params, "period", 0.5), get(params, "height", 2.0));
  throw InvalidArgument("unknown g function '" + std::string(name) + "'");
}

std::vector<std::string> GFunction::catalog_names() {
  return {"constant_one", "power_log", "iterated_log", "power", "spiky", "tabulated"};
}

std::string GFunction::name() const {
  switch (kind_) {
    case Kind::constant_one: return "constant_one";
    case Kind::power_log: return "power_log";
    case Kind::iterated_log: return "iterated_log";
    case Kind::power: return "power";
    case Kind::spiky: return "spiky";
    case Kind::tabulated: return "tabulated";
  }
  return "unknown";
}

std::string GFunction::describe() const {
  std::ostringstream s;
  s << name();
  switch (kind_) {
    case Kind::power_log: s << "(c=" << a_ << ")"; break;
    case Kind::power: s << "(eps=" << a_ << ")"; break;
    case Kind::spiky: s << "(period=" << a_ << ", height=" << b_ << ")"; break;
    case Kind::tabulated: s << "(" << table_.size() << " points)"; break;
    default: break;
  }
  return s.str();
}

double GFunction::param(std::string_view key) const {
  if (kind_ == Kind::power_log && key == "c") return a_;
  if (kind_ == Kind::power && key == "eps") return a_;
  if (kind_ == Kind::spiky && key == "period") return a_;
  if (kind_ == Kind::spiky && key == "height") return b_;
  throw InvalidArgument("g function " + name() + " has no parameter '" + std::string(key) + "'");
}

int GFunction::spiky_jumps(double loglog_radius) const {
  const double h2 = b_ * b_;
  int jumps = 0;
  double step = a_;
  double position = a_;
  while (position <= loglog_radius && jumps < 1000) {
    ++jumps;
    step *= h2;
    position += step;
  }
  return jumps;
}

double GFunction::operator()(double radius) const {
  detail::require(radius >= 0.0, "g evaluated at a negative radius");
  switch (kind_) {
    case Kind::constant_one: return 1.0;
    case Kind::power_log: return std::pow(std::log(kE + radius), a_);
    case Kind::iterated_log: return std::sqrt(std::log(kE + std::log(kE + radius)));
    case Kind::power: return std::pow(kE + radius, a_);
    case Kind::spiky: {
      if (radius <= 1.0) return 1.0;
      const double u = std::log(radius);
      if (u <= 0.0) return 1.0;
      return std::pow(b_, spiky_jumps(std::log(u)));
    }
    case Kind::tabulated: {
      if (radius <= table_.front().first) return table_.front().second;
      if (radius >= table_.back().first) return table_.back().second;
      for (std::size_t i = 1; i < table_.size(); ++i) {
        if (radius <= table_[i].first) {
          const auto [r0, v0] = table_[i - 1];
          const auto [r1, v1] = table_[i];
          return v0 + (v1 - v0) * (radius - r0) / (r1 - r0);
        }
      }
      return table_.back().second;
    }
  }
  return 1.0;
}

double GFunction::log_value_at_log(double log_radius) const {
  switch (kind_) {
    case Kind::constant_one: return 0.0;
    case Kind::power_log: return a_ * std::log(log_e_plus(log_radius));
    case Kind::iterated_log: return 0.5 * std::log(std::log(kE + log_e_plus(log_radius)));
    case Kind::power: return a_ * log_e_plus(log_radius);
    case Kind::spiky:
      if (log_radius <= 0.0) return 0.0;
      return spiky_jumps(std::log(log_radius)) * std::log(b_);
    case Kind::tabulated:
      if (log_radius > 700.0) return std::log(table_.back().second);
      return std::log((*this)(std::exp(log_radius)));
  }
  return 0.0;
}

std::vector<double> GFunction::breakpoints_loglog(double lo, double hi) const {
  std::vector<double> points;
  if (kind_ == Kind::spiky) {
    const double h2 = b_ * b_;
    double step = a_;
    double position = a_;
    while (position < hi) {
      if (position > lo) points.push_back(position);
      step *= h2;
      position += step;
    }
  } else if (kind_ == Kind::tabulated) {
    for (const auto& [r, v] : table_) {
      if (r <= kE) continue;
      const double w = std::log(std::log(r));
      if (w > lo && w < hi) points.push_back(w);
    }
  }
  return points;
}

void GFunction::validate(double max_radius, int samples) const {
  double previous = (*this)(0.0);
  detail::require(previous >= 1.0, name() + ": g(0) < 1");
  for (int i = 0; i <= samples; ++i) {
    const double r = std::pow(10.0, -3.0 + (std::log10(max_radius) + 3.0) * i / samples);
    const double value = (*this)(r);
    detail::require(value >= 1.0, name() + ": g < 1 at radius " + std::to_string(r));
    detail::require(value >= previous * (1.0 - 1e-14),
                    name() + ": monotonicity violation at radius " + std::to_string(r));
    previous = value;
  }
}

}  // namespace lmhd
