#include "lmhd/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {

double smooth_step_kernel(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

double inverse_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

bool is_supported_exponent(double p) { return p == 1.0 || p == 2.0 || (std::isinf(p) && p > 0); }

double sample_norm(const std::vector<double>& samples, double p, double cell) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double x : samples) m = std::max(m, std::abs(x));
    return m;
  }
  double sum = 0.0;
  for (double x : samples) sum += std::pow(std::abs(x), p);
  return std::pow(sum * cell, 1.0 / p);
}

// Multi-indices γ with |γ| = order in `dim` variables.
void multi_indices(int dim, int order, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == dim - 1) {
    current.push_back(order);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int a = 0; a <= order; ++a) {
    current.push_back(a);
    multi_indices(dim, order - a, current, out);
    current.pop_back();
  }
}

SpectralField apply_derivative(const SpectralField& f, const std::vector<int>& gamma) {
  const Grid& grid = f.grid();
  SpectralField out = f;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Complex m{1.0, 0.0};
    for (int a = 0; a < grid.dim(); ++a) {
      const Complex ik{0.0, static_cast<double>(grid.derivative_wavenumber(i, a))};
      for (int r = 0; r < gamma[static_cast<std::size_t>(a)]; ++r) m *= ik;
    }
    out[i] *= m;
  }
  return out;
}

double bernstein_denominator(const SpectralField& f, int j, double order, double p, double q,
                             LinfSampling sampling) {
  const double norm = lp_norm(f, p, sampling);
  detail::require(norm > 0.0, "Bernstein ratio needs a nonzero field");
  const double exponent = order + f.grid().dim() * (inverse_exponent(p) - inverse_exponent(q));
  return std::pow(2.0, j * exponent) * norm;
}

void check_bernstein_args(const SpectralField& f, int j, double p, double q) {
  detail::require(is_supported_exponent(p) && is_supported_exponent(q), "Bernstein exponents must be 1, 2 or inf");
  detail::require(inverse_exponent(p) >= inverse_exponent(q), "Bernstein ratio needs p <= q");
  detail::require(supported_in_annulus(f, j), "field is not supported in the dyadic annulus A_j");
}

}  // namespace

double lp_cutoff(double r) {
  if (r <= 0.5) return 1.0;
  if (r >= 1.0) return 0.0;
  const double t = 2.0 * r - 1.0;
  const double a = smooth_step_kernel(t);
  const double b = smooth_step_kernel(1.0 - t);
  return b / (a + b);
}

DyadicPartition::DyadicPartition(const Grid& grid) : grid_(grid) {
  j_max_ = std::max(0, static_cast<int>(std::ceil(std::log2(grid.max_radius()))));
  const int max_k2 = grid.dim() * (grid.points() / 2) * (grid.points() / 2);
  profiles_.assign(static_cast<std::size_t>(block_count()), std::vector<double>(static_cast<std::size_t>(max_k2) + 1));
  for (int j = -1; j <= j_max_; ++j) {
    auto& profile = profiles_[static_cast<std::size_t>(j + 1)];
    for (int k2 = 0; k2 <= max_k2; ++k2) profile[static_cast<std::size_t>(k2)] = weight(j, std::sqrt(double(k2)));
  }
}

double DyadicPartition::weight(int j, double r) {
  if (j < -1) return 0.0;
  if (j == -1) return lp_cutoff(r);
  return lp_cutoff(std::ldexp(r, -(j + 1))) - lp_cutoff(std::ldexp(r, -j));
}

double DyadicPartition::weight_k2(int j, int k2) const {
  if (j < -1 || j > j_max_) return 0.0;
  return profiles_[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(k2)];
}

std::vector<SpectralField> dyadic_blocks(const SpectralField& f, const DyadicPartition& part) {
  const Grid& grid = f.grid();
  detail::require(grid == part.grid(), "partition does not match the field's grid");
  std::vector<SpectralField> blocks;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    SpectralField block(grid);
    for (std::size_t i = 0; i < grid.size(); ++i) block[i] = part.weight_k2(j, grid.radius_squared(i)) * f[i];
    blocks.push_back(std::move(block));
  }
  return blocks;
}

double besov_norm(const SpectralField& f, const BesovIndex& idx, const DyadicPartition& part, LinfSampling sampling) {
  detail::require(is_supported_exponent(idx.p) && is_supported_exponent(idx.q), "Besov p, q must be 1, 2 or inf");
  const auto blocks = dyadic_blocks(f, part);
  double acc = 0.0;
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    const double term = std::pow(2.0, j * idx.s) * lp_norm(blocks[static_cast<std::size_t>(j + 1)], idx.p, sampling);
    if (std::isinf(idx.q)) {
      acc = std::max(acc, term);
    } else {
      acc += std::pow(term, idx.q);
    }
  }
  return std::isinf(idx.q) ? acc : std::pow(acc, 1.0 / idx.q);
}

bool supported_in_annulus(const SpectralField& f, int j) {
  const Grid& grid = f.grid();
  const double lo = std::ldexp(1.0, j - 1);
  const double hi = std::ldexp(1.0, j + 1);
  const double threshold = 1e-13 * f.max_abs();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(f[i]) <= threshold) continue;
    const double r = grid.radius(i);
    if (!(r > lo && r < hi)) return false;
  }
  return true;
}

double bernstein_ratio(const SpectralField& f, int j, int k_order, double p, double q, LinfSampling sampling) {
  detail::require(k_order >= 0, "derivative order must be >= 0");
  check_bernstein_args(f, j, p, q);
  std::vector<std::vector<int>> gammas;
  std::vector<int> current;
  multi_indices(f.grid().dim(), k_order, current, gammas);
  double numerator = 0.0;
  for (const auto& gamma : gammas) numerator = std::max(numerator, lp_norm(apply_derivative(f, gamma), q, sampling));
  return numerator / bernstein_denominator(f, j, k_order, p, q, sampling);
}

double bernstein_ratio_fractional(const SpectralField& f, int j, double s, double p, double q, LinfSampling sampling) {
  check_bernstein_args(f, j, p, q);
  const double numerator = lp_norm(fractional_derivative(f, s), q, sampling);
  return numerator / bernstein_denominator(f, j, s, p, q, sampling);
}

double SplitTerms::ratio() const {
  const double rhs = low + high;
  if (rhs > 0.0) return lhs / rhs;
  return lhs == 0.0 ? 0.0 : INFINITY;
}

double L_grad_norm(const VectorField& u, const DissipationSpec& diss) {
  const Grid& grid = u.grid();
  const auto table = symbol_table(grid, diss);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double kd2 = 0.0;
    for (int a = 0; a < grid.dim(); ++a) {
      const double k = grid.derivative_wavenumber(i, a);
      kd2 += k * k;
    }
    if (kd2 == 0.0) continue;
    const double m = table[static_cast<std::size_t>(grid.radius_squared(i))];
    double amp = 0.0;
    for (const auto& c : u) amp += std::norm(c[i]);
    sum += m * m * kd2 * amp;
  }
  return std::sqrt(grid.domain_volume() * sum);
}

double grad_linf(const VectorField& u, LinfSampling sampling) {
  double m = 0.0;
  for (const auto& c : u) {
    for (int j = 0; j < u.dim(); ++j) m = std::max(m, lp_norm(partial(c, j), INFINITY, sampling));
  }
  return m;
}

SplitTerms grad_uinf_split(const VectorField& u, const DissipationSpec& diss, double M1) {
  detail::require(M1 >= std::numbers::e, "splitting threshold M1 must be >= e");
  SplitTerms t;
  t.low = diss.g(M1) * std::sqrt(std::log(M1)) * l2_norm(apply_L(u, diss));
  t.high = L_grad_norm(u, diss) / std::sqrt(M1);
  t.lhs = grad_linf(u);
  return t;
}

void HolderExponents::validate() const {
  for (double e : {p, p1, p2, p3, p4}) {
    detail::require(is_supported_exponent(e), "Hölder exponents must be 1, 2 or inf");
  }
  const double ip = inverse_exponent(p);
  detail::require(ip == inverse_exponent(p1) + inverse_exponent(p2) && ip == inverse_exponent(p3) + inverse_exponent(p4),
                  "incompatible Hölder exponents: need 1/p = 1/p1 + 1/p2 = 1/p3 + 1/p4");
}

double CommutatorTerms::ratio() const {
  if (rhs > 0.0) return lhs / rhs;
  return lhs <= 1e-12 ? 0.0 : INFINITY;
}

CommutatorTerms commutator_terms(const SpectralField& f, const SpectralField& g, double s,
                                 const HolderExponents& exps) {
  detail::require(s > 0.0, "commutator order s must be > 0");
  detail::require(f.grid() == g.grid(), "grid mismatch");
  exps.validate();
  const int fine_points = 2 * f.grid().points();
  // Constants commute with Λ^s, so only the fluctuation of f enters the products.
  SpectralField ff = resample(f, fine_points);
  ff[0] = 0.0;
  const SpectralField gf = resample(g, fine_points);
  const Grid& fine = ff.grid();
  const double cell = fine.cell_volume();

  const auto f_x = to_physical(ff);
  const auto g_x = to_physical(gf);
  const auto lg_x = to_physical(fractional_derivative(gf, s));
  std::vector<double> fg(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) fg[i] = f_x[i] * g_x[i];
  const auto l_fg = to_physical(fractional_derivative(forward_transform(fine, fg), s));
  std::vector<double> diff(fine.size());
  for (std::size_t i = 0; i < fine.size(); ++i) diff[i] = l_fg[i] - f_x[i] * lg_x[i];

  std::vector<double> grad_mag(fine.size(), 0.0);
  for (int a = 0; a < fine.dim(); ++a) {
    const auto d = to_physical(partial(ff, a));
    for (std::size_t i = 0; i < fine.size(); ++i) grad_mag[i] += d[i] * d[i];
  }
  for (auto& x : grad_mag) x = std::sqrt(x);

  CommutatorTerms t;
  t.lhs = sample_norm(diff, exps.p, cell);
  t.rhs = sample_norm(grad_mag, exps.p1, cell) * sample_norm(to_physical(fractional_derivative(gf, s - 1.0)), exps.p2, cell) +
          sample_norm(to_physical(fractional_derivative(ff, s)), exps.p3, cell) * sample_norm(g_x, exps.p4, cell);
  return t;
}

double commutator_ratio(const SpectralField& f, const SpectralField& g, double s, const HolderExponents& exps) {
  return commutator_terms(f, g, s, exps).ratio();
}

}  // namespace lmhd
