#include "lmhd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lmhd/errors.hpp"

namespace lmhd {

namespace {
constexpr Complex kI{0.0, 1.0};

void require_same_grid(const Grid& a, const Grid& b) { detail::require(a == b, "grid mismatch"); }
}  // namespace

SpectralField forward_transform(const Grid& grid, std::span<const double> samples) {
  detail::require(samples.size() == grid.size(), "sample count does not match grid");
  std::vector<Complex> in(samples.begin(), samples.end());
  std::vector<Complex> out(grid.size());
  grid.forward_fft(in, out);
  const double scale = 1.0 / static_cast<double>(grid.size());
  for (auto& c : out) c *= scale;
  return SpectralField(grid, std::move(out));
}

std::vector<double> to_physical(const SpectralField& f) {
  const Grid& grid = f.grid();
  std::vector<Complex> out(grid.size());
  grid.backward_fft(f.coeffs(), out);
  std::vector<double> samples(grid.size());
  std::transform(out.begin(), out.end(), samples.begin(), [](const Complex& c) { return c.real(); });
  return samples;
}

bool is_conjugate_symmetric(const SpectralField& f, double rel_tol) {
  const Grid& grid = f.grid();
  const double tol = rel_tol * std::max(f.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (std::abs(f[i] - std::conj(f[grid.conjugate_index(i)])) > tol) return false;
  }
  return true;
}

std::vector<double> inverse_transform(const SpectralField& f) {
  detail::require(is_conjugate_symmetric(f), "inverse transform needs conjugate-symmetric coefficients");
  return to_physical(f);
}

SpectralField fractional_derivative(const SpectralField& f, double s) {
  const Grid& grid = f.grid();
  SpectralField out(grid);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double r = grid.radius(i);
    out[i] = std::pow(r, s) * f[i];
  }
  return out;
}

VectorField fractional_derivative(const VectorField& v, double s) {
  std::vector<SpectralField> comps;
  for (const auto& c : v) comps.push_back(fractional_derivative(c, s));
  return VectorField(std::move(comps));
}

SpectralField partial(const SpectralField& f, int axis) {
  const Grid& grid = f.grid();
  detail::require(axis >= 0 && axis < grid.dim(), "axis out of range");
  SpectralField out(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out[i] = kI * static_cast<double>(grid.derivative_wavenumber(i, axis)) * f[i];
  }
  return out;
}

VectorField gradient(const SpectralField& f) {
  std::vector<SpectralField> comps;
  for (int a = 0; a < f.grid().dim(); ++a) comps.push_back(partial(f, a));
  return VectorField(std::move(comps));
}

SpectralField divergence(const VectorField& v) {
  SpectralField out(v.grid());
  for (int a = 0; a < v.dim(); ++a) out += partial(v[a], a);
  return out;
}

VectorField leray_project(const VectorField& v) {
  const Grid& grid = v.grid();
  const int dim = grid.dim();
  VectorField out = v;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    std::array<double, 3> k{0, 0, 0};
    double k2 = 0.0;
    for (int a = 0; a < dim; ++a) {
      k[a] = grid.derivative_wavenumber(i, a);
      k2 += k[a] * k[a];
    }
    if (k2 == 0.0) continue;
    Complex kv{0.0, 0.0};
    for (int a = 0; a < dim; ++a) kv += k[a] * v[a][i];
    for (int a = 0; a < dim; ++a) out[a][i] -= k[a] * kv / k2;
  }
  return out;
}

int max_retained_wavenumber(const Grid& grid) {
  // Largest integer k with 3k < points.
  return (grid.points() - 1) / 3;
}

bool is_retained(const Grid& grid, std::size_t flat) {
  const auto k = grid.wavevector(flat);
  const int kmax = max_retained_wavenumber(grid);
  for (int a = 0; a < grid.dim(); ++a) {
    if (std::abs(k[a]) > kmax) return false;
  }
  return true;
}

SpectralField dealias(const SpectralField& f) {
  SpectralField out = f;
  const Grid& grid = f.grid();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!is_retained(grid, i)) out[i] = 0.0;
  }
  return out;
}

VectorField dealias(const VectorField& v) {
  std::vector<SpectralField> comps;
  for (const auto& c : v) comps.push_back(dealias(c));
  return VectorField(std::move(comps));
}

SpectralField resample(const SpectralField& f, int points) {
  const Grid& coarse = f.grid();
  if (points == coarse.points()) return f;
  Grid target(coarse.dim(), points);
  SpectralField out(target);
  const int dim = coarse.dim();
  const int half_target = points / 2;
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    if (f[i] == Complex{0.0, 0.0}) continue;
    const WaveVector k = coarse.wavevector(i);
    if (points > coarse.points()) {
      std::array<bool, 3> nyq{false, false, false};
      int count = 0;
      for (int a = 0; a < dim; ++a) {
        nyq[a] = coarse.is_nyquist(k[a]);
        count += nyq[a] ? 1 : 0;
      }
      const Complex share = f[i] / static_cast<double>(1 << count);
      for (int mask = 0; mask < (1 << dim); ++mask) {
        WaveVector kk = k;
        bool valid = true;
        for (int a = 0; a < dim; ++a) {
          const bool flip = (mask >> a) & 1;
          if (flip && !nyq[a]) valid = false;
          if (flip) kk[a] = -k[a];
        }
        if (valid) out.at(kk) += share;
      }
    } else {
      bool keep = true;
      for (int a = 0; a < dim; ++a) keep = keep && std::abs(k[a]) < half_target;
      if (keep) out.at(k) = f[i];
    }
  }
  return out;
}

double lp_norm(const SpectralField& f, double p, LinfSampling sampling) {
  const Grid& grid = f.grid();
  if (p == 2.0) {
    double sum = 0.0;
    for (const auto& c : f.coeffs()) sum += std::norm(c);
    return std::sqrt(grid.domain_volume() * sum);
  }
  if (p == 1.0) {
    double sum = 0.0;
    for (double x : to_physical(f)) sum += std::abs(x);
    return sum * grid.cell_volume();
  }
  if (std::isinf(p) && p > 0) {
    const auto samples =
        sampling == LinfSampling::padded2x ? to_physical(resample(f, 2 * grid.points())) : to_physical(f);
    double m = 0.0;
    for (double x : samples) m = std::max(m, std::abs(x));
    return m;
  }
  throw InvalidArgument("unsupported L^p exponent; use 1, 2 or infinity");
}

double l2_norm_physical(const SpectralField& f) {
  double sum = 0.0;
  for (double x : to_physical(f)) sum += x * x;
  return std::sqrt(sum * f.grid().cell_volume());
}

double hs_norm(const SpectralField& f, double s) {
  const Grid& grid = f.grid();
  double sum = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (f[i] == Complex{0.0, 0.0}) continue;
    sum += std::pow(grid.radius(i), 2.0 * s) * std::norm(f[i]);
  }
  return std::sqrt(grid.domain_volume() * sum);
}

double l2_norm(const VectorField& v) {
  double sum = 0.0;
  for (const auto& c : v) {
    const double n = lp_norm(c, 2.0);
    sum += n * n;
  }
  return std::sqrt(sum);
}

double hs_norm(const VectorField& v, double s) {
  double sum = 0.0;
  for (const auto& c : v) {
    const double n = hs_norm(c, s);
    sum += n * n;
  }
  return std::sqrt(sum);
}

double linf_norm(const VectorField& v, LinfSampling sampling) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, lp_norm(c, INFINITY, sampling));
  return m;
}

double inner_product(const SpectralField& f, const SpectralField& h) {
  require_same_grid(f.grid(), h.grid());
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (f[i] * std::conj(h[i])).real();
  return f.grid().domain_volume() * sum;
}

double inner_product(const VectorField& f, const VectorField& h) {
  detail::require(f.dim() == h.dim(), "dimension mismatch");
  double sum = 0.0;
  for (int a = 0; a < f.dim(); ++a) sum += inner_product(f[a], h[a]);
  return sum;
}

double solenoidal_defect(const VectorField& v) {
  const Grid& grid = v.grid();
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    Complex kv{0.0, 0.0};
    for (int a = 0; a < v.dim(); ++a) kv += static_cast<double>(grid.derivative_wavenumber(i, a)) * v[a][i];
    worst = std::max(worst, std::abs(kv));
  }
  return worst / std::max(1.0, l2_norm(v));
}

}  // namespace lmhd
