#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lmhd/errors.hpp"
#include "lmhd/spectral.hpp"
#include "support/oracles.hpp"

using namespace lmhd;
using namespace lmhd::testing;
using std::numbers::pi;

TEST_CASE("grid validates dimension and resolution") {
  CHECK_THROWS_AS(Grid(1, 16), InvalidArgument);
  CHECK_THROWS_AS(Grid(4, 16), InvalidArgument);
  CHECK_THROWS_AS(Grid(2, 4), InvalidArgument);
  CHECK_THROWS_AS(Grid(2, 24), InvalidArgument);
  const Grid g(2, 8);
  CHECK(g.size() == 64);
  CHECK(g.wavenumber(3) == 3);
  CHECK(g.wavenumber(4) == -4);
  CHECK(g.is_nyquist(-4));
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g.index_of(g.wavevector(i)) == i);
    const WaveVector k = g.wavevector(i);
    const WaveVector c = g.wavevector(g.conjugate_index(i));
    for (int a = 0; a < 2; ++a) CHECK((c[a] == -k[a] || (g.is_nyquist(k[a]) && c[a] == k[a])));
  }
}

TEST_CASE("forward transform of a constant and of cos x1") {
  const Grid g(2, 16);
  const auto constant = forward_transform(g, std::vector<double>(g.size(), 3.5));
  CHECK(std::abs(constant[0] - Complex(3.5)) < 1e-15);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(std::abs(constant[i]) < 1e-15);

  const auto f = forward_transform(g, sample(g, [](auto x) { return std::cos(x[0]); }));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wavevector(i);
    const bool mode = std::abs(k[0]) == 1 && k[1] == 0;
    CHECK(std::abs(f[i] - Complex(mode ? 0.5 : 0.0)) < 1e-14);
  }
}

TEST_CASE("forward and inverse transforms match the brute-force DFT") {
  for (int dim : {2, 3}) {
    const Grid g(dim, 8);
    std::mt19937_64 rng(11 + dim);
    std::normal_distribution<double> normal;
    std::vector<double> samples(g.size());
    for (auto& s : samples) s = normal(rng);
    const auto f = forward_transform(g, samples);
    CHECK(max_abs_diff(f.coeffs(), dft_forward(g, samples)) <= 1e-12);

    const auto back = dft_inverse(g, f.coeffs());
    const auto fast = inverse_transform(f);
    for (std::size_t x = 0; x < g.size(); ++x) {
      CHECK(std::abs(back[x].real() - fast[x]) <= 1e-12);
      CHECK(std::abs(back[x].imag()) <= 1e-12);
    }
  }
}

TEST_CASE("round trip is exact to 1e-12 on all desk-scale grids") {
  for (int n : {8, 16, 32, 64}) {
    const Grid g(2, n);
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::vector<double> s(g.size());
    for (auto& v : s) v = uni(rng);
    const auto back = inverse_transform(forward_transform(g, s));
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      err = std::max(err, std::abs(back[i] - s[i]));
      scale = std::max(scale, std::abs(s[i]));
    }
    CHECK(err / scale <= 1e-12);
  }
}

TEST_CASE("inverse transform") {
  const Grid g(2, 8);
  for (double v : inverse_transform(SpectralField(g))) CHECK(v == 0.0);

  SpectralField f(g);
  f.at({1, 0, 0}) = 0.5;
  f.at({-1, 0, 0}) = 0.5;
  const auto cosx = sample(g, [](auto x) { return std::cos(x[0]); });
  const auto s = inverse_transform(f);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(std::abs(s[i] - cosx[i]) < 1e-14);

  SpectralField bad(g);
  bad.at({1, 2, 0}) = Complex(1.0, 1.0);
  CHECK_THROWS_AS(inverse_transform(bad), InvalidArgument);
  CHECK_THROWS_AS(forward_transform(g, std::vector<double>(10)), InvalidArgument);
}

TEST_CASE("Parseval on random fields") {
  for (int dim : {2, 3}) {
    const Grid g(dim, 16);
    const auto f = random_scalar(g, 3, 7);
    const auto s = inverse_transform(f);
    double physical = 0.0;
    for (double v : s) physical += v * v;
    physical *= g.cell_volume();
    double spectral = 0.0;
    for (const auto& c : f.coeffs()) spectral += std::norm(c);
    spectral *= g.domain_volume();
    CHECK(std::abs(physical - spectral) <= 1e-12 * spectral);
    CHECK(std::abs(lp_norm(f, 2.0) - l2_norm_physical(f)) <= 1e-12 * lp_norm(f, 2.0));
  }
}

TEST_CASE("fractional derivative") {
  const Grid g(2, 16);
  const auto f = random_scalar(g, 5, 7);
  const auto id = fractional_derivative(f, 0.0);
  CHECK(id[0] == Complex(0.0));
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(id[i] == f[i]);

  SpectralField m(g);
  m.at({1, 0, 0}) = 1.0;
  m.at({2, 0, 0}) = 1.0;
  const auto d2 = fractional_derivative(m, 2.0);
  CHECK(std::abs(d2.at({1, 0, 0}) - 1.0) < 1e-15);
  CHECK(std::abs(d2.at({2, 0, 0}) - 4.0) < 1e-14);

  CHECK(max_abs_diff(fractional_derivative(fractional_derivative(f, 1.0), 1.0), fractional_derivative(f, 2.0)) <=
        1e-12 * f.max_abs() * 200);
  for (auto [a, b] : {std::pair{0.5, 1.5}, {-1.0, 2.5}, {0.3, 0.7}}) {
    const auto lhs = fractional_derivative(fractional_derivative(f, a), b);
    const auto rhs = fractional_derivative(f, a + b);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * rhs.max_abs());
  }
}

TEST_CASE("gradient and divergence") {
  const Grid g(2, 16);
  SpectralField c(g);
  c[0] = 2.0;
  for (const auto& comp : gradient(c)) CHECK(comp.max_abs() == 0.0);

  const auto sinx = forward_transform(g, sample(g, [](auto x) { return std::sin(x[0]); }));
  const auto grad = gradient(sinx);
  const auto cosx = forward_transform(g, sample(g, [](auto x) { return std::cos(x[0]); }));
  CHECK(max_abs_diff(grad[0], cosx) < 1e-14);
  CHECK(grad[1].max_abs() < 1e-14);

  for (int dim : {2, 3}) {
    const Grid h(dim, 16);
    const auto f = random_scalar(h, 17, 7);
    const auto lhs = divergence(gradient(f));
    const auto rhs = -1.0 * fractional_derivative(f, 2.0);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12 * rhs.max_abs());
  }
  CHECK_THROWS_AS(divergence(VectorField({SpectralField(Grid(2, 8)), SpectralField(Grid(2, 16))})), InvalidArgument);
}

TEST_CASE("Leray projection") {
  for (int dim : {2, 3}) {
    const Grid g(dim, 16);
    for (unsigned seed = 0; seed < 100; ++seed) {
      const auto v = random_vector(g, seed, 7);
      const auto p = leray_project(v);
      CHECK(solenoidal_defect(p) <= kSolenoidalTolerance);
      CHECK(max_abs_diff(leray_project(p), p) <= 1e-12 * max_abs(p));
      const auto grad = gradient(random_scalar(g, seed + 1000, 7));
      CHECK(max_abs(leray_project(grad)) <= 1e-12 * max_abs(grad));
    }
  }
  // (-∂₂ψ, ∂₁ψ) is a fixed point.
  const Grid g(2, 16);
  const auto psi = random_scalar(g, 9, 7);
  const VectorField v({-1.0 * partial(psi, 1), partial(psi, 0)});
  CHECK(max_abs_diff(leray_project(v), v) <= 1e-12 * max_abs(v));
}

TEST_CASE("dealiasing") {
  const Grid g(2, 32);
  const auto low = random_scalar(g, 1, 2);
  CHECK(max_abs_diff(dealias(low), low) == 0.0);
  SpectralField edge(g);
  edge.at({15, 0, 0}) = 1.0;
  CHECK(dealias(edge).max_abs() == 0.0);
  CHECK(max_retained_wavenumber(g) == 10);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const WaveVector k = g.wavevector(i);
    CHECK(is_retained(g, i) == (std::abs(k[0]) < 32.0 / 3 && std::abs(k[1]) < 32.0 / 3));
  }
}

TEST_CASE("dealiased product equals the convolution oracle on 8x8") {
  const Grid g(2, 8);
  const int keep = max_retained_wavenumber(g);
  const auto a = random_scalar(g, 21, keep);
  const auto b = random_scalar(g, 22, keep);
  const auto sa = inverse_transform(a);
  const auto sb = inverse_transform(b);
  std::vector<double> prod(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) prod[i] = sa[i] * sb[i];
  const auto fast = dealias(forward_transform(g, prod));

  SpectralField exact(g);
  for (std::size_t p = 0; p < g.size(); ++p) {
    for (std::size_t q = 0; q < g.size(); ++q) {
      const WaveVector kp = g.wavevector(p), kq = g.wavevector(q);
      const WaveVector k{kp[0] + kq[0], kp[1] + kq[1], 0};
      if (std::abs(k[0]) <= keep && std::abs(k[1]) <= keep) exact.at(k) += a[p] * b[q];
    }
  }
  CHECK(max_abs_diff(fast, exact) <= 1e-12);
}

TEST_CASE("norms") {
  const Grid g(2, 32);
  const SpectralField zero(g);
  for (double p : {1.0, 2.0, double(INFINITY)}) CHECK(lp_norm(zero, p) == 0.0);
  CHECK(hs_norm(zero, 1.5) == 0.0);
  CHECK_THROWS_AS(lp_norm(zero, 3.0), InvalidArgument);

  const auto cosx = forward_transform(g, sample(g, [](auto x) { return std::cos(x[0]); }));
  CHECK(std::abs(lp_norm(cosx, 2.0) - std::sqrt(2.0 * pi * pi)) < 1e-12);
  CHECK(std::abs(lp_norm(cosx, INFINITY) - 1.0) < 1e-14);
  // ∫|cos x₁| over the torus = 2π · 4; the kinks of |cos| limit grid quadrature.
  CHECK(std::abs(lp_norm(cosx, 1.0) - 8.0 * pi) < 0.1);

  for (int dim : {2, 3}) {
    const Grid h(dim, 16);
    const auto f = random_scalar(h, 4, 7);
    double sum = 0.0;
    for (const auto& c : gradient(f)) sum += std::pow(lp_norm(c, 2.0), 2);
    CHECK(std::abs(hs_norm(f, 1.0) - std::sqrt(sum)) <= 1e-12 * hs_norm(f, 1.0));
  }
}

TEST_CASE("padded sup norm is never below the grid sup") {
  const Grid g(2, 16);
  for (unsigned seed = 0; seed < 20; ++seed) {
    const auto f = random_scalar(g, seed, 7);
    CHECK(lp_norm(f, INFINITY, LinfSampling::padded2x) >= lp_norm(f, INFINITY) - 1e-13);
  }
}

TEST_CASE("resample preserves band-limited fields") {
  const Grid g(2, 16);
  const auto f = random_scalar(g, 8, 7);
  const auto fine = resample(f, 32);
  CHECK(std::abs(lp_norm(fine, 2.0) - lp_norm(f, 2.0)) <= 1e-12 * lp_norm(f, 2.0));
  CHECK(max_abs_diff(resample(fine, 16), f) <= 1e-15);
  const auto coarse = inverse_transform(f);
  const auto dense = inverse_transform(fine);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) CHECK(std::abs(coarse[i * 16 + j] - dense[(2 * i) * 32 + 2 * j]) < 1e-12);
}

TEST_CASE("inner products and solenoidal defect") {
  const Grid g(2, 16);
  const auto f = random_scalar(g, 31, 7);
  const auto h = random_scalar(g, 32, 7);
  const auto sf = inverse_transform(f);
  const auto sh = inverse_transform(h);
  double direct = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) direct += sf[i] * sh[i];
  direct *= g.cell_volume();
  CHECK(std::abs(inner_product(f, h) - direct) <= 1e-12 * std::abs(direct) + 1e-12);
  CHECK(solenoidal_defect(gradient(f)) > 1e-3);
}
