#include <doctest.h>

#include <cmath>

#include "lmhd/errors.hpp"
#include "lmhd/mhd.hpp"
#include "support/oracles.hpp"

using namespace lmhd;
using namespace lmhd::testing;

namespace {
SystemParams params(double nu, double eta, double alpha = 2.0, GFunction g = GFunction::constant_one()) {
  SystemParams p;
  p.diss_u = {nu, alpha, g};
  p.diss_b = {eta, 1.0, GFunction::constant_one()};
  return p;
}

SolutionPair random_state(const Grid& grid, unsigned seed, int band) {
  return {random_solenoidal(grid, seed, band), random_solenoidal(grid, seed + 500, band), 0.0};
}
}  // namespace

TEST_CASE("nonlinear tendency of trivial states") {
  const Grid g(2, 16);
  const auto zero = nonlinear_tendency(zero_state(g));
  CHECK(max_abs(zero.du) == 0.0);
  CHECK(max_abs(zero.db) == 0.0);

  const auto u = random_solenoidal(g, 3, 5);
  const auto equal = nonlinear_tendency({u, u, 0.0});
  CHECK(max_abs(equal.du) <= 1e-13 * max_abs(u));
  CHECK(max_abs(equal.db) <= 1e-13 * max_abs(u));

  CHECK_THROWS_AS(nonlinear_tendency({VectorField(Grid(2, 8)), VectorField(Grid(2, 16)), 0.0}), InvalidArgument);
}

TEST_CASE("nonlinear tendency matches the convolution oracle") {
  for (int dim : {2, 3}) {
    const Grid g(dim, 8);
    const int keep = max_retained_wavenumber(g);
    for (unsigned seed = 0; seed < (dim == 2 ? 5u : 1u); ++seed) {
      const auto s = random_state(g, seed, keep);
      const auto fast = nonlinear_tendency(s);
      const auto [du, db] = nonlinear_oracle(s.u, s.b, keep);
      CHECK(max_abs_diff(fast.du, du) <= 1e-10);
      CHECK(max_abs_diff(fast.db, db) <= 1e-10);
    }
  }
}

TEST_CASE("tendencies are solenoidal") {
  for (int dim : {2, 3}) {
    const Grid g(dim, dim == 2 ? 16 : 8);
    for (unsigned seed = 0; seed < 100; ++seed) {
      const auto t = nonlinear_tendency(random_state(g, seed, max_retained_wavenumber(g)));
      CHECK(solenoidal_defect(t.du) <= kSolenoidalTolerance);
      CHECK(solenoidal_defect(t.db) <= kSolenoidalTolerance);
    }
  }
}

TEST_CASE("energy and cross-helicity are conserved by the nonlinearity") {
  for (int dim : {2, 3}) {
    const Grid g(dim, dim == 2 ? 32 : 16);
    for (unsigned seed = 0; seed < 10; ++seed) {
      const auto s = random_state(g, seed, max_retained_wavenumber(g));
      const auto t = nonlinear_tendency(s);
      const double scale = l2_norm(t.du) * l2_norm(s.u) + l2_norm(t.db) * l2_norm(s.b);
      const auto flux = energy_flux_identity(s, params(0.0, 0.0));
      CHECK(std::abs(flux.nonlinear_rate) <= 1e-10 * scale);
      CHECK(flux.dissipation_rate == 0.0);
      const double cross = inner_product(t.du, s.b) + inner_product(t.db, s.u);
      CHECK(std::abs(cross) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("tendency is resolution consistent") {
  const Grid coarse(2, 8), fine(2, 16);
  const auto s = random_state(coarse, 77, 2);
  const SolutionPair s_fine{VectorField({resample(s.u[0], 16), resample(s.u[1], 16)}),
                            VectorField({resample(s.b[0], 16), resample(s.b[1], 16)}), 0.0};
  const auto tc = nonlinear_tendency(s);
  const auto tf = nonlinear_tendency(s_fine);
  for (int i = 0; i < 2; ++i) {
    const auto back_u = dealias(resample(tf.du[i], 8));
    const auto back_b = dealias(resample(tf.db[i], 8));
    CHECK(max_abs_diff(back_u, tc.du[i]) <= 1e-10);
    CHECK(max_abs_diff(back_b, tc.db[i]) <= 1e-10);
  }
}

TEST_CASE("full tendency") {
  const Grid g(2, 16);
  const auto s = random_state(g, 12, 5);
  const auto nl = nonlinear_tendency(s);
  const auto inviscid = full_tendency(s, params(0.0, 0.0));
  CHECK(max_abs_diff(inviscid.du, nl.du) == 0.0);
  CHECK(max_abs_diff(inviscid.db, nl.db) == 0.0);

  // η = 0 leaves db purely nonlinear.
  const auto viscous = full_tendency(s, params(1.0, 0.0));
  CHECK(max_abs_diff(viscous.db, nl.db) == 0.0);

  // Shear mode u = (sin x₂, 0) does not advect itself.
  const auto g_log = GFunction::power_log();
  SolutionPair shear = zero_state(g);
  shear.u[0] = forward_transform(g, sample(g, [](auto x) { return std::sin(x[1]); }));
  const auto t = full_tendency(shear, params(0.7, 0.0, 2.0, g_log));
  const double m = 1.0 / g_log(1.0);
  CHECK(max_abs_diff(t.du, -0.7 * m * m * shear.u) <= 1e-12);
  CHECK(max_abs(t.db) == 0.0);

  SystemParams off = params(1.0, 0.0);
  off.nonlinear = false;
  const auto lin = full_tendency(s, off);
  CHECK(max_abs_diff(lin.du, -1.0 * apply_dissipation(s.u, off.diss_u)) == 0.0);
}

TEST_CASE("energy flux identity") {
  const Grid g(2, 16);
  const auto zero = energy_flux_identity(zero_state(g), params(1.0, 1.0));
  CHECK(zero.nonlinear_rate == 0.0);
  CHECK(zero.dissipation_rate == 0.0);

  const auto s = random_state(g, 5, 5);
  double grad2 = 0.0;
  for (const auto& c : s.u)
    for (const auto& d : gradient(c)) grad2 += std::pow(lp_norm(d, 2.0), 2);
  const auto flux = energy_flux_identity(s, params(1.0, 0.0, 1.0));
  CHECK(std::abs(flux.dissipation_rate - grad2) <= 1e-12 * grad2);

  // ⟨full tendency, state⟩ = -dissipation.
  const auto p = params(0.3, 0.2, 2.0, GFunction::iterated_log());
  const auto t = full_tendency(s, p);
  const double rate = inner_product(t.du, s.u) + inner_product(t.db, s.b);
  const auto f = energy_flux_identity(s, p);
  CHECK(std::abs(rate + f.dissipation_rate) <= 1e-10 * f.dissipation_rate);
}

TEST_CASE("theorem regime") {
  CHECK(params(1.0, 0.0, 2.0).theorem_regime(2));
  CHECK_FALSE(params(1.0, 0.0, 2.0).theorem_regime(3));
  CHECK(params(1.0, 0.0, 2.5).theorem_regime(3));
  CHECK_FALSE(params(1.0, 0.1, 2.0).theorem_regime(2));
  CHECK_FALSE(params(0.0, 0.0, 2.0).theorem_regime(2));
}
