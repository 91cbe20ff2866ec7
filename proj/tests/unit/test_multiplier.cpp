#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lmhd/errors.hpp"
#include "lmhd/multiplier.hpp"
#include "lmhd/osgood.hpp"
#include "support/oracles.hpp"

using namespace lmhd;
using namespace lmhd::testing;
using std::numbers::e;

namespace {
std::vector<GFunction> catalog() {
  return {GFunction::constant_one(), GFunction::power_log(), GFunction::power_log(1.0), GFunction::iterated_log(),
          GFunction::power(0.1),     GFunction::spiky(),     GFunction::spiky(0.25, 3.0),
          GFunction::tabulated({{0.0, 1.0}, {4.0, 1.5}, {40.0, 3.0}})};
}
}  // namespace

TEST_CASE("g catalog values") {
  CHECK(GFunction::constant_one()(123.0) == 1.0);
  CHECK(std::abs(GFunction::power_log()(10.0) - std::sqrt(std::log(e + 10.0))) < 1e-15);
  CHECK(std::abs(GFunction::iterated_log()(5.0) - std::sqrt(std::log(e + std::log(e + 5.0)))) < 1e-15);
  CHECK(std::abs(GFunction::power(0.1)(7.0) - std::pow(e + 7.0, 0.1)) < 1e-15);

  // First jump of the default spiky g sits at ln ln τ = 0.5, the second at 0.5 + 0.5·4.
  const auto spiky = GFunction::spiky();
  CHECK(spiky(std::exp(std::exp(0.49))) == 1.0);
  CHECK(spiky(std::exp(std::exp(0.51))) == 2.0);
  CHECK(spiky(std::exp(std::exp(2.49))) == 2.0);
  CHECK(spiky(std::exp(std::exp(2.51))) == 4.0);

  const auto tab = GFunction::tabulated({{1.0, 1.0}, {3.0, 2.0}});
  CHECK(tab(0.0) == 1.0);
  CHECK(tab(2.0) == doctest::Approx(1.5));
  CHECK(tab(100.0) == 2.0);
}

TEST_CASE("g invariants: g >= 1 and non-decreasing") {
  for (const auto& g : catalog()) {
    CHECK_NOTHROW(g.validate());
    for (double u : {1.0, 10.0, 100.0, 600.0}) CHECK(std::abs(g.log_value_at_log(u) - std::log(g(std::exp(u)))) < 1e-12);
  }
  CHECK(std::isfinite(GFunction::iterated_log().log_value_at_log(1e100)));
}

TEST_CASE("tabulated g rejects bad tables") {
  CHECK_THROWS_WITH_AS(GFunction::tabulated({{0.0, 2.0}, {1.0, 1.5}}), doctest::Contains("monotonicity violation"),
                       InvalidArgument);
  CHECK_THROWS_AS(GFunction::tabulated({{0.0, 0.5}}), InvalidArgument);
  CHECK_THROWS_AS(GFunction::tabulated({{2.0, 1.0}, {1.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(GFunction::tabulated({}), InvalidArgument);
}

TEST_CASE("catalog lookup by name") {
  CHECK(GFunction::from_catalog("power", {{"eps", 0.05}}).param("eps") == 0.05);
  CHECK(GFunction::from_catalog("spiky").param("height") == 2.0);
  CHECK(GFunction::from_catalog("power_log").param("c") == 0.5);
  CHECK_THROWS_AS(GFunction::from_catalog("bogus"), InvalidArgument);
  CHECK_THROWS_AS(GFunction::from_catalog("power", {{"eps", -1.0}}), InvalidArgument);
}

TEST_CASE("symbol") {
  const DissipationSpec pure{1.0, 2.0, GFunction::constant_one()};
  CHECK(symbol(pure, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(symbol(pure, 0.0) == 0.0);
  CHECK_THROWS_AS(symbol(pure, -1.0), InvalidArgument);
  const DissipationSpec logged{1.0, 2.0, GFunction::power_log()};
  const double independent = 100.0 / std::sqrt(std::log(e + 10.0));
  CHECK(std::abs(symbol(logged, 10.0) - independent) <= 1e-14 * independent);
}

TEST_CASE("symbol bounds: m <= r^alpha and monotone in g") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> logr(-2.0, 6.0);
  const auto gs = catalog();
  for (int i = 0; i < 100; ++i) {
    const double r = std::pow(10.0, logr(rng));
    for (double alpha : {1.0, 2.0, 2.5}) {
      for (std::size_t a = 0; a < gs.size(); ++a) {
        const double m = symbol({1.0, alpha, gs[a]}, r);
        CHECK(m >= 0.0);
        CHECK(m <= std::pow(r, alpha) * (1.0 + 1e-15));
        for (std::size_t b = 0; b < gs.size(); ++b) {
          if (gs[b](r) >= gs[a](r)) CHECK(symbol({1.0, alpha, gs[b]}, r) <= m * (1.0 + 1e-15));
        }
      }
    }
  }
}

TEST_CASE("dissipation spec validation") {
  CHECK_THROWS_AS((DissipationSpec{-1.0, 2.0, GFunction::constant_one()}.validate()), InvalidArgument);
  CHECK_THROWS_AS((DissipationSpec{1.0, 0.0, GFunction::constant_one()}.validate()), InvalidArgument);
  CHECK_NOTHROW((DissipationSpec{0.0, 2.0, GFunction::spiky()}.validate()));
}

TEST_CASE("apply_dissipation and apply_L") {
  const Grid g(2, 16);
  const auto v = random_vector(g, 40, 7);
  const DissipationSpec off{0.0, 2.0, GFunction::constant_one()};
  CHECK(max_abs(apply_dissipation(v, off)) == 0.0);

  SpectralField mode(g);
  mode.at({1, 0, 0}) = 0.5;
  mode.at({-1, 0, 0}) = 0.5;
  CHECK(max_abs_diff(apply_dissipation(mode, {1.0, 2.0, GFunction::constant_one()}), mode) < 1e-15);

  for (const auto& gf : catalog()) {
    const DissipationSpec spec{1.0, 2.0, gf};
    // Λ^{2α} followed by division by g².
    const auto f = v[0];
    auto expected = fractional_derivative(f, 2.0 * spec.exponent);
    for (std::size_t i = 0; i < g.size(); ++i) expected[i] /= std::pow(gf(g.radius(i)), 2);
    const auto got = apply_dissipation(f, spec);
    CHECK(max_abs_diff(got, expected) <= 1e-12 * expected.max_abs());
    CHECK(max_abs_diff(apply_L(apply_L(f, spec), spec), got) <= 1e-12 * got.max_abs());

    // Self-adjointness.
    const auto h = v[1];
    const double lhs = inner_product(apply_L(f, spec), h);
    const double rhs = inner_product(f, apply_L(h, spec));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));

    const auto scaled = apply_dissipation(f, {0.3, 2.0, gf});
    CHECK(max_abs_diff(scaled, 0.3 * got) <= 1e-12 * got.max_abs());
  }

  // g ≡ 1, α = 1: ‖𝓛u‖ = ‖∇u‖.
  const DissipationSpec grad{1.0, 1.0, GFunction::constant_one()};
  double sum = 0.0;
  for (const auto& c : v)
    for (const auto& d : gradient(c)) sum += std::pow(lp_norm(d, 2.0), 2);
  CHECK(std::abs(l2_norm(apply_L(v, grad)) - std::sqrt(sum)) <= 1e-12 * std::sqrt(sum));
  CHECK(max_abs(apply_L(VectorField(g), grad)) == 0.0);
  CHECK_THROWS_AS(apply_L(VectorField(std::vector<SpectralField>{}), grad), InvalidArgument);
}

TEST_CASE("symbol table matches pointwise symbol") {
  const Grid g(3, 8);
  const DissipationSpec spec{1.0, 2.5, GFunction::iterated_log()};
  const auto table = symbol_table(g, spec);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(table[g.radius_squared(i)] == doctest::Approx(symbol(spec, g.radius(i))));
}

TEST_CASE("Osgood limit parsing") {
  CHECK(OsgoodLimit::parse("1e300").log_value() == doctest::Approx(300.0 * std::log(10.0)));
  CHECK(OsgoodLimit::parse("e^1e100").log_value() == 1e100);
  CHECK(std::isinf(OsgoodLimit::parse("e^1e100").value_or_inf()));
  CHECK_THROWS_AS(OsgoodLimit::parse("many"), InvalidArgument);
  CHECK_THROWS_AS(osgood_classify(GFunction::constant_one(), OsgoodLimit::value(20.0)), InvalidArgument);
  CHECK_THROWS_AS(osgood_classify(GFunction::constant_one(), default_osgood_limit(), 999), InvalidArgument);
}

TEST_CASE("Osgood integral closed forms") {
  // g ≡ 1: ∫_e^R dτ/(τ ln τ) = ln ln R.
  const auto one = osgood_classify(GFunction::constant_one(), OsgoodLimit::value(1e300));
  CHECK(std::abs(one.partial_integral - std::log(300.0 * std::log(10.0))) < 1e-10);
  CHECK(std::abs(osgood_integral(GFunction::constant_one(), e, 1e50) - std::log(50.0 * std::log(10.0))) < 1e-10);
  double previous = 0.0;
  for (double lim : {30.0, 1e3, 1e10, 1e100, 1e300}) {
    const auto v = osgood_classify(GFunction::power(0.1), OsgoodLimit::value(lim));
    CHECK(v.partial_integral >= previous);
    CHECK(v.partial_integral >= 0.0);
    previous = v.partial_integral;
  }
  // Each flat piece of the spiky g contributes `period` exactly.
  const auto spiky = GFunction::spiky(0.5, 2.0);
  const double w2 = 0.5 * (1 + 4);
  CHECK(std::abs(osgood_integral(spiky, e, std::exp(std::exp(w2))) - 1.0) < 1e-10);
}

TEST_CASE("Osgood classification of the catalog") {
  for (const auto& g : {GFunction::constant_one(), GFunction::iterated_log(), GFunction::spiky()}) {
    const auto v = osgood_classify(g);
    CHECK_MESSAGE(v.classification == OsgoodClass::diverges, g.describe());
  }
  for (double eps : {0.05, 0.1, 0.5}) {
    CHECK(osgood_classify(GFunction::power(eps)).classification == OsgoodClass::converges);
  }
  CHECK(osgood_classify(GFunction::power_log(0.5)).classification == OsgoodClass::converges);
  // Too few complete windows to decide.
  CHECK(osgood_classify(GFunction::constant_one(), OsgoodLimit::value(1e6)).classification ==
        OsgoodClass::inconclusive);
  CHECK_THROWS_AS(osgood_classify(GFunction::tabulated({{0.0, 3.0}, {5.0, 2.0}})), InvalidArgument);
}
