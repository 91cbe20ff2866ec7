#include <doctest.h>

#include <cmath>
#include <random>

#include "lmhd/errors.hpp"
#include "lmhd/initial_conditions.hpp"
#include "lmhd/integrator.hpp"
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

double state_diff(const SolutionPair& a, const SolutionPair& b) {
  return std::max(max_abs_diff(a.u, b.u), max_abs_diff(a.b, b.b));
}

bool identical(const SolutionPair& a, const SolutionPair& b) {
  return state_diff(a, b) == 0.0 && a.time == b.time;
}
}  // namespace

TEST_CASE("single mode decays exactly with the nonlinearity off") {
  const Grid g(2, 16);
  SolutionPair s = zero_state(g);
  s.u[1] = forward_transform(g, sample(g, [](auto x) { return std::cos(x[0]); }));
  auto p = params(1.0, 0.0);
  p.nonlinear = false;
  for (double dt : {1e-3, 0.01, 0.1, 0.25}) {
    StepperConfig c;
    c.dt = dt;
    c.t_end = 1.0;
    const auto out = run(s, p, c).state;
    CHECK(std::abs(out.u[1].at({1, 0, 0}).real() - 0.5 * std::exp(-1.0)) <= 1e-13);
    CHECK(out.time == 1.0);
  }
}

TEST_CASE("linear decay over random modes, exponents and g") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> kd(-7, 7);
  std::uniform_real_distribution<double> alpha(1.0, 3.0);
  std::uniform_int_distribution<int> pick(0, 4);
  const std::vector<GFunction> gs{GFunction::constant_one(), GFunction::power_log(), GFunction::iterated_log(),
                                  GFunction::power(0.1), GFunction::spiky()};
  const Grid g(2, 16);
  for (int trial = 0; trial < 20; ++trial) {
    WaveVector k{kd(rng), kd(rng), 0};
    if (k[0] == 0 && k[1] == 0) k[0] = 1;
    auto p = params(0.05, 0.0, alpha(rng), gs[pick(rng)]);
    p.nonlinear = false;
    const double m = symbol(p.diss_u, std::hypot(k[0], k[1]));
    SolutionPair s = zero_state(g);
    // Amplitude on e ⟂ k.
    const double norm = std::hypot(k[0], k[1]);
    s.u[0].at(k) = -k[1] / norm;
    s.u[1].at(k) = k[0] / norm;
    s.u[0].at({-k[0], -k[1], 0}) = -k[1] / norm;
    s.u[1].at({-k[0], -k[1], 0}) = k[0] / norm;
    for (double dt : {0.01, 0.05}) {
      StepperConfig c;
      c.dt = dt;
      c.t_end = 0.5;
      const auto out = run(s, p, c).state;
      const double expected = std::exp(-0.05 * m * m * 0.5);
      CHECK(std::abs(out.u[1].at(k).real() - expected * k[0] / norm) <= 1e-10);
      CHECK(std::abs(out.u[0].at(k).real() + expected * k[1] / norm) <= 1e-10);
    }
  }
}

TEST_CASE("no dissipation and no nonlinearity leaves the state unchanged") {
  const Grid g(2, 16);
  const SolutionPair s{random_solenoidal(g, 1, 5), random_solenoidal(g, 2, 5), 0.0};
  auto p = params(0.0, 0.0);
  p.nonlinear = false;
  const auto out = step(s, p, 0.1);
  CHECK(state_diff(out, s) == 0.0);
  CHECK(out.time == doctest::Approx(0.1));
  CHECK_THROWS_AS(step(s, p, 0.0), InvalidArgument);
}

TEST_CASE("run bookkeeping") {
  const Grid g(2, 16);
  const auto s0 = initial_condition("orszag_tang_2d", {}, g);
  const auto p = params(0.1, 0.0);

  StepperConfig none;
  none.dt = 1e-3;
  none.t_end = 0.0;
  int calls = 0;
  const auto out = run(s0, p, none, [&](double, const SolutionPair&) { ++calls; });
  CHECK(identical(out.state, s0));
  CHECK(out.steps == 0);
  CHECK(calls == 1);

  StepperConfig c;
  c.dt = 1e-2;
  c.t_end = 0.105;
  c.observe_every = 3;
  std::vector<double> times;
  const auto r = run(s0, p, c, [&](double t, const SolutionPair&) { times.push_back(t); });
  CHECK(r.steps == 11);
  CHECK(r.state.time == 0.105);
  CHECK(times == std::vector<double>{0.0, 0.03, 0.06, 0.09, 0.105});

  StepperConfig capped = c;
  capped.max_steps = 4;
  CHECK(run(s0, p, capped).steps == 4);

  StepperConfig bad = c;
  bad.observe_every = 0;
  CHECK_THROWS_AS(run(s0, p, bad), InvalidArgument);
}

TEST_CASE("runs are deterministic and observers do not perturb them") {
  const Grid g(2, 32);
  const auto s0 = initial_condition("orszag_tang_2d", {}, g);
  const auto p = params(0.05, 0.0);
  StepperConfig c;
  c.dt = 2e-3;
  c.t_end = 0.05;
  std::vector<SolutionPair> seen_a, seen_b;
  const auto a = run(s0, p, c, [&](double, const SolutionPair& s) { seen_a.push_back(s); });
  const auto b = run(s0, p, c, [&](double, const SolutionPair& s) { seen_b.push_back(s); });
  const auto quiet = run(s0, p, c);
  CHECK(identical(a.state, b.state));
  CHECK(identical(a.state, quiet.state));
  REQUIRE(seen_a.size() == seen_b.size());
  for (std::size_t i = 0; i < seen_a.size(); ++i) CHECK(identical(seen_a[i], seen_b[i]));
}

TEST_CASE("steps keep the fields solenoidal") {
  const Grid g(3, 16);
  const SolutionPair s0{random_solenoidal(g, 8, 5), random_solenoidal(g, 9, 5), 0.0};
  StepperConfig c;
  c.dt = 1e-3;
  c.t_end = 5e-3;
  const auto out = run(s0, params(0.1, 0.0, 2.5), c).state;
  CHECK(solenoidal_defect(out.u) <= kSolenoidalTolerance);
  CHECK(solenoidal_defect(out.b) <= kSolenoidalTolerance);
}

TEST_CASE("adaptive steps respect the CFL bound") {
  const Grid g(2, 32);
  const auto s0 = initial_condition("orszag_tang_2d", {}, g);
  StepperConfig c;
  c.cfl_number = 0.4;
  c.dt_max = 0.05;
  c.t_end = 0.2;
  double previous = 0.0;
  SolutionPair last = s0;
  bool ok = true;
  run(s0, params(0.05, 0.0), c, [&](double t, const SolutionPair& s) {
    if (t > 0.0) {
      const double speed = std::max(linf_norm(last.u), linf_norm(last.b));
      ok = ok && (t - previous) * speed * max_retained_wavenumber(g) <= c.cfl_number * (1 + 1e-12);
    }
    previous = t;
    last = s;
  });
  CHECK(ok);
  CHECK(cfl_time_step(zero_state(g), c) == c.dt_max);
  const double expected = 0.4 / (std::max(linf_norm(s0.u), linf_norm(s0.b)) * max_retained_wavenumber(g));
  CHECK(cfl_time_step(s0, c) == doctest::Approx(std::min(expected, 0.05)));
}

TEST_CASE("non-finite states raise the blow-up signal") {
  const Grid g(2, 16);
  auto s0 = initial_condition("orszag_tang_2d", {}, g);
  s0.u[0].at({1, 1, 0}) = Complex(NAN, 0.0);
  StepperConfig c;
  c.dt = 1e-3;
  c.t_end = 0.01;
  try {
    run(s0, params(0.1, 0.0), c);
    FAIL("expected BlowUp");
  } catch (const BlowUp& e) {
    CHECK(e.time() == doctest::Approx(1e-3));
    CHECK(e.step() == 1);
  }
}

TEST_CASE("fourth order in time on a small grid") {
  const Grid g(2, 16);
  const auto s0 = initial_condition("orszag_tang_2d", {}, g);
  const auto p = params(0.01, 0.0, 1.0);
  std::vector<SolutionPair> out;
  for (double dt : {0.02, 0.01, 0.005}) {
    StepperConfig c;
    c.dt = dt;
    c.t_end = 0.4;
    out.push_back(run(s0, p, c).state);
  }
  const double order = std::log2(state_diff(out[0], out[1]) / state_diff(out[1], out[2]));
  CHECK(order >= 3.8);
}

TEST_CASE("inviscid energy is conserved") {
  const Grid g(2, 32);
  const auto s0 = initial_condition("orszag_tang_2d", {}, g);
  StepperConfig c;
  c.dt = 1e-3;
  c.t_end = 0.2;
  const auto out = run(s0, params(0.0, 0.0), c).state;
  auto energy = [](const SolutionPair& s) { return 0.5 * (std::pow(l2_norm(s.u), 2) + std::pow(l2_norm(s.b), 2)); };
  CHECK(std::abs(energy(out) - energy(s0)) <= 1e-8 * energy(s0));
}
