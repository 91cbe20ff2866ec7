#include "lmhd/integrator.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "lmhd/errors.hpp"
#include "lmhd/spectral.hpp"

namespace lmhd {

void StepperConfig::validate() const {
  if (dt) detail::require(*dt > 0.0 && std::isfinite(*dt), "dt must be > 0");
  detail::require(cfl_number > 0.0 && cfl_number <= 1.0, "cfl_number must be in (0, 1]");
  detail::require(dt_max > 0.0, "dt_max must be > 0");
  detail::require(t_end >= 0.0 && std::isfinite(t_end), "t_end must be >= 0");
  detail::require(max_steps >= 0, "max_steps must be >= 0");
  detail::require(observe_every >= 1, "observer cadence must be >= 1");
}

BlowUp::BlowUp(double time, long step)
    : std::runtime_error("non-finite state at t = " + std::to_string(time) + " (step " + std::to_string(step) + ")"),
      time_(time),
      step_(step) {}

IntegratingFactorStepper::IntegratingFactorStepper(const Grid& grid, SystemParams params)
    : grid_(grid), params_(std::move(params)) {
  params_.validate();
  const auto table_u = symbol_table(grid_, params_.diss_u);
  const auto table_b = symbol_table(grid_, params_.diss_b);
  rate_u_.resize(grid_.size());
  rate_b_.resize(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const auto k2 = static_cast<std::size_t>(grid_.radius_squared(i));
    rate_u_[i] = params_.diss_u.coefficient * table_u[k2] * table_u[k2];
    rate_b_[i] = params_.diss_b.coefficient * table_b[k2] * table_b[k2];
  }
}

void IntegratingFactorStepper::update_factors(double dt) {
  if (dt == cached_dt_) return;
  const std::size_t n = grid_.size();
  full_u_.resize(n);
  half_u_.resize(n);
  full_b_.resize(n);
  half_b_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    full_u_[i] = std::exp(-rate_u_[i] * dt);
    half_u_[i] = std::exp(-rate_u_[i] * 0.5 * dt);
    full_b_[i] = std::exp(-rate_b_[i] * dt);
    half_b_[i] = std::exp(-rate_b_[i] * 0.5 * dt);
  }
  cached_dt_ = dt;
}

Tendency IntegratingFactorStepper::nonlinear(const SolutionPair& state) const {
  if (params_.nonlinear) return nonlinear_tendency(state);
  return {VectorField(grid_), VectorField(grid_)};
}

namespace {

// out = factor ⊙ (a + c·b) applied componentwise.
VectorField combine(const std::vector<double>& factor, const VectorField& a, double c, const VectorField* b) {
  VectorField out = a;
  for (int comp = 0; comp < a.dim(); ++comp) {
    auto dst = out[comp].coeffs();
    const auto src_b = b ? (*b)[comp].coeffs() : std::span<const Complex>{};
    for (std::size_t i = 0; i < dst.size(); ++i) {
      Complex value = dst[i];
      if (b) value += c * src_b[i];
      dst[i] = factor[i] * value;
    }
  }
  return out;
}

// E u + dt/6 (E k1 + 2 H k2 + 2 H k3 + k4).
VectorField rk4_update(const std::vector<double>& full, const std::vector<double>& half, const VectorField& u,
                       const VectorField& k1, const VectorField& k2, const VectorField& k3, const VectorField& k4,
                       double dt) {
  VectorField out = u;
  for (int comp = 0; comp < u.dim(); ++comp) {
    auto dst = out[comp].coeffs();
    const auto a = k1[comp].coeffs();
    const auto b = k2[comp].coeffs();
    const auto c = k3[comp].coeffs();
    const auto d = k4[comp].coeffs();
    for (std::size_t i = 0; i < dst.size(); ++i) {
      dst[i] = full[i] * dst[i] + dt / 6.0 * (full[i] * a[i] + 2.0 * half[i] * (b[i] + c[i]) + d[i]);
    }
  }
  return out;
}

}  // namespace

SolutionPair IntegratingFactorStepper::step(const SolutionPair& state, double dt) {
  detail::require(dt > 0.0 && std::isfinite(dt), "dt must be > 0");
  detail::require(state.grid() == grid_, "state grid does not match stepper grid");
  update_factors(dt);

  const Tendency n1 = nonlinear(state);
  SolutionPair s2{combine(half_u_, state.u, 0.5 * dt, &n1.du), combine(half_b_, state.b, 0.5 * dt, &n1.db),
                  state.time + 0.5 * dt};
  const Tendency n2 = nonlinear(s2);
  SolutionPair s3{combine(half_u_, state.u, 0.0, nullptr), combine(half_b_, state.b, 0.0, nullptr), s2.time};
  s3.u += 0.5 * dt * n2.du;
  s3.b += 0.5 * dt * n2.db;
  const Tendency n3 = nonlinear(s3);
  SolutionPair s4{combine(full_u_, state.u, 0.0, nullptr), combine(full_b_, state.b, 0.0, nullptr), state.time + dt};
  s4.u += dt * combine(half_u_, n3.du, 0.0, nullptr);
  s4.b += dt * combine(half_b_, n3.db, 0.0, nullptr);
  const Tendency n4 = nonlinear(s4);

  SolutionPair next{rk4_update(full_u_, half_u_, state.u, n1.du, n2.du, n3.du, n4.du, dt),
                    rk4_update(full_b_, half_b_, state.b, n1.db, n2.db, n3.db, n4.db, dt), state.time + dt};
  return next;
}

SolutionPair step(const SolutionPair& state, const SystemParams& params, double dt) {
  IntegratingFactorStepper stepper(state.grid(), params);
  SolutionPair next = stepper.step(state, dt);
  if (!next.all_finite()) throw BlowUp(next.time, 1);
  return next;
}

double cfl_time_step(const SolutionPair& state, const StepperConfig& config) {
  const double speed = std::max(linf_norm(state.u), linf_norm(state.b));
  const double kmax = max_retained_wavenumber(state.grid());
  if (speed * kmax <= 0.0) return config.dt_max;
  return std::min(config.dt_max, config.cfl_number / (speed * kmax));
}

RunOutcome run(const SolutionPair& state0, const SystemParams& params, const StepperConfig& config,
               const Observer& observer) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  IntegratingFactorStepper stepper(state0.grid(), params);
  RunOutcome outcome{state0, 0, 0.0};
  SolutionPair& state = outcome.state;
  const double t0 = state0.time;
  const double t_end = config.t_end;
  const double eps = 1e-12 * std::max(1.0, std::abs(t_end));
  const double kmax = max_retained_wavenumber(state0.grid());

  if (observer) observer(state.time, state);
  while (state.time < t_end - eps && outcome.steps < config.max_steps) {
    double dt = 0.0;
    double target = 0.0;
    if (config.dt) {
      dt = *config.dt;
      target = t0 + static_cast<double>(outcome.steps + 1) * dt;
    } else {
      dt = cfl_time_step(state, config);
      target = state.time + dt;
    }
    // Fixed steps keep the nominal dt (and its cached factors) except when clipped.
    if (target > t_end - eps) {
      target = t_end;
      dt = target - state.time;
    } else if (!config.dt) {
      dt = target - state.time;
    }
    if (!config.dt) {
      const double speed = std::max(linf_norm(state.u), linf_norm(state.b));
      if (dt * speed * kmax > config.cfl_number * (1.0 + 1e-12)) throw std::logic_error("adaptive step violates CFL");
    }
    state = stepper.step(state, dt);
    state.time = target;
    ++outcome.steps;
    if (!state.all_finite()) throw BlowUp(state.time, outcome.steps);
    const bool last = !(state.time < t_end - eps && outcome.steps < config.max_steps);
    if (observer && (outcome.steps % config.observe_every == 0 || last)) observer(state.time, state);
  }
  outcome.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return outcome;
}

}  // namespace lmhd
