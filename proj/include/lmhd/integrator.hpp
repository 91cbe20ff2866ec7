#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lmhd/mhd.hpp"

namespace lmhd {

struct StepperConfig {
  /// Fixed step; std::nullopt selects the adaptive CFL step.
  std::optional<double> dt;
  double cfl_number = 0.5;
  /// Cap on the adaptive step (also used when the flow is at rest).
  double dt_max = 1e-2;
  double t_end = 0.0;
  long max_steps = 10'000'000;
  /// Observer cadence in steps; the initial and final states are always observed.
  int observe_every = 1;

  void validate() const;
};

/// Non-finite coefficient after a step.
class BlowUp : public std::runtime_error {
 public:
  BlowUp(double time, long step);
  double time() const { return time_; }
  long step() const { return step_; }

 private:
  double time_;
  long step_;
};

/// Integrating-factor RK4 (Lawson). The linear dissipation of every mode is
/// applied exactly through exp(-ν m₁(|k|)² dt) and exp(-η m₂(|k|)² dt).
class IntegratingFactorStepper {
 public:
  IntegratingFactorStepper(const Grid& grid, SystemParams params);

  SolutionPair step(const SolutionPair& state, double dt);
  const SystemParams& params() const { return params_; }

 private:
  void update_factors(double dt);
  Tendency nonlinear(const SolutionPair& state) const;

  Grid grid_;
  SystemParams params_;
  std::vector<double> rate_u_;  // ν m₁² per flat index
  std::vector<double> rate_b_;  // η m₂² per flat index
  double cached_dt_ = -1.0;
  std::vector<double> full_u_, half_u_, full_b_, half_b_;
};

SolutionPair step(const SolutionPair& state, const SystemParams& params, double dt);

/// Largest step with dt · max(‖u‖∞, ‖b‖∞) · k_max <= cfl, capped by dt_max.
double cfl_time_step(const SolutionPair& state, const StepperConfig& config);

/// Receives every observed state; must not retain references past the call.
using Observer = std::function<void(double time, const SolutionPair& state)>;

struct RunOutcome {
  SolutionPair state;
  long steps = 0;
  double wall_seconds = 0.0;
};

/// Steps until t_end or max_steps. Deterministic for identical inputs.
/// Throws BlowUp when the state stops being finite.
RunOutcome run(const SolutionPair& state0, const SystemParams& params, const StepperConfig& config,
               const Observer& observer = {});

}  // namespace lmhd
