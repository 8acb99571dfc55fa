#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>

#include "goalforge/core/reward.hpp"
#include "goalforge/core/types.hpp"

namespace goalforge {

// Base class for goal-conditioned environments. Episodes have a fixed
// horizon: done is reported exactly at the final step, never early, and
// stepping past it throws. Each agent step integrates kSubsteps physics
// substeps of kSubstepDt seconds with the action held constant.
class GoalEnv {
 public:
  static constexpr int kSubsteps = 20;
  static constexpr double kSubstepDt = 0.002;

  virtual ~GoalEnv() = default;

  const EnvSpec& spec() const { return spec_; }

  // Starts a new episode. With a seed the episode is reproducible; without
  // one the env continues its internal stream.
  GoalObservation reset(std::optional<std::uint64_t> seed = std::nullopt);

  // Advances one agent step. Actions are clipped to the bounds before use.
  // Throws std::invalid_argument on a wrong-length action and
  // std::logic_error when called before reset or after the horizon.
  StepResult step(std::span<const double> action);

  int step_count() const { return step_count_; }

  double reward_for(std::span<const double> achieved, std::span<const double> desired,
                    const Info& info) const {
    return compute_reward(achieved, desired, info, spec_);
  }

 protected:
  explicit GoalEnv(EnvSpec spec);

  // Places the env in its start state and draws a fresh desired goal.
  virtual void do_reset(std::mt19937_64& rng) = 0;
  // One physics substep under a clipped, held action.
  virtual void substep(std::span<const double> action, double dt) = 0;
  virtual GoalObservation observe() const = 0;
  // Per-step diagnostics merged into StepResult::info next to is_success.
  virtual Info extra_info() const { return {}; }

 private:
  EnvSpec spec_;
  std::mt19937_64 rng_{0x9e3779b97f4a7c15ULL};
  int step_count_ = 0;
  bool episode_active_ = false;
};

}  // namespace goalforge
