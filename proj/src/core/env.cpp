#include "goalforge/core/env.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace goalforge {

GoalEnv::GoalEnv(EnvSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

GoalObservation GoalEnv::reset(std::optional<std::uint64_t> seed) {
  if (seed) rng_.seed(*seed);
  do_reset(rng_);
  step_count_ = 0;
  episode_active_ = true;
  return observe();
}

StepResult GoalEnv::step(std::span<const double> action) {
  if (!episode_active_) throw std::logic_error("step called before reset");
  if (step_count_ >= spec_.horizon) throw std::logic_error("step called past the episode horizon");
  if (static_cast<int>(action.size()) != spec_.action_dim) {
    throw std::invalid_argument("action length does not match action_dim");
  }
  std::vector<double> clipped(action.begin(), action.end());
  for (int i = 0; i < spec_.action_dim; ++i) {
    clipped[i] = std::clamp(clipped[i], spec_.action_low[i], spec_.action_high[i]);
  }
  for (int s = 0; s < kSubsteps; ++s) substep(clipped, kSubstepDt);
  ++step_count_;

  StepResult result;
  result.obs = observe();
  result.info = extra_info();
  result.info["is_success"] =
      is_success(result.obs.achieved_goal, result.obs.desired_goal, spec_) ? 1.0 : 0.0;
  result.reward =
      compute_reward(result.obs.achieved_goal, result.obs.desired_goal, result.info, spec_);
  result.done = step_count_ == spec_.horizon;
  return result;
}

}  // namespace goalforge
