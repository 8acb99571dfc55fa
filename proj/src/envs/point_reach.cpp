#include "goalforge/envs/point_reach.hpp"

#include <algorithm>
#include <cmath>

namespace goalforge {

EnvSpec PointReachEnv::make_spec(RewardMode mode) {
  EnvSpec spec;
  spec.obs_dim = 6;
  spec.goal_dim = 3;
  spec.action_dim = 3;
  spec.action_low = {-1.0, -1.0, -1.0};
  spec.action_high = {1.0, 1.0, 1.0};
  spec.position_threshold = kPositionThreshold;
  spec.reward_mode = mode;
  spec.goal_space = GoalSpace::position;
  return spec;
}

PointReachEnv::PointReachEnv(RewardMode mode) : GoalEnv(make_spec(mode)) {}

void PointReachEnv::do_reset(std::mt19937_64& rng) {
  position_ = {0.0, 0.0, 0.0};
  velocity_ = {0.0, 0.0, 0.0};
  std::uniform_real_distribution<double> box(-kHalfExtent, kHalfExtent);
  for (double& g : goal_) g = box(rng);
}

void PointReachEnv::substep(std::span<const double> action, double dt) {
  double norm_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    velocity_[i] = kMaxSpeed * action[i];
    norm_sq += velocity_[i] * velocity_[i];
  }
  const double norm = std::sqrt(norm_sq);
  if (norm > kMaxSpeed) {
    for (double& v : velocity_) v *= kMaxSpeed / norm;
  }
  for (int i = 0; i < 3; ++i) {
    position_[i] = std::clamp(position_[i] + velocity_[i] * dt, -kHalfExtent, kHalfExtent);
  }
}

GoalObservation PointReachEnv::observe() const {
  GoalObservation obs;
  obs.observation = {position_[0], position_[1], position_[2],
                     velocity_[0], velocity_[1], velocity_[2]};
  obs.achieved_goal = {position_[0], position_[1], position_[2]};
  obs.desired_goal = {goal_[0], goal_[1], goal_[2]};
  return obs;
}

}  // namespace goalforge
