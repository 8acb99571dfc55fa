#include "goalforge/envs/grasp_place.hpp"

#include <algorithm>
#include <cmath>

namespace goalforge {

EnvSpec GraspPlaceEnv::make_spec(RewardMode mode) {
  EnvSpec spec;
  spec.obs_dim = 17;
  spec.goal_dim = 3;
  spec.action_dim = 4;  // gripper velocity xyz plus grip open/close
  spec.action_low = {-1.0, -1.0, -1.0, -1.0};
  spec.action_high = {1.0, 1.0, 1.0, 1.0};
  spec.position_threshold = kPositionThreshold;
  spec.reward_mode = mode;
  spec.goal_space = GoalSpace::position;
  return spec;
}

GraspPlaceEnv::GraspPlaceEnv(RewardMode mode) : GoalEnv(make_spec(mode)) {}

std::array<double, 3> GraspPlaceEnv::sample_goal(std::mt19937_64& rng,
                                                 std::array<double, 3> object_start) const {
  std::uniform_real_distribution<double> xy(-0.15, 0.15);
  std::uniform_real_distribution<double> air_z(0.1, 0.35);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::array<double, 3> g = {xy(rng), xy(rng), 0.0};
    if (coin(rng) < kAirborneGoalProb) g[2] = air_z(rng);
    const double dx = g[0] - object_start[0];
    const double dy = g[1] - object_start[1];
    const double dz = g[2] - object_start[2];
    if (std::sqrt(dx * dx + dy * dy + dz * dz) >= 0.1) return g;
  }
}

void GraspPlaceEnv::do_reset(std::mt19937_64& rng) {
  gripper_ = {0.0, 0.0, 0.2};
  gripper_vel_ = {0.0, 0.0, 0.0};
  std::uniform_real_distribution<double> xy(-0.15, 0.15);
  object_ = {xy(rng), xy(rng), 0.0};
  object_vz_ = 0.0;
  grip_closed_ = false;
  held_ = false;
  goal_ = sample_goal(rng, object_);
}

void GraspPlaceEnv::substep(std::span<const double> action, double dt) {
  double norm_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    gripper_vel_[i] = kMaxSpeed * action[i];
    norm_sq += gripper_vel_[i] * gripper_vel_[i];
  }
  const double norm = std::sqrt(norm_sq);
  if (norm > kMaxSpeed) {
    for (double& v : gripper_vel_) v *= kMaxSpeed / norm;
  }
  gripper_[0] = std::clamp(gripper_[0] + gripper_vel_[0] * dt, -kHalfExtentXY, kHalfExtentXY);
  gripper_[1] = std::clamp(gripper_[1] + gripper_vel_[1] * dt, -kHalfExtentXY, kHalfExtentXY);
  gripper_[2] = std::clamp(gripper_[2] + gripper_vel_[2] * dt, 0.0, kMaxHeight);

  grip_closed_ = action[3] > 0.0;
  if (!grip_closed_) {
    held_ = false;
  } else if (!held_) {
    const double dx = gripper_[0] - object_[0];
    const double dy = gripper_[1] - object_[1];
    const double dz = gripper_[2] - object_[2];
    if (std::sqrt(dx * dx + dy * dy + dz * dz) <= kGraspRadius) {
      held_ = true;
      object_vz_ = 0.0;
    }
  }

  if (held_) {
    object_ = gripper_;
  } else if (object_[2] > 0.0) {
    object_vz_ -= kGravity * dt;
    object_[2] += object_vz_ * dt;
    if (object_[2] <= 0.0) {
      object_[2] = 0.0;
      object_vz_ = 0.0;
    }
  }
}

GoalObservation GraspPlaceEnv::observe() const {
  GoalObservation obs;
  obs.observation = {gripper_[0],
                     gripper_[1],
                     gripper_[2],
                     object_[0],
                     object_[1],
                     object_[2],
                     object_[0] - gripper_[0],
                     object_[1] - gripper_[1],
                     object_[2] - gripper_[2],
                     grip_closed_ ? 1.0 : 0.0,
                     held_ ? 1.0 : 0.0,
                     gripper_vel_[0],
                     gripper_vel_[1],
                     gripper_vel_[2],
                     held_ ? gripper_vel_[0] : 0.0,
                     held_ ? gripper_vel_[1] : 0.0,
                     held_ ? gripper_vel_[2] : object_vz_};
  obs.achieved_goal = {object_[0], object_[1], object_[2]};
  obs.desired_goal = {goal_[0], goal_[1], goal_[2]};
  return obs;
}

Info GraspPlaceEnv::extra_info() const {
  Info info;
  info["held"] = held_ ? 1.0 : 0.0;
  return info;
}

}  // namespace goalforge
