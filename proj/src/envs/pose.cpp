#include "goalforge/envs/pose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace goalforge {

VariantConfig VariantConfig::for_kind(VariantKind kind) {
  VariantConfig v;
  v.kind = kind;
  v.includes_position = kind == VariantKind::full || kind == VariantKind::pen_full;
  v.ignore_z_rotation = kind == VariantKind::pen_rotate || kind == VariantKind::pen_full;
  return v;
}

void VariantConfig::validate() const {
  const bool pen = kind == VariantKind::pen_rotate || kind == VariantKind::pen_full;
  if (pen && !ignore_z_rotation) {
    throw std::invalid_argument("pen variants must ignore z rotation");
  }
  const bool full = kind == VariantKind::full || kind == VariantKind::pen_full;
  if (full != includes_position) {
    throw std::invalid_argument("position goals apply exactly to the full variants");
  }
}

EnvSpec PoseEnv::make_spec(const VariantConfig& variant, RewardMode mode) {
  variant.validate();
  EnvSpec spec;
  spec.obs_dim = variant.includes_position ? 13 : 7;
  spec.goal_dim = variant.includes_position ? 7 : 4;
  spec.action_dim = variant.includes_position ? 6 : 3;
  spec.action_low.assign(spec.action_dim, -1.0);
  spec.action_high.assign(spec.action_dim, 1.0);
  spec.rotation_threshold = kRotationThreshold;
  if (variant.includes_position) {
    spec.position_threshold = variant.ignore_z_rotation ? kPenPositionThreshold
                                                        : kBlockPositionThreshold;
  }
  spec.reward_mode = mode;
  spec.goal_space = variant.ignore_z_rotation ? GoalSpace::pose_ignore_z : GoalSpace::pose;
  return spec;
}

PoseEnv::PoseEnv(VariantConfig variant, RewardMode mode)
    : GoalEnv(make_spec(variant, mode)), variant_(variant) {}

std::vector<double> PoseEnv::sample_goal(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  Quaternion q;
  switch (variant_.kind) {
    case VariantKind::rotate_z:
      q = Quaternion::rot_z(angle(rng));
      break;
    case VariantKind::rotate_parallel: {
      // quarter-turn subgroup about x, spun freely about z
      std::uniform_int_distribution<int> quarter(0, 3);
      q = Quaternion::rot_z(angle(rng)) *
          Quaternion::rot_x(quarter(rng) * (std::numbers::pi / 2.0));
      break;
    }
    case VariantKind::rotate_xyz:
    case VariantKind::full:
      q = sample_uniform_quaternion(rng);
      break;
    case VariantKind::pen_rotate:
    case VariantKind::pen_full:
      q = Quaternion::rot_x(angle(rng)) * Quaternion::rot_y(angle(rng));
      break;
  }
  std::vector<double> goal;
  if (variant_.includes_position) {
    std::uniform_real_distribution<double> box(-kGoalHalfExtent, kGoalHalfExtent);
    goal = {box(rng), box(rng), box(rng)};
  }
  goal.insert(goal.end(), {q.w, q.x, q.y, q.z});
  return goal;
}

void PoseEnv::do_reset(std::mt19937_64& rng) {
  orientation_ = Quaternion::identity();
  angular_vel_ = {0.0, 0.0, 0.0};
  position_ = {0.0, 0.0, 0.0};
  linear_vel_ = {0.0, 0.0, 0.0};
  goal_ = sample_goal(rng);
}

void PoseEnv::substep(std::span<const double> action, double dt) {
  for (int i = 0; i < 3; ++i) {
    angular_vel_[i] += (kTorqueScale * action[i] - kRotDamping * angular_vel_[i]) * dt;
  }
  orientation_ = integrate_orientation(
      orientation_, Eigen::Vector3d(angular_vel_[0], angular_vel_[1], angular_vel_[2]), dt);

  if (variant_.includes_position) {
    for (int i = 0; i < 3; ++i) {
      linear_vel_[i] += (kForceScale * action[3 + i] - kLinDamping * linear_vel_[i]) * dt;
      const double moved = position_[i] + linear_vel_[i] * dt;
      position_[i] = std::clamp(moved, -kHalfExtent, kHalfExtent);
      if (position_[i] != moved) linear_vel_[i] = 0.0;
    }
  }
}

GoalObservation PoseEnv::observe() const {
  GoalObservation obs;
  obs.observation = {orientation_.w, orientation_.x, orientation_.y, orientation_.z,
                     angular_vel_[0], angular_vel_[1], angular_vel_[2]};
  if (variant_.includes_position) {
    obs.observation.insert(obs.observation.end(),
                           {position_[0], position_[1], position_[2],
                            linear_vel_[0], linear_vel_[1], linear_vel_[2]});
    obs.achieved_goal = {position_[0], position_[1], position_[2],
                         orientation_.w, orientation_.x, orientation_.y, orientation_.z};
  } else {
    obs.achieved_goal = {orientation_.w, orientation_.x, orientation_.y, orientation_.z};
  }
  obs.desired_goal = goal_;
  return obs;
}

}  // namespace goalforge
