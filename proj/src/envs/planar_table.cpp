#include "goalforge/envs/planar_table.hpp"

#include <algorithm>
#include <cmath>

namespace goalforge {

namespace {

double norm2(std::array<double, 2> v) { return std::sqrt(v[0] * v[0] + v[1] * v[1]); }

}  // namespace

std::array<double, 2> Rect2::clamp(std::array<double, 2> p) const {
  return {std::clamp(p[0], min_x, max_x), std::clamp(p[1], min_y, max_y)};
}

bool Rect2::contains(std::array<double, 2> p, double tol) const {
  return p[0] >= min_x - tol && p[0] <= max_x + tol && p[1] >= min_y - tol && p[1] <= max_y + tol;
}

double Rect2::distance_to(std::array<double, 2> p) const {
  const std::array<double, 2> nearest = clamp(p);
  return norm2({p[0] - nearest[0], p[1] - nearest[1]});
}

PlanarTableConfig planar_push_config() {
  PlanarTableConfig c;
  c.table = {-0.2, -0.2, 0.2, 0.2};
  c.mover_workspace = c.table;
  c.goal_region = {-0.15, -0.15, 0.15, 0.15};
  c.mover_start = {-0.1, 0.0};
  c.object_start = {0.0, 0.0};
  c.mover_radius = 0.02;
  c.object_radius = 0.04;
  c.max_speed = 0.4;
  c.friction_decel = 1.0;
  c.min_goal_offset = 0.1;
  return c;
}

PlanarTableConfig slide_config() {
  PlanarTableConfig c;
  c.table = {-0.25, -0.35, 1.25, 0.35};
  // Workspace kept short of the goal band so the puck must be sent sliding.
  c.mover_workspace = {-0.25, -0.25, 0.1, 0.25};
  c.goal_region = {0.6, -0.25, 1.15, 0.25};
  c.mover_start = {-0.15, 0.0};
  c.object_start = {0.0, 0.0};
  c.mover_radius = 0.02;
  c.object_radius = 0.04;
  c.max_speed = 1.0;
  c.friction_decel = 0.25;
  c.min_goal_offset = 0.0;
  return c;
}

EnvSpec PlanarTableEnv::make_spec(RewardMode mode) {
  EnvSpec spec;
  spec.obs_dim = 10;
  spec.goal_dim = 3;
  spec.action_dim = 3;  // third channel is the locked gripper, ignored
  spec.action_low = {-1.0, -1.0, -1.0};
  spec.action_high = {1.0, 1.0, 1.0};
  spec.position_threshold = kPositionThreshold;
  spec.reward_mode = mode;
  spec.goal_space = GoalSpace::position;
  return spec;
}

PlanarTableEnv::PlanarTableEnv(const PlanarTableConfig& config, RewardMode mode)
    : GoalEnv(make_spec(mode)), config_(config) {}

std::array<double, 2> PlanarTableEnv::sample_goal(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> gx(config_.goal_region.min_x, config_.goal_region.max_x);
  std::uniform_real_distribution<double> gy(config_.goal_region.min_y, config_.goal_region.max_y);
  while (true) {
    const std::array<double, 2> g = {gx(rng), gy(rng)};
    const std::array<double, 2> d = {g[0] - config_.object_start[0],
                                     g[1] - config_.object_start[1]};
    if (norm2(d) >= config_.min_goal_offset) return g;
  }
}

void PlanarTableEnv::do_reset(std::mt19937_64& rng) {
  mover_ = config_.mover_start;
  mover_vel_ = {0.0, 0.0};
  object_ = config_.object_start;
  object_vel_ = {0.0, 0.0};
  goal_ = sample_goal(rng);
}

void PlanarTableEnv::substep(std::span<const double> action, double dt) {
  mover_vel_ = {config_.max_speed * action[0], config_.max_speed * action[1]};
  const double speed = norm2(mover_vel_);
  if (speed > config_.max_speed) {
    mover_vel_[0] *= config_.max_speed / speed;
    mover_vel_[1] *= config_.max_speed / speed;
  }
  mover_ = config_.mover_workspace.clamp(
      {mover_[0] + mover_vel_[0] * dt, mover_[1] + mover_vel_[1] * dt});

  const double object_speed = norm2(object_vel_);
  if (object_speed > 0.0) {
    const double slowed = std::max(0.0, object_speed - config_.friction_decel * dt);
    object_vel_[0] *= slowed / object_speed;
    object_vel_[1] *= slowed / object_speed;
  }
  const std::array<double, 2> free_target = {object_[0] + object_vel_[0] * dt,
                                             object_[1] + object_vel_[1] * dt};
  object_ = config_.table.clamp(free_target);
  for (int i = 0; i < 2; ++i) {
    if (object_[i] != free_target[i]) object_vel_[i] = 0.0;  // hit a table wall
  }

  const double contact = config_.mover_radius + config_.object_radius;
  std::array<double, 2> gap = {object_[0] - mover_[0], object_[1] - mover_[1]};
  double dist = norm2(gap);
  if (dist < contact) {
    std::array<double, 2> n;
    if (dist > 1e-12) {
      n = {gap[0] / dist, gap[1] / dist};
    } else if (norm2(mover_vel_) > 1e-12) {
      const double ms = norm2(mover_vel_);
      n = {mover_vel_[0] / ms, mover_vel_[1] / ms};
    } else {
      n = {1.0, 0.0};
    }
    const std::array<double, 2> pre_contact = object_;
    object_ = config_.table.clamp({mover_[0] + n[0] * contact, mover_[1] + n[1] * contact});
    object_vel_[0] += (object_[0] - pre_contact[0]) / dt;
    object_vel_[1] += (object_[1] - pre_contact[1]) / dt;
    gap = {object_[0] - mover_[0], object_[1] - mover_[1]};
    dist = norm2(gap);
    if (dist < contact - 1e-12) {
      // object pinned at a table wall; the mover yields instead
      if (dist > 1e-12) n = {gap[0] / dist, gap[1] / dist};
      mover_ = config_.mover_workspace.clamp(
          {object_[0] - n[0] * contact, object_[1] - n[1] * contact});
    }
  }
}

GoalObservation PlanarTableEnv::observe() const {
  GoalObservation obs;
  obs.observation = {mover_[0],      mover_[1],      object_[0],     object_[1],
                     object_[0] - mover_[0], object_[1] - mover_[1],
                     mover_vel_[0],  mover_vel_[1],  object_vel_[0], object_vel_[1]};
  obs.achieved_goal = {object_[0], object_[1], 0.0};
  obs.desired_goal = {goal_[0], goal_[1], 0.0};
  return obs;
}

}  // namespace goalforge
