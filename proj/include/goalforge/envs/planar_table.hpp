#pragma once

#include <array>

#include "goalforge/core/env.hpp"

namespace goalforge {

struct Rect2 {
  double min_x, min_y, max_x, max_y;

  std::array<double, 2> clamp(std::array<double, 2> p) const;
  bool contains(std::array<double, 2> p, double tol = 0.0) const;
  // Distance from p to the nearest point of the rectangle (0 inside).
  double distance_to(std::array<double, 2> p) const;
};

// Shared dynamics for the push and slide tasks: a velocity-controlled
// circular mover and a free disc that it displaces on contact. The disc
// decelerates under dry friction (constant decel, closed-form stopping
// distance v^2 / (2a)). Goals are planar, embedded as 3-vectors with z = 0.
struct PlanarTableConfig {
  Rect2 table;
  Rect2 mover_workspace;
  Rect2 goal_region;
  std::array<double, 2> mover_start;
  std::array<double, 2> object_start;
  double mover_radius;
  double object_radius;
  double max_speed;
  double friction_decel;
  double min_goal_offset;  // goal sampled at least this far from the object start
};

PlanarTableConfig planar_push_config();
PlanarTableConfig slide_config();

class PlanarTableEnv final : public GoalEnv {
 public:
  static constexpr double kPositionThreshold = 0.05;

  PlanarTableEnv(const PlanarTableConfig& config, RewardMode mode);

  static EnvSpec make_spec(RewardMode mode);

  const PlanarTableConfig& config() const { return config_; }
  std::array<double, 2> mover_position() const { return mover_; }
  std::array<double, 2> object_position() const { return object_; }
  std::array<double, 2> object_velocity() const { return object_vel_; }

  std::array<double, 2> sample_goal(std::mt19937_64& rng) const;

 protected:
  void do_reset(std::mt19937_64& rng) override;
  void substep(std::span<const double> action, double dt) override;
  GoalObservation observe() const override;

 private:
  PlanarTableConfig config_;
  std::array<double, 2> mover_{};
  std::array<double, 2> mover_vel_{};
  std::array<double, 2> object_{};
  std::array<double, 2> object_vel_{};
  std::array<double, 2> goal_{};
};

}  // namespace goalforge
