#pragma once

#include <array>

#include "goalforge/core/env.hpp"

namespace goalforge {

// Pick-and-place: a velocity-controlled gripper point plus a grip channel.
// Closing the grip within kGraspRadius of the object attaches it; while
// held the object tracks the gripper; releasing drops it ballistically to
// the table. Goals lie on the table surface or in the air with equal
// probability.
class GraspPlaceEnv final : public GoalEnv {
 public:
  static constexpr double kHalfExtentXY = 0.2;
  static constexpr double kMaxHeight = 0.4;
  static constexpr double kMaxSpeed = 0.25;
  static constexpr double kGraspRadius = 0.05;
  static constexpr double kGravity = 9.81;
  static constexpr double kPositionThreshold = 0.05;
  static constexpr double kAirborneGoalProb = 0.5;

  explicit GraspPlaceEnv(RewardMode mode);

  static EnvSpec make_spec(RewardMode mode);

  bool held() const { return held_; }
  bool grip_closed() const { return grip_closed_; }

  std::array<double, 3> sample_goal(std::mt19937_64& rng,
                                    std::array<double, 3> object_start) const;

 protected:
  void do_reset(std::mt19937_64& rng) override;
  void substep(std::span<const double> action, double dt) override;
  GoalObservation observe() const override;
  Info extra_info() const override;

 private:
  std::array<double, 3> gripper_{};
  std::array<double, 3> gripper_vel_{};
  std::array<double, 3> object_{};
  double object_vz_ = 0.0;
  bool grip_closed_ = false;
  bool held_ = false;
  std::array<double, 3> goal_{};
};

}  // namespace goalforge
