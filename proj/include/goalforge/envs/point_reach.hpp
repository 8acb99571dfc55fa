#pragma once

#include <array>

#include "goalforge/core/env.hpp"

namespace goalforge {

// Velocity-controlled point in a cubic workspace; the goal is a position
// inside the box. Action components in [-1, 1] scale to a velocity whose
// norm is capped at kMaxSpeed.
class PointReachEnv final : public GoalEnv {
 public:
  static constexpr double kHalfExtent = 0.2;
  static constexpr double kMaxSpeed = 0.4;
  static constexpr double kPositionThreshold = 0.05;

  explicit PointReachEnv(RewardMode mode);

  static EnvSpec make_spec(RewardMode mode);

 protected:
  void do_reset(std::mt19937_64& rng) override;
  void substep(std::span<const double> action, double dt) override;
  GoalObservation observe() const override;

 private:
  std::array<double, 3> position_{};
  std::array<double, 3> velocity_{};
  std::array<double, 3> goal_{};
};

}  // namespace goalforge
