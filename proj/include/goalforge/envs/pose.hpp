#pragma once

#include <array>
#include <vector>

#include "goalforge/core/env.hpp"
#include "goalforge/math/quaternion.hpp"

namespace goalforge {

enum class VariantKind { rotate_z, rotate_parallel, rotate_xyz, full, pen_rotate, pen_full };

struct VariantConfig {
  VariantKind kind;
  bool includes_position;
  bool ignore_z_rotation;

  static VariantConfig for_kind(VariantKind kind);
  void validate() const;
};

// In-hand reorientation analog: the object is actuated directly by a damped
// torque (plus a damped force on position in the full variants) instead of
// through finger joints. Goals are target orientations, optionally paired
// with a target position.
class PoseEnv final : public GoalEnv {
 public:
  static constexpr double kTorqueScale = 10.0;
  static constexpr double kRotDamping = 2.5;
  static constexpr double kForceScale = 2.5;
  static constexpr double kLinDamping = 10.0;
  static constexpr double kHalfExtent = 0.15;
  static constexpr double kGoalHalfExtent = 0.1;
  static constexpr double kRotationThreshold = 0.1;
  static constexpr double kBlockPositionThreshold = 0.01;
  static constexpr double kPenPositionThreshold = 0.05;

  PoseEnv(VariantConfig variant, RewardMode mode);

  static EnvSpec make_spec(const VariantConfig& variant, RewardMode mode);

  const VariantConfig& variant() const { return variant_; }
  Quaternion orientation() const { return orientation_; }

  // Full goal vector for the variant: [qw qx qy qz] or [px py pz qw qx qy qz].
  std::vector<double> sample_goal(std::mt19937_64& rng) const;

 protected:
  void do_reset(std::mt19937_64& rng) override;
  void substep(std::span<const double> action, double dt) override;
  GoalObservation observe() const override;

 private:
  VariantConfig variant_;
  Quaternion orientation_ = Quaternion::identity();
  std::array<double, 3> angular_vel_{};
  std::array<double, 3> position_{};
  std::array<double, 3> linear_vel_{};
  std::vector<double> goal_;
};

}  // namespace goalforge
