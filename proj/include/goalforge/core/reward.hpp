#pragma once

#include <span>
#include <vector>

#include "goalforge/core/types.hpp"

namespace goalforge {

// Distance between two points of the environment's goal space.
// position spaces: Euclidean distance.
// pose spaces: rotation angle between the quaternion parts, plus the
// Euclidean distance of the position parts when the goal carries one
// (goal_dim == 7); pose_ignore_z uses the z-quotient rotation angle.
double goal_distance(std::span<const double> achieved, std::span<const double> desired,
                     const EnvSpec& spec);

// Success test at the spec's thresholds (strict <). Position is only
// checked when a position threshold is configured.
bool is_success(std::span<const double> achieved, std::span<const double> desired,
                const EnvSpec& spec);

// Exposed reward function: pure in its arguments, so replayed transitions
// can be re-scored under substituted goals. Sparse: 0 on success else -1.
// Dense: negative goal distance.
double compute_reward(std::span<const double> achieved, std::span<const double> desired,
                      const Info& info, const EnvSpec& spec);

enum class ObsKey { observation, desired_goal, achieved_goal };

// Concatenates the selected fields in the given order. Keys must be
// non-empty and free of duplicates.
std::vector<double> flatten_observation(const GoalObservation& obs,
                                        std::span<const ObsKey> keys);

}  // namespace goalforge
