#include "goalforge/core/reward.hpp"

#include <cmath>
#include <stdexcept>

#include "goalforge/math/quaternion.hpp"

namespace goalforge {

const char* to_string(RewardMode mode) {
  return mode == RewardMode::sparse ? "sparse" : "dense";
}

const char* to_string(GoalSpace space) {
  switch (space) {
    case GoalSpace::position: return "position";
    case GoalSpace::pose: return "pose";
    case GoalSpace::pose_ignore_z: return "pose_ignore_z";
  }
  return "?";
}

void EnvSpec::validate() const {
  if (obs_dim < 1 || goal_dim < 1 || action_dim < 1) {
    throw std::invalid_argument("EnvSpec: dimensions must be positive");
  }
  if (horizon < 1) throw std::invalid_argument("EnvSpec: horizon must be >= 1");
  if (static_cast<int>(action_low.size()) != action_dim ||
      static_cast<int>(action_high.size()) != action_dim) {
    throw std::invalid_argument("EnvSpec: action bound sizes must match action_dim");
  }
  for (int i = 0; i < action_dim; ++i) {
    if (!(action_low[i] < action_high[i])) {
      throw std::invalid_argument("EnvSpec: action_low must be < action_high componentwise");
    }
  }
  if (position_threshold && *position_threshold <= 0.0) {
    throw std::invalid_argument("EnvSpec: position_threshold must be > 0");
  }
  if (rotation_threshold && *rotation_threshold <= 0.0) {
    throw std::invalid_argument("EnvSpec: rotation_threshold must be > 0");
  }
  if (goal_space == GoalSpace::position) {
    if (!position_threshold) throw std::invalid_argument("EnvSpec: position space needs a position threshold");
  } else {
    if (!rotation_threshold) throw std::invalid_argument("EnvSpec: pose space needs a rotation threshold");
    if (goal_dim != 4 && goal_dim != 7) {
      throw std::invalid_argument("EnvSpec: pose goals must have 4 or 7 components");
    }
    if ((goal_dim == 7) != position_threshold.has_value()) {
      throw std::invalid_argument("EnvSpec: pose goal carries a position iff a position threshold is set");
    }
  }
}

namespace {

void require_goal_pair(std::span<const double> a, std::span<const double> d, const EnvSpec& spec) {
  if (a.size() != d.size() || static_cast<int>(a.size()) != spec.goal_dim) {
    throw std::invalid_argument("goal vectors must both have length goal_dim");
  }
}

double euclidean(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Quaternion quat_part(std::span<const double> g) {
  const std::size_t off = g.size() - 4;
  return Quaternion{g[off], g[off + 1], g[off + 2], g[off + 3]};
}

double rotation_part_distance(std::span<const double> a, std::span<const double> d,
                              const EnvSpec& spec) {
  const Quaternion qa = quat_part(a);
  const Quaternion qd = quat_part(d);
  return spec.goal_space == GoalSpace::pose_ignore_z ? quat_distance_ignore_z(qa, qd)
                                                     : quat_distance(qa, qd);
}

}  // namespace

double goal_distance(std::span<const double> achieved, std::span<const double> desired,
                     const EnvSpec& spec) {
  require_goal_pair(achieved, desired, spec);
  if (spec.goal_space == GoalSpace::position) return euclidean(achieved, desired);
  double dist = rotation_part_distance(achieved, desired, spec);
  if (spec.goal_dim == 7) {
    dist += euclidean(achieved.first(3), desired.first(3));
  }
  return dist;
}

bool is_success(std::span<const double> achieved, std::span<const double> desired,
                const EnvSpec& spec) {
  require_goal_pair(achieved, desired, spec);
  if (spec.goal_space == GoalSpace::position) {
    return euclidean(achieved, desired) < *spec.position_threshold;
  }
  if (spec.position_threshold &&
      euclidean(achieved.first(3), desired.first(3)) >= *spec.position_threshold) {
    return false;
  }
  return rotation_part_distance(achieved, desired, spec) < *spec.rotation_threshold;
}

double compute_reward(std::span<const double> achieved, std::span<const double> desired,
                      const Info& info, const EnvSpec& spec) {
  (void)info;  // goal-independent by contract; unused by either reward form
  if (spec.reward_mode == RewardMode::sparse) {
    return is_success(achieved, desired, spec) ? 0.0 : -1.0;
  }
  return -goal_distance(achieved, desired, spec);
}

std::vector<double> flatten_observation(const GoalObservation& obs,
                                        std::span<const ObsKey> keys) {
  if (keys.empty()) throw std::invalid_argument("flatten_observation: key list is empty");
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (std::size_t j = i + 1; j < keys.size(); ++j) {
      if (keys[i] == keys[j]) throw std::invalid_argument("flatten_observation: duplicate key");
    }
  }
  std::vector<double> out;
  for (ObsKey k : keys) {
    const std::vector<double>* field = nullptr;
    switch (k) {
      case ObsKey::observation: field = &obs.observation; break;
      case ObsKey::desired_goal: field = &obs.desired_goal; break;
      case ObsKey::achieved_goal: field = &obs.achieved_goal; break;
    }
    out.insert(out.end(), field->begin(), field->end());
  }
  return out;
}

}  // namespace goalforge
