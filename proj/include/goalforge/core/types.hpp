#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace goalforge {

enum class RewardMode { sparse, dense };
enum class GoalSpace { position, pose, pose_ignore_z };

const char* to_string(RewardMode mode);
const char* to_string(GoalSpace space);

// Auxiliary per-step values emitted by an environment. Goal-independent by
// contract, so rewards can be recomputed under substituted goals without
// re-simulation.
using Info = std::map<std::string, double>;

// The three-part observation every environment emits.
struct GoalObservation {
  std::vector<double> observation;
  std::vector<double> achieved_goal;
  std::vector<double> desired_goal;
};

// Static description of an environment. Pose goals are laid out as
// [qw,qx,qy,qz] when goal_dim == 4 and [px,py,pz,qw,qx,qy,qz] when
// goal_dim == 7; position goals are plain 3-vectors.
struct EnvSpec {
  int obs_dim = 0;
  int goal_dim = 0;
  int action_dim = 0;
  std::vector<double> action_low;
  std::vector<double> action_high;
  int horizon = 50;
  std::optional<double> position_threshold;  // meters
  std::optional<double> rotation_threshold;  // radians
  RewardMode reward_mode = RewardMode::sparse;
  GoalSpace goal_space = GoalSpace::position;

  // Throws std::invalid_argument if any structural invariant is broken.
  void validate() const;
};

struct StepResult {
  GoalObservation obs;
  double reward = 0.0;
  bool done = false;
  Info info;
};

}  // namespace goalforge
