#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <vector>

#include "goalforge/core/types.hpp"
#include "goalforge/her/replay_buffer.hpp"
#include "goalforge/nn/adam.hpp"
#include "goalforge/nn/mlp.hpp"
#include "goalforge/nn/normalizer.hpp"

namespace goalforge {

struct AgentConfig {
  double gamma = 0.98;
  double tau_polyak = 0.95;         // weight kept on the old target
  double random_action_prob = 0.3;
  double gaussian_noise_scale = 0.2;  // fraction of the action half-range
  double action_l2 = 1.0;
  int batch_size = 256;
  double her_probability = 0.8;
  bool use_her = true;
  RewardMode reward_mode = RewardMode::sparse;
  std::vector<int> hidden_dims = {256, 256, 256};
  double actor_lr = 1e-3;
  double critic_lr = 1e-3;

  void validate() const;
};

// DDPG learner over goal-conditioned inputs. The actor and critic both see
// the normalized concatenation [observation, goal]; the critic additionally
// takes the raw (bounded) action.
class DdpgAgent {
 public:
  DdpgAgent(const EnvSpec& spec, AgentConfig config, std::uint64_t seed);

  const AgentConfig& config() const { return config_; }
  const EnvSpec& env_spec() const { return spec_; }

  Mlp& actor() { return actor_; }
  Mlp& critic() { return critic_; }
  Mlp& target_actor() { return target_actor_; }
  Mlp& target_critic() { return target_critic_; }
  const Mlp& actor() const { return actor_; }
  const Mlp& critic() const { return critic_; }
  const Mlp& target_actor() const { return target_actor_; }
  const Mlp& target_critic() const { return target_critic_; }
  RunningNormalizer& normalizer() { return normalizer_; }
  const RunningNormalizer& normalizer() const { return normalizer_; }

  // Deterministic policy action when explore is false. When true: with
  // random_action_prob a uniform action in bounds, otherwise the policy
  // action plus Gaussian noise, clipped to bounds. rng is required only
  // for explore = true.
  std::vector<double> select_action(std::span<const double> obs, std::span<const double> goal,
                                    bool explore, std::mt19937_64* rng = nullptr) const;

  // y = r + gamma * Q_target(s', pi_target(s')), clipped to
  // [-1/(1-gamma), 0] in sparse mode.
  Eigen::VectorXd critic_targets(const TrainingBatch& batch) const;

  // One Adam step each; both return the loss before the step.
  double update_critic(const TrainingBatch& batch);
  double update_actor(const TrainingBatch& batch);

  // target <- tau * target + (1 - tau) * main, both networks.
  void soft_update_targets();

  void save(std::ostream& out) const;
  // Restores into an agent constructed with matching spec and config.
  void load(std::istream& in);

 private:
  Eigen::MatrixXd normalized_input(const Eigen::MatrixXd& obs, const Eigen::MatrixXd& goal) const;
  Eigen::MatrixXd bounded_action(const Eigen::MatrixXd& tanh_out) const;

  EnvSpec spec_;
  AgentConfig config_;
  Mlp actor_;
  Mlp critic_;
  Mlp target_actor_;
  Mlp target_critic_;
  Adam actor_opt_;
  Adam critic_opt_;
  RunningNormalizer normalizer_;
  Eigen::VectorXd action_center_;
  Eigen::VectorXd action_half_;
};

}  // namespace goalforge
