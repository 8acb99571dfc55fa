#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <span>

#include "goalforge/core/types.hpp"
#include "goalforge/her/episode.hpp"

namespace goalforge {

struct TrainingBatch {
  Eigen::MatrixXd obs;
  Eigen::MatrixXd goal;
  Eigen::MatrixXd action;
  Eigen::MatrixXd next_obs;
  Eigen::MatrixXd achieved_next;
  Eigen::VectorXd reward;

  int size() const { return static_cast<int>(obs.rows()); }
};

using RewardFn =
    std::function<double(std::span<const double>, std::span<const double>, const Info&)>;

// Episode ring buffer with hindsight goal substitution (future strategy).
// Rewards are recomputed through the env reward function for every sampled
// transition, substituted or not.
class ReplayBuffer {
 public:
  static constexpr std::size_t kDefaultCapacity = 1'000'000;  // transitions

  explicit ReplayBuffer(std::uint64_t seed, std::size_t transition_capacity = kDefaultCapacity);

  // Appends the episode, evicting oldest whole episodes over capacity.
  // All stored episodes must share the first episode's length and widths.
  void store_episode(EpisodeRecord episode);

  std::size_t transition_count() const { return transitions_; }
  std::size_t episode_count() const { return episodes_.size(); }
  bool empty() const { return episodes_.empty(); }

  // Uniform over (episode, t); with probability her_probability the goal is
  // replaced by the achieved goal at a uniform t' in {t+1, ..., T}. Throws
  // std::logic_error when empty.
  TrainingBatch sample_batch(int batch_size, double her_probability, const RewardFn& reward_fn);

 private:
  std::deque<EpisodeRecord> episodes_;
  std::size_t transitions_ = 0;
  std::size_t capacity_;
  std::mt19937_64 rng_;
};

// True iff every batch reward equals reward_fn(achieved_next, goal, {}).
bool hindsight_reward_consistency(const TrainingBatch& batch, const RewardFn& reward_fn);

}  // namespace goalforge
