#include "goalforge/her/replay_buffer.hpp"

#include <stdexcept>

namespace goalforge {

void EpisodeRecord::validate() const {
  const std::size_t steps = actions.size();
  if (steps == 0) throw std::invalid_argument("episode: no actions");
  if (observations.size() != steps + 1 || achieved.size() != steps + 1) {
    throw std::invalid_argument("episode: need T+1 observations and achieved goals");
  }
  if (desired_goal.empty()) throw std::invalid_argument("episode: empty desired goal");
  for (const auto& o : observations) {
    if (o.size() != observations.front().size()) {
      throw std::invalid_argument("episode: ragged observations");
    }
  }
  for (const auto& a : achieved) {
    if (a.size() != desired_goal.size()) {
      throw std::invalid_argument("episode: achieved/desired goal width mismatch");
    }
  }
  for (const auto& a : actions) {
    if (a.size() != actions.front().size()) throw std::invalid_argument("episode: ragged actions");
  }
}

ReplayBuffer::ReplayBuffer(std::uint64_t seed, std::size_t transition_capacity)
    : capacity_(transition_capacity), rng_(seed) {
  if (capacity_ == 0) throw std::invalid_argument("ReplayBuffer: zero capacity");
}

void ReplayBuffer::store_episode(EpisodeRecord episode) {
  episode.validate();
  if (!episodes_.empty()) {
    const EpisodeRecord& first = episodes_.front();
    if (episode.length() != first.length() ||
        episode.observations.front().size() != first.observations.front().size() ||
        episode.desired_goal.size() != first.desired_goal.size() ||
        episode.actions.front().size() != first.actions.front().size()) {
      throw std::invalid_argument("ReplayBuffer: episode shape differs from stored episodes");
    }
  }
  transitions_ += static_cast<std::size_t>(episode.length());
  episodes_.push_back(std::move(episode));
  while (transitions_ > capacity_ && episodes_.size() > 1) {
    transitions_ -= static_cast<std::size_t>(episodes_.front().length());
    episodes_.pop_front();
  }
  if (transitions_ > capacity_) {
    throw std::invalid_argument("ReplayBuffer: episode longer than buffer capacity");
  }
}

TrainingBatch ReplayBuffer::sample_batch(int batch_size, double her_probability,
                                         const RewardFn& reward_fn) {
  if (empty()) throw std::logic_error("ReplayBuffer: sample from empty buffer");
  if (batch_size < 1) throw std::invalid_argument("ReplayBuffer: bad batch size");
  if (her_probability < 0.0 || her_probability > 1.0) {
    throw std::invalid_argument("ReplayBuffer: her_probability outside [0, 1]");
  }

  const EpisodeRecord& first = episodes_.front();
  const int obs_dim = static_cast<int>(first.observations.front().size());
  const int goal_dim = static_cast<int>(first.desired_goal.size());
  const int action_dim = static_cast<int>(first.actions.front().size());

  TrainingBatch batch;
  batch.obs.resize(batch_size, obs_dim);
  batch.goal.resize(batch_size, goal_dim);
  batch.action.resize(batch_size, action_dim);
  batch.next_obs.resize(batch_size, obs_dim);
  batch.achieved_next.resize(batch_size, goal_dim);
  batch.reward.resize(batch_size);

  std::uniform_int_distribution<std::size_t> pick_episode(0, episodes_.size() - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const Info no_info;
  for (int i = 0; i < batch_size; ++i) {
    const EpisodeRecord& ep = episodes_[pick_episode(rng_)];
    const int steps = ep.length();
    std::uniform_int_distribution<int> pick_t(0, steps - 1);
    const int t = pick_t(rng_);
    std::span<const double> goal(ep.desired_goal);
    if (coin(rng_) < her_probability) {
      std::uniform_int_distribution<int> pick_future(t + 1, steps);
      goal = ep.achieved[static_cast<std::size_t>(pick_future(rng_))];
    }
    const auto& achieved_next = ep.achieved[static_cast<std::size_t>(t) + 1];
    for (int c = 0; c < obs_dim; ++c) {
      batch.obs(i, c) = ep.observations[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
      batch.next_obs(i, c) =
          ep.observations[static_cast<std::size_t>(t) + 1][static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < goal_dim; ++c) {
      batch.goal(i, c) = goal[static_cast<std::size_t>(c)];
      batch.achieved_next(i, c) = achieved_next[static_cast<std::size_t>(c)];
    }
    for (int c = 0; c < action_dim; ++c) {
      batch.action(i, c) = ep.actions[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
    }
    batch.reward(i) = reward_fn(achieved_next, goal, no_info);
  }
  return batch;
}

bool hindsight_reward_consistency(const TrainingBatch& batch, const RewardFn& reward_fn) {
  const Info no_info;
  std::vector<double> achieved(static_cast<std::size_t>(batch.achieved_next.cols()));
  std::vector<double> goal(static_cast<std::size_t>(batch.goal.cols()));
  for (int i = 0; i < batch.size(); ++i) {
    for (int c = 0; c < batch.achieved_next.cols(); ++c) {
      achieved[static_cast<std::size_t>(c)] = batch.achieved_next(i, c);
    }
    for (int c = 0; c < batch.goal.cols(); ++c) goal[static_cast<std::size_t>(c)] = batch.goal(i, c);
    if (batch.reward(i) != reward_fn(achieved, goal, no_info)) return false;
  }
  return true;
}

}  // namespace goalforge
