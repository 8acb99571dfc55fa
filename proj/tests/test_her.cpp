#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "goalforge/her/replay_buffer.hpp"

using namespace goalforge;

namespace {

// Signature goals: achieved[t] of episode k is k * 1000 + t, so any sampled
// row reveals exactly which episode and timestep it came from. The desired
// goal 777 within the episode's block never collides with an achieved value.
EpisodeRecord make_episode(int index, int steps = 5) {
  EpisodeRecord ep;
  for (int t = 0; t <= steps; ++t) {
    ep.observations.push_back({static_cast<double>(t), static_cast<double>(index)});
    ep.achieved.push_back({static_cast<double>(index * 1000 + t)});
  }
  for (int t = 0; t < steps; ++t) ep.actions.push_back({0.1 * t});
  ep.desired_goal = {static_cast<double>(index * 1000 + 777)};
  return ep;
}

double near_reward(std::span<const double> achieved, std::span<const double> goal, const Info&) {
  return std::abs(achieved[0] - goal[0]) < 0.5 ? 0.0 : -1.0;
}

int episode_of(double signature) { return static_cast<int>(signature) / 1000; }
int step_of(double signature) { return static_cast<int>(signature) % 1000; }

}  // namespace

TEST_CASE("stored episodes are counted in transitions") {
  ReplayBuffer buffer(1);
  CHECK(buffer.empty());
  buffer.store_episode(make_episode(0));
  buffer.store_episode(make_episode(1));
  buffer.store_episode(make_episode(2));
  CHECK(buffer.episode_count() == 3);
  CHECK(buffer.transition_count() == 15);
  CHECK_FALSE(buffer.empty());
}

TEST_CASE("capacity evicts whole episodes, oldest first") {
  ReplayBuffer buffer(1, 12);
  buffer.store_episode(make_episode(0));
  buffer.store_episode(make_episode(1));
  buffer.store_episode(make_episode(2));  // 15 transitions, episode 0 must go
  CHECK(buffer.episode_count() == 2);
  CHECK(buffer.transition_count() == 10);

  TrainingBatch batch = buffer.sample_batch(256, 0.0, near_reward);
  for (int i = 0; i < batch.size(); ++i) {
    const int ep = episode_of(batch.achieved_next(i, 0));
    CHECK(ep >= 1);
    CHECK(ep <= 2);
  }
}

TEST_CASE("an episode longer than the whole buffer is rejected") {
  ReplayBuffer buffer(1, 3);
  CHECK_THROWS_AS(buffer.store_episode(make_episode(0)), std::invalid_argument);
  CHECK_THROWS_AS(ReplayBuffer(1, 0), std::invalid_argument);
}

TEST_CASE("without substitution every goal is the episode goal") {
  ReplayBuffer buffer(2);
  buffer.store_episode(make_episode(4));
  buffer.store_episode(make_episode(9));
  TrainingBatch batch = buffer.sample_batch(512, 0.0, near_reward);
  for (int i = 0; i < batch.size(); ++i) {
    const int ep = episode_of(batch.achieved_next(i, 0));
    CHECK(batch.goal(i, 0) == ep * 1000 + 777);
    CHECK(batch.reward(i) == -1.0);  // the sentinel goal is never achieved
    // transition fields are mutually consistent
    const int t = step_of(batch.achieved_next(i, 0)) - 1;
    CHECK(batch.obs(i, 0) == t);
    CHECK(batch.next_obs(i, 0) == t + 1);
    CHECK(batch.action(i, 0) == doctest::Approx(0.1 * t).epsilon(1e-15));
  }
}

TEST_CASE("full substitution draws goals from later in the same episode") {
  ReplayBuffer buffer(3);
  buffer.store_episode(make_episode(1));
  buffer.store_episode(make_episode(2));
  TrainingBatch batch = buffer.sample_batch(2048, 1.0, near_reward);
  int immediate = 0;
  for (int i = 0; i < batch.size(); ++i) {
    const int ep = episode_of(batch.achieved_next(i, 0));
    const int next_t = step_of(batch.achieved_next(i, 0));  // t + 1
    CHECK(episode_of(batch.goal(i, 0)) == ep);
    const int substituted_t = step_of(batch.goal(i, 0));
    CHECK(substituted_t >= next_t);
    CHECK(substituted_t <= 5);
    if (substituted_t == next_t) {
      ++immediate;
      CHECK(batch.reward(i) == 0.0);  // the goal it just reached
    } else {
      CHECK(batch.reward(i) == -1.0);
    }
  }
  // P(t' == t+1) = E over uniform t of 1/(T-t) = (1/5+1/4+1/3+1/2+1)/5
  const double expected = (1.0 / 5 + 1.0 / 4 + 1.0 / 3 + 1.0 / 2 + 1.0) / 5.0;
  CHECK(std::abs(immediate / 2048.0 - expected) < 0.04);
}

TEST_CASE("substitution frequency tracks the requested probability") {
  ReplayBuffer buffer(4);
  buffer.store_episode(make_episode(6));
  TrainingBatch batch = buffer.sample_batch(10000, 0.8, near_reward);
  int substituted = 0;
  for (int i = 0; i < batch.size(); ++i) {
    if (batch.goal(i, 0) != 6777.0) ++substituted;
  }
  CHECK(std::abs(substituted / 10000.0 - 0.8) < 0.012);  // 3 sigma
}

TEST_CASE("batch rewards always agree with the reward function") {
  ReplayBuffer buffer(5);
  buffer.store_episode(make_episode(3));
  buffer.store_episode(make_episode(8));
  TrainingBatch batch = buffer.sample_batch(500, 0.8, near_reward);
  CHECK(hindsight_reward_consistency(batch, near_reward));
  batch.reward(17) += 0.5;
  CHECK_FALSE(hindsight_reward_consistency(batch, near_reward));
}

TEST_CASE("sampling is reproducible under the same seed") {
  ReplayBuffer a(9), b(9);
  for (int k = 0; k < 4; ++k) {
    a.store_episode(make_episode(k));
    b.store_episode(make_episode(k));
  }
  const TrainingBatch ba = a.sample_batch(128, 0.8, near_reward);
  const TrainingBatch bb = b.sample_batch(128, 0.8, near_reward);
  CHECK((ba.obs.array() == bb.obs.array()).all());
  CHECK((ba.goal.array() == bb.goal.array()).all());
  CHECK((ba.action.array() == bb.action.array()).all());
  CHECK((ba.next_obs.array() == bb.next_obs.array()).all());
  CHECK((ba.achieved_next.array() == bb.achieved_next.array()).all());
  CHECK((ba.reward.array() == bb.reward.array()).all());

  ReplayBuffer c(10);
  for (int k = 0; k < 4; ++k) c.store_episode(make_episode(k));
  const TrainingBatch bc = c.sample_batch(128, 0.8, near_reward);
  CHECK_FALSE((ba.goal.array() == bc.goal.array()).all());
}

TEST_CASE("sampling an empty buffer or passing bad arguments throws") {
  ReplayBuffer buffer(6);
  CHECK_THROWS_AS(buffer.sample_batch(8, 0.8, near_reward), std::logic_error);
  buffer.store_episode(make_episode(0));
  CHECK_THROWS_AS(buffer.sample_batch(0, 0.8, near_reward), std::invalid_argument);
  CHECK_THROWS_AS(buffer.sample_batch(8, -0.1, near_reward), std::invalid_argument);
  CHECK_THROWS_AS(buffer.sample_batch(8, 1.1, near_reward), std::invalid_argument);
}

TEST_CASE("episode validation catches inconsistent arrays") {
  EpisodeRecord ep = make_episode(0);
  CHECK_NOTHROW(ep.validate());

  EpisodeRecord no_actions = ep;
  no_actions.actions.clear();
  CHECK_THROWS_AS(no_actions.validate(), std::invalid_argument);

  EpisodeRecord short_obs = ep;
  short_obs.observations.pop_back();
  CHECK_THROWS_AS(short_obs.validate(), std::invalid_argument);

  EpisodeRecord no_goal = ep;
  no_goal.desired_goal.clear();
  CHECK_THROWS_AS(no_goal.validate(), std::invalid_argument);

  EpisodeRecord ragged = ep;
  ragged.observations[2].push_back(0.0);
  CHECK_THROWS_AS(ragged.validate(), std::invalid_argument);

  EpisodeRecord wide_achieved = ep;
  wide_achieved.achieved[1].push_back(0.0);
  CHECK_THROWS_AS(wide_achieved.validate(), std::invalid_argument);

  EpisodeRecord ragged_actions = ep;
  ragged_actions.actions[3].push_back(0.0);
  CHECK_THROWS_AS(ragged_actions.validate(), std::invalid_argument);
}

TEST_CASE("episodes of a different shape cannot mix") {
  ReplayBuffer buffer(7);
  buffer.store_episode(make_episode(0));
  CHECK_THROWS_AS(buffer.store_episode(make_episode(1, 4)), std::invalid_argument);

  EpisodeRecord wide_obs = make_episode(1);
  for (auto& o : wide_obs.observations) o.push_back(0.0);
  CHECK_THROWS_AS(buffer.store_episode(wide_obs), std::invalid_argument);

  EpisodeRecord wide_goal = make_episode(1);
  for (auto& a : wide_goal.achieved) a.push_back(0.0);
  wide_goal.desired_goal.push_back(0.0);
  CHECK_THROWS_AS(buffer.store_episode(wide_goal), std::invalid_argument);

  EpisodeRecord wide_action = make_episode(1);
  for (auto& a : wide_action.actions) a.push_back(0.0);
  CHECK_THROWS_AS(buffer.store_episode(wide_action), std::invalid_argument);

  CHECK(buffer.episode_count() == 1);
  CHECK_NOTHROW(buffer.store_episode(make_episode(2)));
}
