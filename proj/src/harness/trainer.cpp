#include "goalforge/harness/trainer.hpp"

#include <chrono>
#include <future>
#include <sstream>
#include <stdexcept>

#include "goalforge/common/rng.hpp"
#include "goalforge/core/reward.hpp"

namespace goalforge {

// Per-worker rollout state: private env instances and RNG streams, so
// worker results depend only on the worker's own seed path plus the shared
// parameter snapshot.
struct TrainRun::Worker {
  std::unique_ptr<GoalEnv> rollout_env;
  std::unique_ptr<GoalEnv> eval_env;
  std::mt19937_64 explore_rng;
  std::uint64_t master_seed = 0;
  std::uint64_t index = 0;
  std::uint64_t rollout_counter = 0;
  std::uint64_t eval_counter = 0;

  struct Collected {
    std::vector<EpisodeRecord> episodes;
    RunningNormalizer stats;
  };

  Collected collect(const DdpgAgent& agent, int rollouts, int horizon) {
    Collected out{{}, RunningNormalizer(agent.normalizer().dim())};
    const EnvSpec& spec = rollout_env->spec();
    Eigen::MatrixXd rows(horizon, spec.obs_dim + spec.goal_dim);
    for (int r = 0; r < rollouts; ++r) {
      GoalObservation obs =
          rollout_env->reset(derive_seed(master_seed, {kStreamReset, index, rollout_counter++}));
      EpisodeRecord ep;
      ep.desired_goal = obs.desired_goal;
      for (int t = 0; t < horizon; ++t) {
        const std::vector<double> action =
            agent.select_action(obs.observation, obs.desired_goal, true, &explore_rng);
        for (int c = 0; c < spec.obs_dim; ++c) rows(t, c) = obs.observation[c];
        for (int c = 0; c < spec.goal_dim; ++c) rows(t, spec.obs_dim + c) = obs.desired_goal[c];
        ep.observations.push_back(std::move(obs.observation));
        ep.achieved.push_back(std::move(obs.achieved_goal));
        ep.actions.push_back(action);
        StepResult result = rollout_env->step(action);
        obs = std::move(result.obs);
      }
      ep.observations.push_back(std::move(obs.observation));
      ep.achieved.push_back(std::move(obs.achieved_goal));
      out.stats.update(rows);
      out.episodes.push_back(std::move(ep));
    }
    return out;
  }

  // successes out of `rollouts` deterministic episodes
  int evaluate(const DdpgAgent& agent, int rollouts, int horizon) {
    int successes = 0;
    for (int r = 0; r < rollouts; ++r) {
      GoalObservation obs =
          eval_env->reset(derive_seed(master_seed, {kStreamEval, index, eval_counter++}));
      double final_success = 0.0;
      for (int t = 0; t < horizon; ++t) {
        const std::vector<double> action =
            agent.select_action(obs.observation, obs.desired_goal, false);
        StepResult result = eval_env->step(action);
        obs = std::move(result.obs);
        if (result.done) final_success = result.info.at("is_success");
      }
      if (final_success == 1.0) ++successes;
    }
    return successes;
  }
};

TrainRun::TrainRun(const TrainJob& job) : job_(job) {
  job_.schedule.validate();
  const auto [base, mode] = split_env_id(job_.env_id);
  (void)base;
  job_.agent.reward_mode = mode;
  job_.agent.use_her = job_.use_her;

  std::unique_ptr<GoalEnv> probe = builtin_registry().make(job_.env_id);
  env_spec_ = probe->spec();
  if (env_spec_.horizon != job_.schedule.horizon) {
    throw std::invalid_argument("TrainRun: schedule horizon differs from the env horizon");
  }

  agent_ = std::make_unique<DdpgAgent>(env_spec_, job_.agent, job_.seed);
  buffer_ = std::make_unique<ReplayBuffer>(derive_seed(job_.seed, {kStreamBuffer}));
  for (int w = 0; w < job_.schedule.n_workers; ++w) {
    auto worker = std::make_unique<Worker>();
    worker->rollout_env = builtin_registry().make(job_.env_id);
    worker->eval_env = builtin_registry().make(job_.env_id);
    worker->explore_rng =
        make_rng(derive_seed(job_.seed, {kStreamExplore, static_cast<std::uint64_t>(w)}));
    worker->master_seed = job_.seed;
    worker->index = static_cast<std::uint64_t>(w);
    workers_.push_back(std::move(worker));
  }
}

TrainRun::~TrainRun() = default;

void TrainRun::run_cycle() {
  const int rollouts = job_.schedule.rollouts_per_worker;
  const int horizon = job_.schedule.horizon;
  const DdpgAgent& agent = *agent_;

  std::vector<Worker::Collected> collected;
  collected.reserve(workers_.size());
  if (workers_.size() == 1) {
    collected.push_back(workers_[0]->collect(agent, rollouts, horizon));
  } else {
    std::vector<std::future<Worker::Collected>> futures;
    futures.reserve(workers_.size());
    for (auto& worker : workers_) {
      futures.push_back(std::async(std::launch::async, [&agent, rollouts, horizon,
                                                        w = worker.get()] {
        return w->collect(agent, rollouts, horizon);
      }));
    }
    for (auto& future : futures) collected.push_back(future.get());
  }
  for (auto& part : collected) {
    for (auto& ep : part.episodes) buffer_->store_episode(std::move(ep));
    agent_->normalizer().merge(part.stats);
  }

  const EnvSpec spec = env_spec_;
  const RewardFn reward_fn = [spec](std::span<const double> achieved,
                                    std::span<const double> goal, const Info& info) {
    return compute_reward(achieved, goal, info, spec);
  };
  const double her_p = job_.use_her ? job_.agent.her_probability : 0.0;
  for (int b = 0; b < job_.schedule.batches_per_cycle; ++b) {
    const TrainingBatch batch =
        buffer_->sample_batch(job_.agent.batch_size, her_p, reward_fn);
    agent_->update_critic(batch);
    agent_->update_actor(batch);
  }
  agent_->soft_update_targets();
}

double TrainRun::evaluate() {
  const int rollouts = job_.schedule.test_rollouts_per_worker;
  const int horizon = job_.schedule.horizon;
  const DdpgAgent& agent = *agent_;

  int successes = 0;
  if (workers_.size() == 1) {
    successes = workers_[0]->evaluate(agent, rollouts, horizon);
  } else {
    std::vector<std::future<int>> futures;
    futures.reserve(workers_.size());
    for (auto& worker : workers_) {
      futures.push_back(std::async(std::launch::async, [&agent, rollouts, horizon,
                                                        w = worker.get()] {
        return w->evaluate(agent, rollouts, horizon);
      }));
    }
    for (auto& f : futures) successes += f.get();
  }
  const int total = rollouts * static_cast<int>(workers_.size());
  return static_cast<double>(successes) / static_cast<double>(total);
}

double TrainRun::run_epoch() {
  for (int c = 0; c < job_.schedule.cycles_per_epoch; ++c) run_cycle();
  const double rate = evaluate();
  success_history_.push_back(rate);
  return rate;
}

std::vector<std::pair<std::string, std::string>> TrainRun::config_echo() const {
  const AgentConfig& a = job_.agent;
  const ScheduleConfig& s = job_.schedule;
  std::ostringstream hidden;
  for (std::size_t i = 0; i < a.hidden_dims.size(); ++i) {
    if (i) hidden << ",";
    hidden << a.hidden_dims[i];
  }
  auto fmt = [](double v) {
    std::ostringstream os;
    os << v;
    return os.str();
  };
  return {
      {"env", job_.env_id},
      {"her", job_.use_her ? "on" : "off"},
      {"seed", std::to_string(job_.seed)},
      {"gamma", fmt(a.gamma)},
      {"tau_polyak", fmt(a.tau_polyak)},
      {"random_action_prob", fmt(a.random_action_prob)},
      {"gaussian_noise_scale", fmt(a.gaussian_noise_scale)},
      {"action_l2", fmt(a.action_l2)},
      {"batch_size", std::to_string(a.batch_size)},
      {"her_probability", fmt(a.her_probability)},
      {"actor_lr", fmt(a.actor_lr)},
      {"critic_lr", fmt(a.critic_lr)},
      {"hidden_dims", hidden.str()},
      {"workers", std::to_string(s.n_workers)},
      {"rollouts_per_worker", std::to_string(s.rollouts_per_worker)},
      {"cycles_per_epoch", std::to_string(s.cycles_per_epoch)},
      {"batches_per_cycle", std::to_string(s.batches_per_cycle)},
      {"epochs", std::to_string(s.n_epochs)},
      {"test_rollouts_per_worker", std::to_string(s.test_rollouts_per_worker)},
      {"horizon", std::to_string(s.horizon)},
      {"episodes_per_epoch", std::to_string(s.episodes_per_epoch())},
  };
}

RunResult run_training(const TrainJob& job) {
  const auto start = std::chrono::steady_clock::now();
  TrainRun run(job);
  for (int e = 0; e < job.schedule.n_epochs; ++e) run.run_epoch();
  RunResult result;
  result.success_per_epoch = run.success_history();
  result.config_echo = run.config_echo();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace goalforge
