#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "goalforge/core/registry.hpp"
#include "goalforge/ddpg/agent.hpp"
#include "goalforge/harness/schedule.hpp"

namespace goalforge {

struct TrainJob {
  std::string env_id;  // full id, e.g. "PlanarPush-sparse"
  bool use_her = true;
  AgentConfig agent;  // reward_mode is overridden from the env id suffix
  ScheduleConfig schedule;
  std::uint64_t seed = 1;
};

struct RunResult {
  std::vector<double> success_per_epoch;
  std::vector<std::pair<std::string, std::string>> config_echo;
  double wall_seconds = 0.0;
};

// One seeded training run, stepped an epoch at a time so callers can stop
// early or interleave several runs. Workers roll out concurrently against
// the shared read-only agent; episodes and normalizer partials are merged
// in worker order, which keeps runs reproducible.
class TrainRun {
 public:
  explicit TrainRun(const TrainJob& job);
  ~TrainRun();

  // cycles_per_epoch cycles followed by one evaluation; returns (and
  // records) the test success rate.
  double run_epoch();
  void run_cycle();
  double evaluate();

  int epochs_done() const { return static_cast<int>(success_history_.size()); }
  const std::vector<double>& success_history() const { return success_history_; }
  DdpgAgent& agent() { return *agent_; }
  const DdpgAgent& agent() const { return *agent_; }
  ReplayBuffer& buffer() { return *buffer_; }
  const TrainJob& job() const { return job_; }

  std::vector<std::pair<std::string, std::string>> config_echo() const;

 private:
  struct Worker;

  TrainJob job_;
  EnvSpec env_spec_;
  std::unique_ptr<DdpgAgent> agent_;
  std::unique_ptr<ReplayBuffer> buffer_;
  std::vector<std::unique_ptr<Worker>> workers_;
  std::vector<double> success_history_;
};

// Runs the whole schedule and reports wall time.
RunResult run_training(const TrainJob& job);

}  // namespace goalforge
