#pragma once

#include <stdexcept>

namespace goalforge {

// Rollout/update cadence. One epoch = cycles_per_epoch cycles; each cycle
// collects n_workers * rollouts_per_worker episodes, then runs
// batches_per_cycle optimizer steps and one target update.
struct ScheduleConfig {
  int n_workers = 2;
  int rollouts_per_worker = 2;
  int cycles_per_epoch = 50;
  int batches_per_cycle = 40;
  int n_epochs = 50;
  int test_rollouts_per_worker = 10;
  int horizon = 50;

  int episodes_per_epoch() const { return n_workers * rollouts_per_worker * cycles_per_epoch; }

  void validate() const {
    if (n_workers < 1 || rollouts_per_worker < 1 || cycles_per_epoch < 1 ||
        batches_per_cycle < 1 || n_epochs < 1 || test_rollouts_per_worker < 1 || horizon < 1) {
      throw std::invalid_argument("ScheduleConfig: all counts must be >= 1");
    }
  }
};

}  // namespace goalforge
