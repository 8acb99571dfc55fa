#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "goalforge/harness/aggregate.hpp"
#include "goalforge/harness/trainer.hpp"

namespace goalforge {

struct BenchConfig {
  std::string label;  // e.g. "her-sparse"
  bool use_her;
  RewardMode reward_mode;
};

// The four-way comparison: HER on/off crossed with sparse/dense rewards.
std::array<BenchConfig, 4> benchmark_configs();

std::string config_label(bool use_her, RewardMode mode);

struct ConfigRunOutcome {
  std::string label;
  std::vector<std::vector<double>> per_seed_curves;
  CurveSummary summary;
};

// Trains one labeled configuration across seeds and persists
// <out>/<env_base>/<label>/{seed<k>/progress.csv, config.txt, summary.csv}.
// With resume, seeds whose progress.csv already holds a full run are
// loaded instead of retrained.
ConfigRunOutcome run_config(const std::string& env_base, const BenchConfig& config,
                            const AgentConfig& base_agent, const ScheduleConfig& schedule,
                            std::span<const std::uint64_t> seeds,
                            const std::filesystem::path& out_dir, bool resume);

struct BenchmarkOptions {
  std::string env_base;
  AgentConfig agent;
  ScheduleConfig schedule;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::filesystem::path out_dir = "results";
  bool resume = false;
};

// Runs all four configurations and writes the combined plot
// <out>/<env_base>/benchmark.svg next to the per-config results.
std::vector<ConfigRunOutcome> run_benchmark(const BenchmarkOptions& options);

}  // namespace goalforge
