#include "goalforge/harness/benchmark.hpp"

#include <chrono>

#include "goalforge/harness/results_io.hpp"
#include "goalforge/harness/svg.hpp"

namespace goalforge {

std::string config_label(bool use_her, RewardMode mode) {
  return std::string(use_her ? "her" : "ddpg") + "-" + to_string(mode);
}

std::array<BenchConfig, 4> benchmark_configs() {
  return {{
      {config_label(true, RewardMode::sparse), true, RewardMode::sparse},
      {config_label(true, RewardMode::dense), true, RewardMode::dense},
      {config_label(false, RewardMode::sparse), false, RewardMode::sparse},
      {config_label(false, RewardMode::dense), false, RewardMode::dense},
  }};
}

namespace {

bool has_complete_progress(const std::filesystem::path& file, int n_epochs) {
  if (!std::filesystem::exists(file)) return false;
  try {
    return static_cast<int>(read_progress_csv(file).size()) == n_epochs;
  } catch (const DataError&) {
    return false;
  }
}

}  // namespace

ConfigRunOutcome run_config(const std::string& env_base, const BenchConfig& config,
                            const AgentConfig& base_agent, const ScheduleConfig& schedule,
                            std::span<const std::uint64_t> seeds,
                            const std::filesystem::path& out_dir, bool resume) {
  if (seeds.empty()) throw std::invalid_argument("run_config: no seeds");
  const std::filesystem::path label_dir = out_dir / env_base / config.label;

  TrainJob job;
  job.env_id = env_base + "-" + to_string(config.reward_mode);
  job.use_her = config.use_her;
  job.agent = base_agent;
  job.agent.reward_mode = config.reward_mode;
  job.agent.use_her = config.use_her;
  job.schedule = schedule;

  ConfigRunOutcome outcome;
  outcome.label = config.label;
  bool wrote_config = false;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    job.seed = seeds[i];
    const std::filesystem::path seed_dir = label_dir / ("seed" + std::to_string(job.seed));
    const std::filesystem::path progress = seed_dir / "progress.csv";
    if (resume && has_complete_progress(progress, schedule.n_epochs)) {
      outcome.per_seed_curves.push_back(read_progress_csv(progress));
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    TrainRun run(job);
    if (!wrote_config) {
      auto echo = run.config_echo();
      std::string joined;
      for (std::size_t s = 0; s < seeds.size(); ++s) {
        if (s) joined += ",";
        joined += std::to_string(seeds[s]);
      }
      for (auto& [key, value] : echo) {
        if (key == "seed") {
          key = "seeds";
          value = joined;
        }
      }
      write_kv(label_dir / "config.txt", echo);
      wrote_config = true;
    }
    for (int e = 0; e < schedule.n_epochs; ++e) {
      run.run_epoch();
      write_progress_csv(progress, run.success_history());
    }
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_kv(seed_dir / "meta.txt", {{"wall_seconds", format_double(wall)},
                                     {"epochs", std::to_string(schedule.n_epochs)}});
    outcome.per_seed_curves.push_back(run.success_history());
  }
  outcome.summary = aggregate_seeds(outcome.per_seed_curves);
  write_summary_csv(label_dir / "summary.csv", outcome.summary);
  return outcome;
}

std::vector<ConfigRunOutcome> run_benchmark(const BenchmarkOptions& options) {
  std::vector<ConfigRunOutcome> outcomes;
  std::vector<SvgSeries> series;
  for (const BenchConfig& config : benchmark_configs()) {
    ConfigRunOutcome outcome =
        run_config(options.env_base, config, options.agent, options.schedule, options.seeds,
                   options.out_dir, options.resume);
    series.push_back({outcome.label, outcome.summary});
    outcomes.push_back(std::move(outcome));
  }
  write_curves_svg(options.out_dir / options.env_base / "benchmark.svg", options.env_base,
                   series);
  return outcomes;
}

}  // namespace goalforge
