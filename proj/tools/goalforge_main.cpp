#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goalforge/core/registry.hpp"
#include "goalforge/harness/benchmark.hpp"
#include "goalforge/harness/results_io.hpp"
#include "goalforge/harness/search.hpp"
#include "goalforge/harness/svg.hpp"
#include "goalforge/nn/checkpoint.hpp"

namespace {

using namespace goalforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonOpts {
  std::string env_base;
  std::string out_dir;
  AgentConfig agent;
  ScheduleConfig schedule;
  std::uint64_t seed_base = 1;
  int seed_count = 5;

  std::vector<std::uint64_t> seeds() const {
    std::vector<std::uint64_t> list(static_cast<std::size_t>(seed_count));
    for (int i = 0; i < seed_count; ++i) list[static_cast<std::size_t>(i)] = seed_base + i;
    return list;
  }
};

void add_common_options(CLI::App& cmd, CommonOpts& opts, bool with_env) {
  if (with_env) {
    cmd.add_option("--env", opts.env_base, "environment name, without reward suffix")
        ->required();
  }
  cmd.add_option("--out", opts.out_dir,
                 "results root (default: $GOALFORGE_RESULTS or ./results)");
  cmd.add_option("--seed", opts.seed_base, "first seed")->capture_default_str();
  cmd.add_option("--seeds", opts.seed_count, "number of consecutive seeds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--workers", opts.schedule.n_workers, "rollout workers")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--rollouts", opts.schedule.rollouts_per_worker, "rollouts per worker per cycle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--cycles", opts.schedule.cycles_per_epoch, "cycles per epoch")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--batches", opts.schedule.batches_per_cycle, "optimizer batches per cycle")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--epochs", opts.schedule.n_epochs, "training epochs")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--test-rollouts", opts.schedule.test_rollouts_per_worker,
                 "test rollouts per worker per epoch")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--batch-size", opts.agent.batch_size, "minibatch size")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd.add_option("--hidden", opts.agent.hidden_dims, "hidden layer sizes")
      ->delimiter(',')
      ->capture_default_str();
  cmd.add_option("--gamma", opts.agent.gamma, "discount factor")->capture_default_str();
  cmd.add_option("--tau", opts.agent.tau_polyak, "Polyak coefficient kept on the target")
      ->capture_default_str();
  cmd.add_option("--random-action-prob", opts.agent.random_action_prob,
                 "probability of a uniform random exploration action")
      ->capture_default_str();
  cmd.add_option("--noise", opts.agent.gaussian_noise_scale,
                 "Gaussian action noise as a fraction of the half-range")
      ->capture_default_str();
  cmd.add_option("--action-l2", opts.agent.action_l2, "penalty weight on pre-tanh actions")
      ->capture_default_str();
  cmd.add_option("--her-p", opts.agent.her_probability,
                 "per-transition hindsight substitution probability")
      ->capture_default_str();
  cmd.add_option("--actor-lr", opts.agent.actor_lr, "actor learning rate")->capture_default_str();
  cmd.add_option("--critic-lr", opts.agent.critic_lr, "critic learning rate")
      ->capture_default_str();
  cmd.set_config("--config", "", "flat key=value config file; command line wins");
}

void require_known_env(const std::string& base) {
  if (!builtin_registry().contains(base + "-sparse")) {
    throw UnknownEnvError(base);
  }
}

RewardMode parse_reward(const std::string& text) {
  if (text == "sparse") return RewardMode::sparse;
  if (text == "dense") return RewardMode::dense;
  throw std::invalid_argument("--reward must be 'sparse' or 'dense'");
}

bool parse_her(const std::string& text) {
  if (text == "on") return true;
  if (text == "off") return false;
  throw std::invalid_argument("--her must be 'on' or 'off'");
}

int cmd_train(const CommonOpts& opts, const std::string& reward, const std::string& her) {
  require_known_env(opts.env_base);
  const RewardMode mode = parse_reward(reward);
  const bool use_her = parse_her(her);
  const BenchConfig config{config_label(use_her, mode), use_her, mode};
  const auto seeds = opts.seeds();
  const ConfigRunOutcome outcome =
      run_config(opts.env_base, config, opts.agent, opts.schedule, seeds,
                 results_root(opts.out_dir), false);
  std::cout << opts.env_base << "/" << outcome.label << ": final median success "
            << format_double(outcome.summary.median.back()) << " over " << seeds.size()
            << " seed(s)\n";
  return kExitOk;
}

int cmd_bench(const CommonOpts& opts, bool resume) {
  require_known_env(opts.env_base);
  BenchmarkOptions options;
  options.env_base = opts.env_base;
  options.agent = opts.agent;
  options.schedule = opts.schedule;
  options.seeds = opts.seeds();
  options.out_dir = results_root(opts.out_dir);
  options.resume = resume;
  const auto outcomes = run_benchmark(options);
  for (const auto& outcome : outcomes) {
    std::cout << opts.env_base << "/" << outcome.label << ": final median success "
              << format_double(outcome.summary.median.back()) << "\n";
  }
  std::cout << "plot: " << (options.out_dir / opts.env_base / "benchmark.svg").string() << "\n";
  return kExitOk;
}

int cmd_search(const CommonOpts& opts, const std::string& reward, const std::string& her,
               int samples) {
  require_known_env(opts.env_base);
  const RewardMode mode = parse_reward(reward);
  SearchOptions options;
  options.env_id = opts.env_base + "-" + to_string(mode);
  options.use_her = parse_her(her);
  options.base_agent = opts.agent;
  options.base_agent.reward_mode = mode;
  options.schedule = opts.schedule;
  options.n_samples = samples;
  options.n_seeds = opts.seed_count;
  options.seed = opts.seed_base;
  const auto rows = hyperparameter_search(SearchGrids::defaults(), options);
  const auto table = results_root(opts.out_dir) / opts.env_base / "search.csv";
  write_search_table(table, rows);
  const SearchCombination& best = rows.front().combination;
  std::cout << "ranked " << rows.size() << " combinations -> " << table.string() << "\n";
  std::cout << "best: actor_lr=" << format_double(best.actor_lr)
            << " critic_lr=" << format_double(best.critic_lr)
            << " tau=" << format_double(best.tau_polyak) << " batch=" << best.batch_size
            << " random_action_prob=" << format_double(best.random_action_prob)
            << " noise=" << format_double(best.gaussian_noise_scale)
            << " action_l2=" << format_double(best.action_l2)
            << " mean_auc=" << format_double(rows.front().mean_auc) << "\n";
  return kExitOk;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& joined,
                                           const std::filesystem::path& config_file) {
  std::vector<std::uint64_t> seeds;
  std::string token;
  std::istringstream in(joined);
  while (std::getline(in, token, ',')) {
    try {
      seeds.push_back(std::stoull(token));
    } catch (const std::exception&) {
      throw DataError(config_file.string() + ": bad seeds list '" + joined + "'");
    }
  }
  if (seeds.empty()) throw DataError(config_file.string() + ": empty seeds list");
  return seeds;
}

int cmd_report(const std::string& dir) {
  const std::filesystem::path root = results_root(dir);
  if (!std::filesystem::is_directory(root)) {
    throw DataError("results directory not found: " + root.string());
  }
  bool found_any = false;
  std::vector<std::filesystem::path> env_dirs;
  for (const auto& entry : std::filesystem::directory_iterator(root)) {
    if (entry.is_directory()) env_dirs.push_back(entry.path());
  }
  std::sort(env_dirs.begin(), env_dirs.end());
  for (const auto& env_dir : env_dirs) {
    // fixed benchmark order first so report and bench plots agree
    std::vector<std::string> labels;
    for (const auto& config : benchmark_configs()) {
      if (std::filesystem::exists(env_dir / config.label / "config.txt")) {
        labels.push_back(config.label);
      }
    }
    std::vector<std::string> extra;
    for (const auto& entry : std::filesystem::directory_iterator(env_dir)) {
      if (!entry.is_directory()) continue;
      const std::string name = entry.path().filename().string();
      if (std::filesystem::exists(entry.path() / "config.txt") &&
          std::find(labels.begin(), labels.end(), name) == labels.end()) {
        extra.push_back(name);
      }
    }
    std::sort(extra.begin(), extra.end());
    labels.insert(labels.end(), extra.begin(), extra.end());
    if (labels.empty()) continue;

    std::vector<SvgSeries> series;
    for (const std::string& label : labels) {
      const std::filesystem::path label_dir = env_dir / label;
      const auto config = read_kv(label_dir / "config.txt");
      const auto seeds_it = config.find("seeds");
      if (seeds_it == config.end()) {
        throw DataError((label_dir / "config.txt").string() + ": missing seeds entry");
      }
      std::vector<std::vector<double>> curves;
      for (std::uint64_t seed : parse_seed_list(seeds_it->second, label_dir / "config.txt")) {
        curves.push_back(
            read_progress_csv(label_dir / ("seed" + std::to_string(seed)) / "progress.csv"));
      }
      CurveSummary summary;
      try {
        summary = aggregate_seeds(curves);
      } catch (const std::invalid_argument& e) {
        throw DataError(label_dir.string() + ": " + e.what());
      }
      write_summary_csv(label_dir / "summary.csv", summary);
      series.push_back({label, std::move(summary)});
      found_any = true;
    }
    write_curves_svg(env_dir / "benchmark.svg", env_dir.filename().string(), series);
    std::cout << "report: " << (env_dir / "benchmark.svg").string() << " (" << series.size()
              << " series)\n";
  }
  if (!found_any) throw DataError("no runs found under " + root.string());
  return kExitOk;
}

int cmd_list_envs() {
  for (const auto& id : builtin_registry().ids()) std::cout << id << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"goal-conditioned RL benchmark harness"};
  app.require_subcommand(1);

  CommonOpts train_opts, bench_opts, search_opts;
  search_opts.seed_count = 3;
  std::string train_reward = "sparse", train_her = "on";
  std::string search_reward = "sparse", search_her = "on";
  bool bench_resume = false;
  int search_samples = 40;
  std::string report_dir;

  CLI::App* train = app.add_subcommand("train", "train one configuration across seeds");
  add_common_options(*train, train_opts, true);
  train->add_option("--reward", train_reward, "sparse or dense")->capture_default_str();
  train->add_option("--her", train_her, "on or off")->capture_default_str();

  CLI::App* bench = app.add_subcommand("bench", "run the four-configuration comparison");
  add_common_options(*bench, bench_opts, true);
  bench->add_flag("--resume", bench_resume, "skip seeds with complete progress files");

  CLI::App* search = app.add_subcommand("search", "random hyperparameter search");
  add_common_options(*search, search_opts, true);
  search->add_option("--reward", search_reward, "sparse or dense")->capture_default_str();
  search->add_option("--her", search_her, "on or off")->capture_default_str();
  search->add_option("--samples", search_samples, "grid combinations to sample")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI::App* report = app.add_subcommand("report", "rebuild summaries and plots from raw CSVs");
  report->add_option("dir", report_dir, "results root (default: $GOALFORGE_RESULTS or ./results)");

  CLI::App* list_envs = app.add_subcommand("list-envs", "print registered environment ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (train->parsed()) return cmd_train(train_opts, train_reward, train_her);
    if (bench->parsed()) return cmd_bench(bench_opts, bench_resume);
    if (search->parsed()) return cmd_search(search_opts, search_reward, search_her, search_samples);
    if (report->parsed()) return cmd_report(report_dir);
    if (list_envs->parsed()) return cmd_list_envs();
  } catch (const UnknownEnvError& e) {
    std::cerr << e.what() << "\nregistered ids:\n";
    for (const auto& id : builtin_registry().ids()) std::cerr << "  " << id << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const CheckpointError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
