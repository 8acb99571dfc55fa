// Acceptance gate for the training stack. Each criterion prints one
// PASS/FAIL line on stdout; progress and per-run details go to stderr.
// Exit code 0 only when every selected criterion passes.
//
//   goalforge_acceptance           run everything
//   goalforge_acceptance --only X  run criteria whose name contains X
//
// The training criteria assert orderings (HER beats plain DDPG, sparse
// beats dense under HER), not absolute sample efficiency, and run with a
// small network profile so the whole gate stays desk-sized.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "goalforge/core/registry.hpp"
#include "goalforge/core/reward.hpp"
#include "goalforge/harness/aggregate.hpp"
#include "goalforge/harness/benchmark.hpp"
#include "goalforge/harness/results_io.hpp"
#include "goalforge/harness/search.hpp"
#include "goalforge/harness/trainer.hpp"
#include "goalforge/her/replay_buffer.hpp"
#include "goalforge/math/quaternion.hpp"
#include "goalforge/nn/mlp.hpp"
#include "oracles.hpp"

namespace {

using namespace goalforge;
using SteadyClock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::ostream& progress() { return std::cerr; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// ---- training profile for the benchmark-style criteria ----
// Full-width nets need server budgets; these sizes keep each arm in
// minutes while leaving the learning dynamics intact.

constexpr int kSolveMaxEpochs = 30;
constexpr int kCompareEpochs = 60;
constexpr int kFinalWindow = 10;
const std::vector<std::uint64_t> kSeeds = {1, 2, 3, 4, 5};

AgentConfig desk_agent() {
  AgentConfig config;
  config.hidden_dims = {64, 64};
  config.batch_size = 64;
  return config;
}

ScheduleConfig desk_schedule(int epochs) {
  ScheduleConfig schedule;  // reference cadence: 2x2 rollouts, 50 cycles, 40 batches
  schedule.n_epochs = epochs;
  return schedule;
}

TrainJob make_job(const std::string& env_base, bool use_her, RewardMode mode, int epochs,
                  std::uint64_t seed) {
  TrainJob job;
  job.env_id = env_base + "-" + to_string(mode);
  job.use_her = use_her;
  job.agent = desk_agent();
  job.schedule = desk_schedule(epochs);
  job.seed = seed;
  return job;
}

// Arms are shared between criteria (the dominance and sparse-vs-dense
// checks reuse the same PoseRotateZ runs), so curves are cached per
// process.
std::map<std::string, std::vector<std::vector<double>>> g_arm_cache;

const std::vector<std::vector<double>>& trained_arm(const std::string& env_base, bool use_her,
                                                    RewardMode mode, int epochs) {
  const std::string label = config_label(use_her, mode);
  const std::string key = env_base + "/" + label + "/" + std::to_string(epochs);
  auto it = g_arm_cache.find(key);
  if (it != g_arm_cache.end()) return it->second;

  std::vector<std::vector<double>> curves;
  for (std::uint64_t seed : kSeeds) {
    const auto start = SteadyClock::now();
    TrainRun run(make_job(env_base, use_her, mode, epochs, seed));
    for (int e = 0; e < epochs; ++e) run.run_epoch();
    const double wall =
        std::chrono::duration<double>(SteadyClock::now() - start).count();
    progress() << "  [train] " << env_base << "/" << label << " seed " << seed << ": final "
               << fmt(run.success_history().back()) << ", auc "
               << fmt(auc_score(run.success_history())) << " (" << fmt(wall) << "s)\n";
    curves.push_back(run.success_history());
  }
  return g_arm_cache.emplace(key, std::move(curves)).first->second;
}

double final_window_median_mean(const std::vector<std::vector<double>>& curves) {
  const CurveSummary summary = aggregate_seeds(curves);
  const std::size_t n = summary.median.size();
  const std::size_t window = std::min<std::size_t>(kFinalWindow, n);
  double total = 0.0;
  for (std::size_t i = n - window; i < n; ++i) total += summary.median[i];
  return total / static_cast<double>(window);
}

double mean_seed_auc(const std::vector<std::vector<double>>& curves) {
  double total = 0.0;
  for (const auto& curve : curves) total += auc_score(curve);
  return total / static_cast<double>(curves.size());
}

// ---- criterion 1: every configuration solves the easy env ----

Outcome easy_env_solvability() {
  bool all = true;
  std::ostringstream detail;
  for (const BenchConfig& config : benchmark_configs()) {
    std::vector<std::unique_ptr<TrainRun>> runs;
    for (std::uint64_t seed : kSeeds) {
      runs.push_back(std::make_unique<TrainRun>(
          make_job("PointReach", config.use_her, config.reward_mode, kSolveMaxEpochs, seed)));
    }
    int reached = -1;
    for (int epoch = 1; epoch <= kSolveMaxEpochs && reached < 0; ++epoch) {
      std::vector<double> rates;
      rates.reserve(runs.size());
      for (auto& run : runs) rates.push_back(run->run_epoch());
      const double median = quantile(rates, 0.5);
      progress() << "  [solve] " << config.label << " epoch " << epoch << ": median "
                 << fmt(median) << "\n";
      if (median >= 0.95) reached = epoch;
    }
    if (reached < 0) {
      all = false;
      detail << config.label << " below 0.95 after " << kSolveMaxEpochs << " epochs; ";
    } else {
      detail << config.label << " at epoch " << reached << "; ";
    }
  }
  return {all, detail.str()};
}

// ---- criterion 2: HER-sparse beats plain DDPG-sparse by >= 0.3 ----

Outcome her_dominance() {
  bool all = true;
  std::ostringstream detail;
  for (const std::string env : {"PlanarPush", "PoseRotateZ"}) {
    const auto& her = trained_arm(env, true, RewardMode::sparse, kCompareEpochs);
    const auto& ddpg = trained_arm(env, false, RewardMode::sparse, kCompareEpochs);
    const double her_score = final_window_median_mean(her);
    const double ddpg_score = final_window_median_mean(ddpg);
    const double gap = her_score - ddpg_score;
    detail << env << " gap " << fmt(gap) << " (her " << fmt(her_score) << ", ddpg "
           << fmt(ddpg_score) << "); ";
    if (gap < 0.3) all = false;
  }
  return {all, detail.str()};
}

// ---- criterion 3: under HER, sparse AUC >= dense AUC on PoseRotateZ ----

Outcome sparse_beats_dense() {
  const auto& sparse = trained_arm("PoseRotateZ", true, RewardMode::sparse, kCompareEpochs);
  const auto& dense = trained_arm("PoseRotateZ", true, RewardMode::dense, kCompareEpochs);
  const double auc_sparse = mean_seed_auc(sparse);
  const double auc_dense = mean_seed_auc(dense);
  std::ostringstream detail;
  detail << "auc sparse " << fmt(auc_sparse) << ", auc dense " << fmt(auc_dense);
  return {auc_sparse >= auc_dense, detail.str()};
}

// ---- criterion 4: analytic gradients match finite differences ----

Outcome gradient_correctness() {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = 12;
  double worst = 0.0;

  // critic-style MSE loss
  {
    Mlp critic(6, {8, 8}, 1, OutputActivation::identity);
    critic.init(rng, 1.0);
    Eigen::MatrixXd inputs(n, 6);
    Eigen::VectorXd targets(n);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < 6; ++c) inputs(r, c) = normal(rng);
      targets(r) = normal(rng);
    }
    Mlp::Cache cache;
    const Eigen::MatrixXd q = critic.forward(inputs, &cache);
    const Eigen::MatrixXd grad_out = 2.0 * (q.col(0) - targets) / static_cast<double>(n);
    const Eigen::VectorXd analytic = critic.backward(cache, grad_out);
    const Eigen::VectorXd numeric = oracle::finite_difference_gradient(
        [&](const Eigen::VectorXd& p) {
          Mlp probe = critic;
          probe.params() = p;
          const Eigen::MatrixXd out = probe.forward(inputs);
          return (out.col(0) - targets).squaredNorm() / static_cast<double>(n);
        },
        critic.params());
    worst = std::max(worst, oracle::relative_error(analytic, numeric));
  }

  // actor loss through a fixed critic, with the pre-tanh L2 penalty
  {
    const double action_l2 = 1.0;
    Mlp actor(5, {8, 8}, 2, OutputActivation::tanh_bounded);
    Mlp critic(7, {8, 8}, 1, OutputActivation::identity);
    actor.init(rng, 1.0);
    critic.init(rng, 1.0);
    Eigen::MatrixXd states(n, 5);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < 5; ++c) states(r, c) = normal(rng);
    }
    auto loss_of = [&](const Mlp& net) {
      Mlp::Cache cache;
      const Eigen::MatrixXd actions = net.forward(states, &cache);
      Eigen::MatrixXd critic_in(n, 7);
      critic_in << states, actions;
      const double q_mean = critic.forward(critic_in).col(0).mean();
      const double penalty =
          cache.pre.back().array().square().rowwise().sum().mean();
      return -q_mean + action_l2 * penalty;
    };
    Mlp::Cache actor_cache;
    const Eigen::MatrixXd actions = actor.forward(states, &actor_cache);
    Eigen::MatrixXd critic_in(n, 7);
    critic_in << states, actions;
    Mlp::Cache critic_cache;
    critic.forward(critic_in, &critic_cache);
    Eigen::MatrixXd grad_q =
        Eigen::MatrixXd::Constant(n, 1, -1.0 / static_cast<double>(n));
    Eigen::MatrixXd grad_critic_in;
    critic.backward(critic_cache, grad_q, nullptr, &grad_critic_in);
    const Eigen::MatrixXd grad_actions = grad_critic_in.rightCols(2);
    const Eigen::MatrixXd grad_pre =
        (2.0 * action_l2 / static_cast<double>(n)) * actor_cache.pre.back();
    const Eigen::VectorXd analytic = actor.backward(actor_cache, grad_actions, &grad_pre);
    const Eigen::VectorXd numeric = oracle::finite_difference_gradient(
        [&](const Eigen::VectorXd& p) {
          Mlp probe = actor;
          probe.params() = p;
          return loss_of(probe);
        },
        actor.params());
    worst = std::max(worst, oracle::relative_error(analytic, numeric));
  }

  std::ostringstream detail;
  detail << "max relative error " << worst;
  return {worst < 1e-5, detail.str()};
}

// ---- criterion 5: hindsight substitution statistics ----

Outcome her_replay_statistics() {
  // achieved values encode (episode, step); the stored desired goal is a
  // sentinel no rollout ever reaches, so a changed goal marks substitution
  const int horizon = 5;
  const auto near_reward = [](std::span<const double> achieved, std::span<const double> goal,
                              const Info&) {
    return std::abs(achieved[0] - goal[0]) < 0.5 ? 0.0 : -1.0;
  };

  ReplayBuffer buffer(91);
  for (int index = 0; index < 30; ++index) {
    EpisodeRecord ep;
    ep.desired_goal = {index * 1000.0 + 777.0};
    for (int t = 0; t <= horizon; ++t) {
      ep.observations.push_back({static_cast<double>(t)});
      ep.achieved.push_back({index * 1000.0 + t});
      if (t < horizon) ep.actions.push_back({0.0});
    }
    buffer.store_episode(std::move(ep));
  }

  const int total = 10000;
  const int batch_size = 250;
  int substituted = 0;
  bool consistent = true;
  for (int b = 0; b < total / batch_size; ++b) {
    const TrainingBatch batch = buffer.sample_batch(batch_size, 0.8, near_reward);
    if (!hindsight_reward_consistency(batch, near_reward)) consistent = false;
    for (int i = 0; i < batch.size(); ++i) {
      const double remainder = std::fmod(batch.goal(i, 0), 1000.0);
      if (remainder != 777.0) ++substituted;
    }
  }
  const double fraction = static_cast<double>(substituted) / total;
  const double three_sigma = 3.0 * std::sqrt(0.8 * 0.2 / total);
  std::ostringstream detail;
  detail << "substitution fraction " << fraction << " (bound 0.8 +- " << fmt(three_sigma)
         << "), reward consistency " << (consistent ? "ok" : "violated");
  return {std::abs(fraction - 0.8) <= three_sigma && consistent, detail.str()};
}

// ---- criterion 6: quaternion metric properties ----

Outcome quaternion_metrics() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-3.14159, 3.14159);
  int failures = 0;
  double worst_triangle = 0.0;
  double worst_invariance = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Quaternion a = sample_uniform_quaternion(rng);
    const Quaternion b = sample_uniform_quaternion(rng);
    const Quaternion c = sample_uniform_quaternion(rng);
    if (quat_distance(a, a) > 1e-6) ++failures;
    if (quat_distance(a, -a) > 1e-6) ++failures;
    if (quat_distance(a, b) != quat_distance(b, a)) ++failures;
    const double slack = quat_distance(a, b) + quat_distance(b, c) - quat_distance(a, c);
    worst_triangle = std::min(worst_triangle, slack);
    if (slack < -1e-9) ++failures;
    const double drift = std::abs(quat_distance_ignore_z(a, b * Quaternion::rot_z(angle(rng))) -
                                  quat_distance_ignore_z(a, b));
    worst_invariance = std::max(worst_invariance, drift);
    if (drift > 1e-9) ++failures;
  }
  std::ostringstream detail;
  detail << failures << " violations over 10000 triples, z-quotient drift "
         << worst_invariance;
  return {failures == 0, detail.str()};
}

// ---- criterion 7: every registered env honors the protocol ----

Outcome protocol_conformance() {
  int checked = 0;
  std::ostringstream problems;
  for (const std::string& id : builtin_registry().ids()) {
    auto env = builtin_registry().make(id);
    const EnvSpec& spec = env->spec();
    spec.validate();
    const auto [base, mode] = split_env_id(id);

    bool thresholds_ok = true;
    if (base == "PointReach" || base == "PlanarPush" || base == "Slide" ||
        base == "GraspPlace") {
      thresholds_ok = spec.goal_space == GoalSpace::position &&
                      spec.position_threshold == 0.05 && !spec.rotation_threshold;
    } else if (base == "PoseRotateZ" || base == "PoseRotateParallel" ||
               base == "PoseRotateXYZ") {
      thresholds_ok = spec.goal_space == GoalSpace::pose && spec.rotation_threshold == 0.1 &&
                      !spec.position_threshold;
    } else if (base == "PoseFull") {
      thresholds_ok = spec.goal_space == GoalSpace::pose && spec.position_threshold == 0.01 &&
                      spec.rotation_threshold == 0.1;
    } else if (base == "PenRotate") {
      thresholds_ok = spec.goal_space == GoalSpace::pose_ignore_z &&
                      spec.rotation_threshold == 0.1 && !spec.position_threshold;
    } else if (base == "PenFull") {
      thresholds_ok = spec.goal_space == GoalSpace::pose_ignore_z &&
                      spec.position_threshold == 0.05 && spec.rotation_threshold == 0.1;
    } else {
      thresholds_ok = false;
    }
    if (!thresholds_ok) problems << id << ": thresholds; ";

    std::mt19937_64 rng(checked + 1);
    env->reset(11);
    std::vector<double> action(static_cast<std::size_t>(spec.action_dim));
    bool rewards_ok = true;
    bool done_ok = true;
    for (int t = 1; t <= spec.horizon; ++t) {
      for (int i = 0; i < spec.action_dim; ++i) {
        std::uniform_real_distribution<double> range(spec.action_low[i], spec.action_high[i]);
        action[static_cast<std::size_t>(i)] = range(rng);
      }
      const StepResult result = env->step(action);
      const double recomputed =
          compute_reward(result.obs.achieved_goal, result.obs.desired_goal, result.info, spec);
      const double via_env =
          env->reward_for(result.obs.achieved_goal, result.obs.desired_goal, result.info);
      if (result.reward != recomputed || result.reward != via_env) rewards_ok = false;
      if (mode == RewardMode::sparse && result.reward != 0.0 && result.reward != -1.0) {
        rewards_ok = false;
      }
      if (result.done != (t == spec.horizon)) done_ok = false;
    }
    if (!rewards_ok) problems << id << ": rewards; ";
    if (!done_ok) problems << id << ": done flag; ";
    ++checked;
  }
  const std::string text = problems.str();
  std::ostringstream detail;
  detail << checked << " envs checked";
  if (!text.empty()) detail << "; " << text;
  return {checked == 20 && text.empty(), detail.str()};
}

// ---- criterion 8: seeded runs are byte-identical, evaluation is pure ----

Outcome determinism() {
  TrainJob job;
  job.env_id = "PointReach-sparse";
  job.use_her = true;
  job.agent.hidden_dims = {16, 16};
  job.agent.batch_size = 16;
  job.schedule.n_workers = 1;
  job.schedule.rollouts_per_worker = 2;
  job.schedule.cycles_per_epoch = 5;
  job.schedule.batches_per_cycle = 5;
  job.schedule.n_epochs = 2;
  job.schedule.test_rollouts_per_worker = 10;
  job.seed = 7;

  oracle::TempDir tmp("acceptance-determinism");
  std::string csv[2];
  for (int attempt = 0; attempt < 2; ++attempt) {
    TrainRun run(job);
    for (int e = 0; e < job.schedule.n_epochs; ++e) run.run_epoch();
    const auto file = tmp.path() / ("progress" + std::to_string(attempt) + ".csv");
    write_progress_csv(file, run.success_history());
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    csv[attempt] = buffer.str();

    if (attempt == 0) {
      const Eigen::VectorXd actor_before = run.agent().actor().params();
      const Eigen::VectorXd critic_before = run.agent().critic().params();
      run.evaluate();
      if (!(actor_before.array() == run.agent().actor().params().array()).all() ||
          !(critic_before.array() == run.agent().critic().params().array()).all()) {
        return {false, "evaluation modified agent parameters"};
      }
    }
  }
  const bool identical = csv[0] == csv[1];
  std::ostringstream detail;
  detail << "progress files " << (identical ? "byte-identical" : "differ")
         << ", evaluation side-effect free";
  return {identical, detail.str()};
}

// ---- criterion 9: aggregation arithmetic ----

Outcome aggregation() {
  const std::vector<std::vector<double>> five = {{0.0}, {0.25}, {0.5}, {0.75}, {1.0}};
  const CurveSummary summary = aggregate_seeds(five);
  const bool quartiles_ok = summary.epochs() == 1 && summary.median[0] == 0.5 &&
                            summary.q1[0] == 0.25 && summary.q3[0] == 0.75;
  const bool auc_ok = auc_score(std::vector<double>{0.0, 0.0, 1.0, 1.0}) == 0.5;
  std::ostringstream detail;
  detail << "median " << summary.median[0] << ", q1 " << summary.q1[0] << ", q3 "
         << summary.q3[0] << ", auc " << 0.5;
  return {quartiles_ok && auc_ok, detail.str()};
}

// ---- criterion 10: search plumbing ----

Outcome search_plumbing() {
  const SearchGrids grids = SearchGrids::defaults();
  if (grids.cardinality() != 7 * 7 * 5 * 4 * 5 * 5 * 7) {
    return {false, "grid cardinality " + std::to_string(grids.cardinality())};
  }

  SearchOptions options;
  options.env_id = "PointReach-sparse";
  options.base_agent.hidden_dims = {16, 16};
  options.schedule.n_workers = 1;
  options.schedule.rollouts_per_worker = 1;
  options.schedule.cycles_per_epoch = 5;
  options.schedule.batches_per_cycle = 5;
  options.schedule.n_epochs = 2;
  options.schedule.test_rollouts_per_worker = 5;
  options.n_samples = 2;
  options.n_seeds = 1;
  options.seed = 3;
  const std::vector<SearchRow> rows = hyperparameter_search(grids, options);

  bool ok = rows.size() == 2 && rows[0].mean_auc >= rows[1].mean_auc;
  auto member = [](const auto& axis, const auto& value) {
    return std::find(axis.begin(), axis.end(), value) != axis.end();
  };
  for (const SearchRow& row : rows) {
    const SearchCombination& c = row.combination;
    if (c.flat_index >= grids.cardinality() || !member(grids.actor_lr, c.actor_lr) ||
        !member(grids.critic_lr, c.critic_lr) || !member(grids.tau_polyak, c.tau_polyak) ||
        !member(grids.batch_size, c.batch_size) ||
        !member(grids.random_action_prob, c.random_action_prob) ||
        !member(grids.gaussian_noise_scale, c.gaussian_noise_scale) ||
        !member(grids.action_l2, c.action_l2)) {
      ok = false;
    }
  }
  std::ostringstream detail;
  detail << "ranked " << rows.size() << " samples, best mean_auc "
         << (rows.empty() ? 0.0 : rows[0].mean_auc);
  return {ok, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else if (arg.rfind("--only=", 0) == 0) {
      only = arg.substr(7);
    } else if (arg == "--help" || arg == "-h") {
      std::cout << "usage: goalforge_acceptance [--only SUBSTRING]\n";
      return 0;
    } else {
      std::cerr << "unknown argument: " << arg << "\n";
      return 2;
    }
  }

  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"easy-env-solvability", easy_env_solvability},
      {"her-dominance", her_dominance},
      {"sparse-beats-dense", sparse_beats_dense},
      {"gradient-correctness", gradient_correctness},
      {"her-replay-statistics", her_replay_statistics},
      {"quaternion-metrics", quaternion_metrics},
      {"protocol-conformance", protocol_conformance},
      {"determinism", determinism},
      {"aggregation", aggregation},
      {"search-plumbing", search_plumbing},
  };

  bool all_pass = true;
  int selected = 0;
  for (const Entry& entry : criteria) {
    if (!only.empty() && std::string(entry.name).find(only) == std::string::npos) continue;
    ++selected;
    progress() << "== " << entry.name << "\n";
    const auto start = SteadyClock::now();
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double wall = std::chrono::duration<double>(SteadyClock::now() - start).count();
    progress() << "   done in " << fmt(wall) << "s\n";
    std::cout << (outcome.pass ? "PASS" : "FAIL") << ": " << entry.name;
    if (!outcome.detail.empty()) std::cout << " - " << outcome.detail;
    std::cout << "\n" << std::flush;
    if (!outcome.pass) all_pass = false;
  }
  if (selected == 0) {
    std::cerr << "no criterion matches '" << only << "'\n";
    return 2;
  }
  return all_pass ? 0 : 1;
}
