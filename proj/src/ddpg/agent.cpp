#include "goalforge/ddpg/agent.hpp"

#include <algorithm>
#include <stdexcept>

#include "goalforge/common/rng.hpp"
#include "goalforge/nn/checkpoint.hpp"

namespace goalforge {

void AgentConfig::validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(gamma) || !in_unit(tau_polyak) || !in_unit(random_action_prob) ||
      !in_unit(her_probability)) {
    throw std::invalid_argument("AgentConfig: probabilities and tau must lie in [0, 1]");
  }
  if (gaussian_noise_scale < 0.0 || action_l2 < 0.0) {
    throw std::invalid_argument("AgentConfig: scales must be non-negative");
  }
  if (batch_size < 1) throw std::invalid_argument("AgentConfig: batch_size must be >= 1");
  if (actor_lr <= 0.0 || critic_lr <= 0.0) {
    throw std::invalid_argument("AgentConfig: learning rates must be positive");
  }
  if (hidden_dims.empty()) throw std::invalid_argument("AgentConfig: no hidden layers");
}

namespace {

AdamConfig with_lr(double lr) {
  AdamConfig c;
  c.learning_rate = lr;
  return c;
}

}  // namespace

DdpgAgent::DdpgAgent(const EnvSpec& spec, AgentConfig config, std::uint64_t seed)
    : spec_(spec),
      config_(std::move(config)),
      actor_(spec.obs_dim + spec.goal_dim, config_.hidden_dims, spec.action_dim,
             OutputActivation::tanh_bounded),
      critic_(spec.obs_dim + spec.goal_dim + spec.action_dim, config_.hidden_dims, 1,
              OutputActivation::identity),
      target_actor_(actor_),
      target_critic_(critic_),
      actor_opt_(actor_.param_count(), with_lr(config_.actor_lr)),
      critic_opt_(critic_.param_count(), with_lr(config_.critic_lr)),
      normalizer_(spec.obs_dim + spec.goal_dim) {
  spec_.validate();
  config_.validate();
  if (config_.reward_mode != spec_.reward_mode) {
    throw std::invalid_argument("DdpgAgent: config and env reward modes disagree");
  }
  auto rng = make_rng(derive_seed(seed, {kStreamInit}));
  actor_.init(rng);
  critic_.init(rng);
  target_actor_.params() = actor_.params();
  target_critic_.params() = critic_.params();
  // one neutral row so the policy can be queried before the first stats merge
  normalizer_.update(Eigen::MatrixXd::Zero(1, spec_.obs_dim + spec_.goal_dim));

  action_center_.resize(spec_.action_dim);
  action_half_.resize(spec_.action_dim);
  for (int i = 0; i < spec_.action_dim; ++i) {
    action_center_(i) = 0.5 * (spec_.action_low[i] + spec_.action_high[i]);
    action_half_(i) = 0.5 * (spec_.action_high[i] - spec_.action_low[i]);
  }
}

Eigen::MatrixXd DdpgAgent::normalized_input(const Eigen::MatrixXd& obs,
                                            const Eigen::MatrixXd& goal) const {
  Eigen::MatrixXd joined(obs.rows(), obs.cols() + goal.cols());
  joined << obs, goal;
  return normalizer_.normalize_rows(joined);
}

Eigen::MatrixXd DdpgAgent::bounded_action(const Eigen::MatrixXd& tanh_out) const {
  Eigen::MatrixXd out = tanh_out;
  out.array().rowwise() *= action_half_.transpose().array();
  out.rowwise() += action_center_.transpose();
  return out;
}

std::vector<double> DdpgAgent::select_action(std::span<const double> obs,
                                            std::span<const double> goal, bool explore,
                                            std::mt19937_64* rng) const {
  if (static_cast<int>(obs.size()) != spec_.obs_dim ||
      static_cast<int>(goal.size()) != spec_.goal_dim) {
    throw std::invalid_argument("select_action: input widths mismatch spec");
  }
  if (explore && rng == nullptr) throw std::invalid_argument("select_action: explore needs an rng");

  if (explore) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    if (coin(*rng) < config_.random_action_prob) {
      std::vector<double> action(static_cast<std::size_t>(spec_.action_dim));
      for (int i = 0; i < spec_.action_dim; ++i) {
        std::uniform_real_distribution<double> box(spec_.action_low[i], spec_.action_high[i]);
        action[static_cast<std::size_t>(i)] = box(*rng);
      }
      return action;
    }
  }

  Eigen::MatrixXd input(1, spec_.obs_dim + spec_.goal_dim);
  for (int i = 0; i < spec_.obs_dim; ++i) input(0, i) = obs[static_cast<std::size_t>(i)];
  for (int i = 0; i < spec_.goal_dim; ++i) {
    input(0, spec_.obs_dim + i) = goal[static_cast<std::size_t>(i)];
  }
  Eigen::MatrixXd a = bounded_action(actor_.forward(normalizer_.normalize_rows(input)));

  std::vector<double> action(static_cast<std::size_t>(spec_.action_dim));
  for (int i = 0; i < spec_.action_dim; ++i) {
    double value = a(0, i);
    if (explore) {
      std::normal_distribution<double> noise(0.0, config_.gaussian_noise_scale * action_half_(i));
      value += noise(*rng);
    }
    action[static_cast<std::size_t>(i)] =
        std::clamp(value, spec_.action_low[i], spec_.action_high[i]);
  }
  return action;
}

Eigen::VectorXd DdpgAgent::critic_targets(const TrainingBatch& batch) const {
  const Eigen::MatrixXd next_in = normalized_input(batch.next_obs, batch.goal);
  const Eigen::MatrixXd next_action = bounded_action(target_actor_.forward(next_in));
  Eigen::MatrixXd critic_in(next_in.rows(), next_in.cols() + next_action.cols());
  critic_in << next_in, next_action;
  const Eigen::VectorXd next_q = target_critic_.forward(critic_in).col(0);
  Eigen::VectorXd y = batch.reward + config_.gamma * next_q;
  if (config_.reward_mode == RewardMode::sparse) {
    const double floor = -1.0 / (1.0 - config_.gamma);
    y = y.cwiseMax(floor).cwiseMin(0.0);
  }
  return y;
}

double DdpgAgent::update_critic(const TrainingBatch& batch) {
  const Eigen::VectorXd y = critic_targets(batch);
  const Eigen::MatrixXd state_in = normalized_input(batch.obs, batch.goal);
  Eigen::MatrixXd critic_in(state_in.rows(), state_in.cols() + batch.action.cols());
  critic_in << state_in, batch.action;

  Mlp::Cache cache;
  const Eigen::VectorXd q = critic_.forward(critic_in, &cache).col(0);
  const Eigen::VectorXd err = q - y;
  const double loss = err.squaredNorm() / static_cast<double>(batch.size());
  const Eigen::MatrixXd grad_out = (2.0 / static_cast<double>(batch.size())) * err;
  const Eigen::VectorXd grad = critic_.backward(cache, grad_out);
  critic_opt_.apply(critic_.params(), grad);
  return loss;
}

double DdpgAgent::update_actor(const TrainingBatch& batch) {
  const int n = batch.size();
  const Eigen::MatrixXd state_in = normalized_input(batch.obs, batch.goal);

  Mlp::Cache actor_cache;
  const Eigen::MatrixXd tanh_out = actor_.forward(state_in, &actor_cache);
  const Eigen::MatrixXd action = bounded_action(tanh_out);
  Eigen::MatrixXd critic_in(n, state_in.cols() + action.cols());
  critic_in << state_in, action;

  Mlp::Cache critic_cache;
  const Eigen::VectorXd q = critic_.forward(critic_in, &critic_cache).col(0);
  const Eigen::MatrixXd& pre_tanh = actor_cache.pre.back();
  const double penalty = pre_tanh.array().square().rowwise().sum().mean();
  const double loss = -q.mean() + config_.action_l2 * penalty;

  // dL/dQ = -1/n; route through the critic to the action block only
  const Eigen::MatrixXd grad_q =
      Eigen::MatrixXd::Constant(n, 1, -1.0 / static_cast<double>(n));
  Eigen::MatrixXd grad_critic_in;
  critic_.backward(critic_cache, grad_q, nullptr, &grad_critic_in);
  Eigen::MatrixXd grad_action =
      grad_critic_in.rightCols(spec_.action_dim);
  grad_action.array().rowwise() *= action_half_.transpose().array();

  const Eigen::MatrixXd grad_pre =
      (2.0 * config_.action_l2 / static_cast<double>(n)) * pre_tanh;
  const Eigen::VectorXd grad = actor_.backward(actor_cache, grad_action, &grad_pre);
  actor_opt_.apply(actor_.params(), grad);
  return loss;
}

void DdpgAgent::soft_update_targets() {
  const double tau = config_.tau_polyak;
  target_actor_.params() = tau * target_actor_.params() + (1.0 - tau) * actor_.params();
  target_critic_.params() = tau * target_critic_.params() + (1.0 - tau) * critic_.params();
}

void DdpgAgent::save(std::ostream& out) const {
  TensorWriter w(out);
  w.add_scalar("obs_dim", spec_.obs_dim);
  w.add_scalar("goal_dim", spec_.goal_dim);
  w.add_scalar("action_dim", spec_.action_dim);
  Eigen::VectorXd hidden(static_cast<Eigen::Index>(config_.hidden_dims.size()));
  for (std::size_t i = 0; i < config_.hidden_dims.size(); ++i) {
    hidden(static_cast<Eigen::Index>(i)) = config_.hidden_dims[i];
  }
  w.add("hidden_dims", hidden);
  w.add("actor", actor_.params());
  w.add("critic", critic_.params());
  w.add("target_actor", target_actor_.params());
  w.add("target_critic", target_critic_.params());
  w.add("adam_actor_m", actor_opt_.first_moment());
  w.add("adam_actor_v", actor_opt_.second_moment());
  w.add_scalar("adam_actor_t", actor_opt_.step_count());
  w.add("adam_critic_m", critic_opt_.first_moment());
  w.add("adam_critic_v", critic_opt_.second_moment());
  w.add_scalar("adam_critic_t", critic_opt_.step_count());
  w.add_scalar("norm_count", normalizer_.raw_count());
  w.add("norm_sum", normalizer_.raw_sum());
  w.add("norm_sumsq", normalizer_.raw_sumsq());
  w.finish();
}

void DdpgAgent::load(std::istream& in) {
  TensorReader r(in);
  if (static_cast<int>(r.get_scalar("obs_dim")) != spec_.obs_dim ||
      static_cast<int>(r.get_scalar("goal_dim")) != spec_.goal_dim ||
      static_cast<int>(r.get_scalar("action_dim")) != spec_.action_dim) {
    throw CheckpointError("agent checkpoint: env dims mismatch");
  }
  const Eigen::VectorXd hidden = r.get_vector("hidden_dims");
  if (hidden.size() != static_cast<Eigen::Index>(config_.hidden_dims.size())) {
    throw CheckpointError("agent checkpoint: architecture mismatch");
  }
  for (Eigen::Index i = 0; i < hidden.size(); ++i) {
    if (static_cast<int>(hidden(i)) != config_.hidden_dims[static_cast<std::size_t>(i)]) {
      throw CheckpointError("agent checkpoint: architecture mismatch");
    }
  }
  auto restore_params = [&](Mlp& net, const std::string& name) {
    const Eigen::VectorXd p = r.get_vector(name);
    if (p.size() != net.params().size()) {
      throw CheckpointError("agent checkpoint: parameter size mismatch for " + name);
    }
    net.params() = p;
  };
  restore_params(actor_, "actor");
  restore_params(critic_, "critic");
  restore_params(target_actor_, "target_actor");
  restore_params(target_critic_, "target_critic");
  actor_opt_.first_moment() = r.get_vector("adam_actor_m");
  actor_opt_.second_moment() = r.get_vector("adam_actor_v");
  actor_opt_.set_step_count(static_cast<int>(r.get_scalar("adam_actor_t")));
  critic_opt_.first_moment() = r.get_vector("adam_critic_m");
  critic_opt_.second_moment() = r.get_vector("adam_critic_v");
  critic_opt_.set_step_count(static_cast<int>(r.get_scalar("adam_critic_t")));
  normalizer_.restore(r.get_scalar("norm_count"), r.get_vector("norm_sum"),
                      r.get_vector("norm_sumsq"));
}

}  // namespace goalforge
