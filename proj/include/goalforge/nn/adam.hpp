#pragma once

#include <Eigen/Core>

namespace goalforge {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Bias-corrected Adam over a flat parameter vector.
class Adam {
 public:
  explicit Adam(int param_count, AdamConfig config = {});

  void apply(Eigen::VectorXd& params, const Eigen::VectorXd& grad);

  const AdamConfig& config() const { return config_; }
  int step_count() const { return step_; }
  Eigen::VectorXd& first_moment() { return m_; }
  Eigen::VectorXd& second_moment() { return v_; }
  const Eigen::VectorXd& first_moment() const { return m_; }
  const Eigen::VectorXd& second_moment() const { return v_; }
  void set_step_count(int t) { step_ = t; }

 private:
  AdamConfig config_;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  int step_ = 0;
};

}  // namespace goalforge
