#include "goalforge/nn/adam.hpp"

#include <cmath>
#include <stdexcept>

namespace goalforge {

Adam::Adam(int param_count, AdamConfig config)
    : config_(config),
      m_(Eigen::VectorXd::Zero(param_count)),
      v_(Eigen::VectorXd::Zero(param_count)) {}

void Adam::apply(Eigen::VectorXd& params, const Eigen::VectorXd& grad) {
  if (params.size() != m_.size() || grad.size() != m_.size()) {
    throw std::invalid_argument("Adam: size mismatch");
  }
  ++step_;
  m_ = config_.beta1 * m_ + (1.0 - config_.beta1) * grad;
  v_ = config_.beta2 * v_ + (1.0 - config_.beta2) * grad.cwiseProduct(grad);
  const double m_correction = 1.0 - std::pow(config_.beta1, step_);
  const double v_correction = 1.0 - std::pow(config_.beta2, step_);
  params.array() -= config_.learning_rate * (m_.array() / m_correction) /
                    ((v_.array() / v_correction).sqrt() + config_.epsilon);
}

}  // namespace goalforge
