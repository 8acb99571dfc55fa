#pragma once

#include <Eigen/Core>
#include <random>
#include <vector>

namespace goalforge {

enum class OutputActivation { identity, tanh_bounded };

// Fully-connected network with ReLU hidden layers. Batch matrices hold one
// sample per row. All parameters live in a single flat vector so optimizer
// steps, Polyak averaging and checkpoints can treat them uniformly.
class Mlp {
 public:
  Mlp(int input_dim, std::vector<int> hidden_dims, int output_dim,
      OutputActivation activation);

  // Uniform fan-in init; the output layer is additionally scaled down to
  // keep initial outputs near zero.
  void init(std::mt19937_64& rng, double final_layer_scale = 1e-3);

  int input_dim() const { return dims_.front(); }
  int output_dim() const { return dims_.back(); }
  int layer_count() const { return static_cast<int>(dims_.size()) - 1; }
  OutputActivation activation() const { return activation_; }
  int param_count() const { return static_cast<int>(params_.size()); }
  Eigen::VectorXd& params() { return params_; }
  const Eigen::VectorXd& params() const { return params_; }

  Eigen::Map<Eigen::MatrixXd> weights(int layer);
  Eigen::Map<const Eigen::MatrixXd> weights(int layer) const;
  Eigen::Map<Eigen::VectorXd> biases(int layer);
  Eigen::Map<const Eigen::VectorXd> biases(int layer) const;

  // Intermediate activations kept for the backward pass.
  struct Cache {
    Eigen::MatrixXd input;
    std::vector<Eigen::MatrixXd> pre;   // preactivations, one per layer
    std::vector<Eigen::MatrixXd> post;  // activations, one per layer
  };

  Eigen::MatrixXd forward(const Eigen::MatrixXd& input, Cache* cache = nullptr) const;

  // Exact reverse-mode gradient of a scalar loss given dL/dOutput for the
  // cached pass. grad_pre_output, when present, is added to dL/d(output
  // preactivation) — the hook for penalties on pre-tanh activations.
  // grad_input, when present, receives dL/dInput.
  Eigen::VectorXd backward(const Cache& cache, const Eigen::MatrixXd& grad_output,
                           const Eigen::MatrixXd* grad_pre_output = nullptr,
                           Eigen::MatrixXd* grad_input = nullptr) const;

 private:
  std::vector<int> dims_;
  OutputActivation activation_;
  Eigen::VectorXd params_;
  std::vector<int> weight_offsets_;
  std::vector<int> bias_offsets_;
};

}  // namespace goalforge
