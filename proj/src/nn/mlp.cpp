#include "goalforge/nn/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace goalforge {

Mlp::Mlp(int input_dim, std::vector<int> hidden_dims, int output_dim,
         OutputActivation activation)
    : activation_(activation) {
  if (input_dim < 1 || output_dim < 1) throw std::invalid_argument("Mlp: bad layer dims");
  for (int h : hidden_dims) {
    if (h < 1) throw std::invalid_argument("Mlp: bad layer dims");
  }
  dims_.push_back(input_dim);
  dims_.insert(dims_.end(), hidden_dims.begin(), hidden_dims.end());
  dims_.push_back(output_dim);

  int offset = 0;
  for (int l = 0; l < layer_count(); ++l) {
    weight_offsets_.push_back(offset);
    offset += dims_[l + 1] * dims_[l];
    bias_offsets_.push_back(offset);
    offset += dims_[l + 1];
  }
  params_ = Eigen::VectorXd::Zero(offset);
}

Eigen::Map<Eigen::MatrixXd> Mlp::weights(int layer) {
  return {params_.data() + weight_offsets_[layer], dims_[layer + 1], dims_[layer]};
}

Eigen::Map<const Eigen::MatrixXd> Mlp::weights(int layer) const {
  return {params_.data() + weight_offsets_[layer], dims_[layer + 1], dims_[layer]};
}

Eigen::Map<Eigen::VectorXd> Mlp::biases(int layer) {
  return {params_.data() + bias_offsets_[layer], dims_[layer + 1]};
}

Eigen::Map<const Eigen::VectorXd> Mlp::biases(int layer) const {
  return {params_.data() + bias_offsets_[layer], dims_[layer + 1]};
}

void Mlp::init(std::mt19937_64& rng, double final_layer_scale) {
  for (int l = 0; l < layer_count(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(dims_[l]));
    std::uniform_real_distribution<double> dist(-bound, bound);
    auto w = weights(l);
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) w(r, c) = dist(rng);
    }
    auto b = biases(l);
    for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = dist(rng);
    if (l == layer_count() - 1) {
      w *= final_layer_scale;
      b *= final_layer_scale;
    }
  }
}

Eigen::MatrixXd Mlp::forward(const Eigen::MatrixXd& input, Cache* cache) const {
  if (input.cols() != input_dim()) throw std::invalid_argument("Mlp: input width mismatch");
  if (cache) {
    cache->input = input;
    cache->pre.assign(layer_count(), {});
    cache->post.assign(layer_count(), {});
  }
  Eigen::MatrixXd a = input;
  for (int l = 0; l < layer_count(); ++l) {
    Eigen::MatrixXd z = (a * weights(l).transpose()).rowwise() + biases(l).transpose();
    if (l < layer_count() - 1) {
      a = z.cwiseMax(0.0);
    } else if (activation_ == OutputActivation::tanh_bounded) {
      a = z.array().tanh().matrix();
    } else {
      a = z;
    }
    if (cache) {
      cache->pre[l] = std::move(z);
      cache->post[l] = a;
    }
  }
  return a;
}

Eigen::VectorXd Mlp::backward(const Cache& cache, const Eigen::MatrixXd& grad_output,
                              const Eigen::MatrixXd* grad_pre_output,
                              Eigen::MatrixXd* grad_input) const {
  const int layers = layer_count();
  if (static_cast<int>(cache.pre.size()) != layers || cache.input.rows() == 0) {
    throw std::invalid_argument("Mlp: backward needs a cache from forward");
  }
  if (grad_output.rows() != cache.input.rows() || grad_output.cols() != output_dim()) {
    throw std::invalid_argument("Mlp: grad_output shape mismatch");
  }

  Eigen::VectorXd grad = Eigen::VectorXd::Zero(param_count());
  Eigen::MatrixXd delta;  // dL/d(pre) of the current layer
  if (activation_ == OutputActivation::tanh_bounded) {
    delta = grad_output.cwiseProduct(
        (1.0 - cache.post[layers - 1].array().square()).matrix());
  } else {
    delta = grad_output;
  }
  if (grad_pre_output) delta += *grad_pre_output;

  for (int l = layers - 1; l >= 0; --l) {
    const Eigen::MatrixXd& below = l == 0 ? cache.input : cache.post[l - 1];
    Eigen::Map<Eigen::MatrixXd>(grad.data() + weight_offsets_[l], dims_[l + 1], dims_[l]) =
        delta.transpose() * below;
    Eigen::Map<Eigen::VectorXd>(grad.data() + bias_offsets_[l], dims_[l + 1]) =
        delta.colwise().sum().transpose();
    if (l == 0) {
      if (grad_input) *grad_input = delta * weights(0);
      break;
    }
    delta = (delta * weights(l)).cwiseProduct(
        (cache.pre[l - 1].array() > 0.0).cast<double>().matrix());
  }
  return grad;
}

}  // namespace goalforge
