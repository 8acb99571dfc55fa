#include "goalforge/nn/normalizer.hpp"

#include <stdexcept>

namespace goalforge {

RunningNormalizer::RunningNormalizer(int dim) {
  if (dim < 1) throw std::invalid_argument("RunningNormalizer: dim must be positive");
  sum_ = Eigen::VectorXd::Zero(dim);
  sumsq_ = Eigen::VectorXd::Zero(dim);
}

void RunningNormalizer::update(const Eigen::MatrixXd& batch) {
  if (batch.cols() != dim()) throw std::invalid_argument("RunningNormalizer: width mismatch");
  const Eigen::MatrixXd clipped = batch.cwiseMax(-kClipRaw).cwiseMin(kClipRaw);
  count_ += static_cast<double>(batch.rows());
  sum_ += clipped.colwise().sum().transpose();
  sumsq_ += clipped.cwiseProduct(clipped).colwise().sum().transpose();
}

void RunningNormalizer::merge(const RunningNormalizer& other) {
  if (other.dim() != dim()) throw std::invalid_argument("RunningNormalizer: dim mismatch");
  count_ += other.count_;
  sum_ += other.sum_;
  sumsq_ += other.sumsq_;
}

Eigen::VectorXd RunningNormalizer::mean() const {
  if (count_ < 1.0) throw std::logic_error("RunningNormalizer: no data yet");
  return sum_ / count_;
}

Eigen::VectorXd RunningNormalizer::stddev() const {
  const Eigen::VectorXd mu = mean();
  const Eigen::VectorXd var =
      (sumsq_ / count_ - mu.cwiseProduct(mu)).cwiseMax(0.0);
  return var.cwiseSqrt().cwiseMax(kStdFloor);
}

Eigen::VectorXd RunningNormalizer::normalize(const Eigen::VectorXd& x) const {
  if (x.size() != dim()) throw std::invalid_argument("RunningNormalizer: width mismatch");
  const Eigen::VectorXd clipped = x.cwiseMax(-kClipRaw).cwiseMin(kClipRaw);
  const Eigen::VectorXd scaled = (clipped - mean()).cwiseQuotient(stddev());
  return scaled.cwiseMax(-kClipNorm).cwiseMin(kClipNorm);
}

Eigen::MatrixXd RunningNormalizer::normalize_rows(const Eigen::MatrixXd& batch) const {
  if (batch.cols() != dim()) throw std::invalid_argument("RunningNormalizer: width mismatch");
  const Eigen::VectorXd mu = mean();
  const Eigen::VectorXd sd = stddev();
  Eigen::MatrixXd out = batch.cwiseMax(-kClipRaw).cwiseMin(kClipRaw);
  out.rowwise() -= mu.transpose();
  out.array().rowwise() /= sd.transpose().array();
  return out.cwiseMax(-kClipNorm).cwiseMin(kClipNorm);
}

void RunningNormalizer::restore(double count, Eigen::VectorXd sum, Eigen::VectorXd sumsq) {
  if (sum.size() != dim() || sumsq.size() != dim()) {
    throw std::invalid_argument("RunningNormalizer: restore size mismatch");
  }
  count_ = count;
  sum_ = std::move(sum);
  sumsq_ = std::move(sumsq);
}

}  // namespace goalforge
