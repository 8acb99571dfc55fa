#pragma once

#include <Eigen/Core>

namespace goalforge {

// Running per-dimension mean/std from clipped raw values. Sufficient
// statistics (count, sum, sum of squares) add exactly, so per-worker
// partials merge into the same state as a single accumulator would reach.
class RunningNormalizer {
 public:
  static constexpr double kClipRaw = 200.0;
  static constexpr double kClipNorm = 5.0;
  static constexpr double kStdFloor = 1e-2;

  explicit RunningNormalizer(int dim);

  int dim() const { return static_cast<int>(sum_.size()); }
  double count() const { return count_; }

  // Rows are samples; values clipped to [-kClipRaw, kClipRaw] before
  // accumulation.
  void update(const Eigen::MatrixXd& batch);
  void merge(const RunningNormalizer& other);

  Eigen::VectorXd mean() const;
  Eigen::VectorXd stddev() const;  // floored at kStdFloor

  // clip((clip(x) - mean) / std, +-kClipNorm). Throws std::logic_error
  // before any update.
  Eigen::VectorXd normalize(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd normalize_rows(const Eigen::MatrixXd& batch) const;

  // checkpoint access
  double raw_count() const { return count_; }
  const Eigen::VectorXd& raw_sum() const { return sum_; }
  const Eigen::VectorXd& raw_sumsq() const { return sumsq_; }
  void restore(double count, Eigen::VectorXd sum, Eigen::VectorXd sumsq);

 private:
  double count_ = 0.0;
  Eigen::VectorXd sum_;
  Eigen::VectorXd sumsq_;
};

}  // namespace goalforge
