#pragma once

#include <span>
#include <vector>

namespace goalforge {

struct CurveSummary {
  std::vector<double> median;
  std::vector<double> q1;
  std::vector<double> q3;

  std::size_t epochs() const { return median.size(); }
};

// Quantile with linear interpolation between order statistics
// (position (n-1)*p). p must lie in [0, 1]; values need not be sorted.
double quantile(std::span<const double> values, double p);

// Per-epoch median and quartiles across seeds. All curves must have equal
// length; throws std::invalid_argument otherwise.
CurveSummary aggregate_seeds(const std::vector<std::vector<double>>& per_seed_curves);

// Mean of the curve values. Throws std::invalid_argument on an empty curve.
double auc_score(std::span<const double> curve);

}  // namespace goalforge
