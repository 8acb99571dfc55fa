#include "goalforge/harness/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace goalforge {

double quantile(std::span<const double> values, double p) {
  if (values.empty()) throw std::invalid_argument("quantile: empty input");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("quantile: p outside [0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0.0 || lo + 1 == sorted.size()) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

CurveSummary aggregate_seeds(const std::vector<std::vector<double>>& per_seed_curves) {
  if (per_seed_curves.empty()) throw std::invalid_argument("aggregate_seeds: no curves");
  const std::size_t epochs = per_seed_curves.front().size();
  if (epochs == 0) throw std::invalid_argument("aggregate_seeds: empty curves");
  for (const auto& curve : per_seed_curves) {
    if (curve.size() != epochs) throw std::invalid_argument("aggregate_seeds: ragged curves");
  }
  CurveSummary summary;
  summary.median.reserve(epochs);
  summary.q1.reserve(epochs);
  summary.q3.reserve(epochs);
  std::vector<double> column(per_seed_curves.size());
  for (std::size_t e = 0; e < epochs; ++e) {
    for (std::size_t s = 0; s < per_seed_curves.size(); ++s) column[s] = per_seed_curves[s][e];
    summary.q1.push_back(quantile(column, 0.25));
    summary.median.push_back(quantile(column, 0.5));
    summary.q3.push_back(quantile(column, 0.75));
  }
  return summary;
}

double auc_score(std::span<const double> curve) {
  if (curve.empty()) throw std::invalid_argument("auc_score: empty curve");
  return std::accumulate(curve.begin(), curve.end(), 0.0) /
         static_cast<double>(curve.size());
}

}  // namespace goalforge
