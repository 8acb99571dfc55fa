#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "goalforge/harness/trainer.hpp"

namespace goalforge {

// Candidate value lists for the random hyperparameter search; one value
// per axis makes a combination.
struct SearchGrids {
  std::vector<double> actor_lr;
  std::vector<double> critic_lr;
  std::vector<double> tau_polyak;
  std::vector<int> batch_size;
  std::vector<double> random_action_prob;
  std::vector<double> gaussian_noise_scale;
  std::vector<double> action_l2;

  static SearchGrids defaults();
  std::size_t cardinality() const;
  void validate() const;
};

struct SearchCombination {
  std::size_t flat_index = 0;
  double actor_lr;
  double critic_lr;
  double tau_polyak;
  int batch_size;
  double random_action_prob;
  double gaussian_noise_scale;
  double action_l2;

  void apply(AgentConfig& config) const;
};

// Mixed-radix decode; axis order: actor_lr, critic_lr, tau, batch,
// random_action_prob, noise, l2.
SearchCombination decode_combination(const SearchGrids& grids, std::size_t flat_index);

struct SearchRow {
  int sample_index = 0;  // draw order
  SearchCombination combination;
  double mean_auc = 0.0;
};

struct SearchOptions {
  std::string env_id;
  bool use_her = true;
  AgentConfig base_agent;
  ScheduleConfig schedule;
  int n_samples = 40;
  int n_seeds = 3;
  std::uint64_t seed = 1;
};

// Samples combinations uniformly without replacement (capped at the grid
// cardinality), trains each across n_seeds seeds, and returns rows ranked
// by mean AUC descending with ties broken by draw order.
std::vector<SearchRow> hyperparameter_search(const SearchGrids& grids,
                                             const SearchOptions& options);

void write_search_table(const std::filesystem::path& file, const std::vector<SearchRow>& rows);

}  // namespace goalforge
