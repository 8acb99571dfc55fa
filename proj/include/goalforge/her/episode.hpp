#pragma once

#include <vector>

namespace goalforge {

// One finished episode. observations and achieved hold T+1 entries (the
// post-final state included so every transition has a successor); actions
// hold T entries; the desired goal is fixed for the whole episode.
struct EpisodeRecord {
  std::vector<std::vector<double>> observations;
  std::vector<std::vector<double>> achieved;
  std::vector<std::vector<double>> actions;
  std::vector<double> desired_goal;

  int length() const { return static_cast<int>(actions.size()); }

  // Throws std::invalid_argument on inconsistent array lengths.
  void validate() const;
};

}  // namespace goalforge
