#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "goalforge/harness/aggregate.hpp"

namespace goalforge {

class DataError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest-round-trip decimal text for a double (to_chars), so repeated
// writes of the same value are byte-identical.
std::string format_double(double value);

// progress.csv: header "epoch,success_rate", one row per epoch (1-based).
void write_progress_csv(const std::filesystem::path& file, std::span<const double> success_rates);
std::vector<double> read_progress_csv(const std::filesystem::path& file);

// summary.csv: header "epoch,median,q1,q3".
void write_summary_csv(const std::filesystem::path& file, const CurveSummary& summary);

// Flat key=value config echo, written in the given order.
void write_kv(const std::filesystem::path& file,
              const std::vector<std::pair<std::string, std::string>>& entries);
std::map<std::string, std::string> read_kv(const std::filesystem::path& file);

// Output root: explicit argument, else $GOALFORGE_RESULTS, else "results".
std::filesystem::path results_root(const std::string& explicit_dir);

}  // namespace goalforge
