#include "goalforge/harness/results_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace goalforge {

namespace {

std::ofstream open_for_write(const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw DataError("cannot write " + file.string());
  return out;
}

double parse_double(const std::string& text, const std::filesystem::path& file) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw DataError(file.string() + ": bad numeric field '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw DataError("format_double failed");
  return {buf, ptr};
}

void write_progress_csv(const std::filesystem::path& file,
                        std::span<const double> success_rates) {
  std::ofstream out = open_for_write(file);
  out << "epoch,success_rate\n";
  for (std::size_t i = 0; i < success_rates.size(); ++i) {
    out << (i + 1) << "," << format_double(success_rates[i]) << "\n";
  }
}

std::vector<double> read_progress_csv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("missing results file " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != "epoch,success_rate") {
    throw DataError(file.string() + ": bad progress header");
  }
  std::vector<double> rates;
  std::size_t expected_epoch = 1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DataError(file.string() + ": malformed row '" + line + "'");
    const double epoch = parse_double(line.substr(0, comma), file);
    if (epoch != static_cast<double>(expected_epoch)) {
      throw DataError(file.string() + ": non-sequential epoch numbering");
    }
    rates.push_back(parse_double(line.substr(comma + 1), file));
    ++expected_epoch;
  }
  if (rates.empty()) throw DataError(file.string() + ": no epoch rows");
  return rates;
}

void write_summary_csv(const std::filesystem::path& file, const CurveSummary& summary) {
  std::ofstream out = open_for_write(file);
  out << "epoch,median,q1,q3\n";
  for (std::size_t i = 0; i < summary.epochs(); ++i) {
    out << (i + 1) << "," << format_double(summary.median[i]) << ","
        << format_double(summary.q1[i]) << "," << format_double(summary.q3[i]) << "\n";
  }
}

void write_kv(const std::filesystem::path& file,
              const std::vector<std::pair<std::string, std::string>>& entries) {
  std::ofstream out = open_for_write(file);
  for (const auto& [key, value] : entries) out << key << "=" << value << "\n";
}

std::map<std::string, std::string> read_kv(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw DataError("missing config file " + file.string());
  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DataError(file.string() + ": malformed line '" + line + "'");
    entries[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return entries;
}

std::filesystem::path results_root(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("GOALFORGE_RESULTS"); env && *env) return env;
  return "results";
}

}  // namespace goalforge
