#include "goalforge/harness/search.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include "goalforge/common/rng.hpp"
#include "goalforge/harness/results_io.hpp"

namespace goalforge {

SearchGrids SearchGrids::defaults() {
  SearchGrids g;
  g.actor_lr = {1e-4, 3e-4, 6e-4, 1e-3, 3e-3, 6e-3, 1e-2};
  g.critic_lr = g.actor_lr;
  g.tau_polyak = {0.9, 0.93, 0.95, 0.97, 0.99};
  g.batch_size = {32, 64, 128, 256};
  g.random_action_prob = {0.0, 0.1, 0.2, 0.3, 0.4};
  g.gaussian_noise_scale = {0.0, 0.1, 0.2, 0.3, 0.4};
  g.action_l2 = {0.0, 0.01, 0.03, 0.1, 0.3, 0.6, 1.0};
  return g;
}

void SearchGrids::validate() const {
  if (actor_lr.empty() || critic_lr.empty() || tau_polyak.empty() || batch_size.empty() ||
      random_action_prob.empty() || gaussian_noise_scale.empty() || action_l2.empty()) {
    throw std::invalid_argument("SearchGrids: every axis needs at least one value");
  }
}

std::size_t SearchGrids::cardinality() const {
  validate();
  return actor_lr.size() * critic_lr.size() * tau_polyak.size() * batch_size.size() *
         random_action_prob.size() * gaussian_noise_scale.size() * action_l2.size();
}

SearchCombination decode_combination(const SearchGrids& grids, std::size_t flat_index) {
  if (flat_index >= grids.cardinality()) {
    throw std::invalid_argument("decode_combination: index out of range");
  }
  SearchCombination c;
  c.flat_index = flat_index;
  auto take = [&flat_index](std::size_t radix) {
    const std::size_t digit = flat_index % radix;
    flat_index /= radix;
    return digit;
  };
  // least-significant axis first; the declared order reads most-significant
  c.action_l2 = grids.action_l2[take(grids.action_l2.size())];
  c.gaussian_noise_scale = grids.gaussian_noise_scale[take(grids.gaussian_noise_scale.size())];
  c.random_action_prob = grids.random_action_prob[take(grids.random_action_prob.size())];
  c.batch_size = grids.batch_size[take(grids.batch_size.size())];
  c.tau_polyak = grids.tau_polyak[take(grids.tau_polyak.size())];
  c.critic_lr = grids.critic_lr[take(grids.critic_lr.size())];
  c.actor_lr = grids.actor_lr[take(grids.actor_lr.size())];
  return c;
}

void SearchCombination::apply(AgentConfig& config) const {
  config.actor_lr = actor_lr;
  config.critic_lr = critic_lr;
  config.tau_polyak = tau_polyak;
  config.batch_size = batch_size;
  config.random_action_prob = random_action_prob;
  config.gaussian_noise_scale = gaussian_noise_scale;
  config.action_l2 = action_l2;
}

std::vector<SearchRow> hyperparameter_search(const SearchGrids& grids,
                                             const SearchOptions& options) {
  if (options.n_samples < 1 || options.n_seeds < 1) {
    throw std::invalid_argument("hyperparameter_search: samples and seeds must be >= 1");
  }
  const std::size_t cardinality = grids.cardinality();
  const std::size_t n = std::min(static_cast<std::size_t>(options.n_samples), cardinality);

  std::vector<std::size_t> picked;
  if (n == cardinality) {
    picked.resize(n);
    for (std::size_t i = 0; i < n; ++i) picked[i] = i;
  } else {
    auto rng = make_rng(derive_seed(options.seed, {kStreamSearch}));
    std::uniform_int_distribution<std::size_t> draw(0, cardinality - 1);
    std::set<std::size_t> seen;
    while (picked.size() < n) {
      const std::size_t index = draw(rng);
      if (seen.insert(index).second) picked.push_back(index);
    }
  }

  std::vector<SearchRow> rows;
  rows.reserve(n);
  for (std::size_t s = 0; s < picked.size(); ++s) {
    SearchRow row;
    row.sample_index = static_cast<int>(s);
    row.combination = decode_combination(grids, picked[s]);

    TrainJob job;
    job.env_id = options.env_id;
    job.use_her = options.use_her;
    job.agent = options.base_agent;
    row.combination.apply(job.agent);
    job.schedule = options.schedule;

    double auc_sum = 0.0;
    for (int k = 0; k < options.n_seeds; ++k) {
      job.seed = derive_seed(options.seed,
                             {kStreamSearch, picked[s], static_cast<std::uint64_t>(k) + 1});
      const RunResult result = run_training(job);
      auc_sum += auc_score(result.success_per_epoch);
    }
    row.mean_auc = auc_sum / static_cast<double>(options.n_seeds);
    rows.push_back(row);
  }

  std::stable_sort(rows.begin(), rows.end(), [](const SearchRow& a, const SearchRow& b) {
    if (a.mean_auc != b.mean_auc) return a.mean_auc > b.mean_auc;
    return a.sample_index < b.sample_index;
  });
  return rows;
}

void write_search_table(const std::filesystem::path& file, const std::vector<SearchRow>& rows) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::trunc);
  if (!out) throw DataError("cannot write " + file.string());
  out << "rank,sample_index,actor_lr,critic_lr,tau_polyak,batch_size,random_action_prob,"
         "gaussian_noise_scale,action_l2,mean_auc\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SearchCombination& c = rows[i].combination;
    out << (i + 1) << "," << rows[i].sample_index << "," << format_double(c.actor_lr) << ","
        << format_double(c.critic_lr) << "," << format_double(c.tau_polyak) << ","
        << c.batch_size << "," << format_double(c.random_action_prob) << ","
        << format_double(c.gaussian_noise_scale) << "," << format_double(c.action_l2) << ","
        << format_double(rows[i].mean_auc) << "\n";
  }
}

}  // namespace goalforge
