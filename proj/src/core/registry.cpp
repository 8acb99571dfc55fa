#include "goalforge/core/registry.hpp"

namespace goalforge {

void EnvRegistry::add(const std::string& id, Factory factory) {
  if (contains(id)) throw std::logic_error("environment id registered twice: " + id);
  factories_.emplace(id, std::move(factory));
}

std::unique_ptr<GoalEnv> EnvRegistry::make(const std::string& id) const {
  auto it = factories_.find(id);
  if (it == factories_.end()) throw UnknownEnvError(id);
  return it->second();
}

std::vector<std::string> EnvRegistry::ids() const {
  std::vector<std::string> out;
  out.reserve(factories_.size());
  for (const auto& [id, _] : factories_) out.push_back(id);
  return out;
}

std::pair<std::string, RewardMode> split_env_id(const std::string& id) {
  const auto dash = id.rfind('-');
  if (dash != std::string::npos) {
    const std::string suffix = id.substr(dash + 1);
    if (suffix == "sparse") return {id.substr(0, dash), RewardMode::sparse};
    if (suffix == "dense") return {id.substr(0, dash), RewardMode::dense};
  }
  throw UnknownEnvError(id);
}

}  // namespace goalforge
