#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "goalforge/core/env.hpp"

namespace goalforge {

class UnknownEnvError : public std::runtime_error {
 public:
  explicit UnknownEnvError(const std::string& id)
      : std::runtime_error("unknown environment id: " + id) {}
};

// Name -> factory table. Ids follow the "<Base>-sparse" / "<Base>-dense"
// convention; ids() returns them sorted so listings are stable.
class EnvRegistry {
 public:
  using Factory = std::function<std::unique_ptr<GoalEnv>()>;

  void add(const std::string& id, Factory factory);
  bool contains(const std::string& id) const { return factories_.count(id) != 0; }
  std::unique_ptr<GoalEnv> make(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::map<std::string, Factory> factories_;
};

// Registry holding every built-in environment, constructed once.
const EnvRegistry& builtin_registry();

// Splits "PlanarPush-sparse" into {"PlanarPush", RewardMode::sparse}.
// Throws UnknownEnvError when the suffix is missing or unrecognized.
std::pair<std::string, RewardMode> split_env_id(const std::string& id);

}  // namespace goalforge
