#include "goalforge/core/registry.hpp"
#include "goalforge/envs/grasp_place.hpp"
#include "goalforge/envs/planar_table.hpp"
#include "goalforge/envs/point_reach.hpp"
#include "goalforge/envs/pose.hpp"

namespace goalforge {

namespace {

void add_both_modes(EnvRegistry& reg, const std::string& base,
                    std::function<std::unique_ptr<GoalEnv>(RewardMode)> make) {
  reg.add(base + "-sparse", [make] { return make(RewardMode::sparse); });
  reg.add(base + "-dense", [make] { return make(RewardMode::dense); });
}

EnvRegistry build_registry() {
  EnvRegistry reg;
  add_both_modes(reg, "PointReach",
                 [](RewardMode m) { return std::make_unique<PointReachEnv>(m); });
  add_both_modes(reg, "PlanarPush", [](RewardMode m) {
    return std::make_unique<PlanarTableEnv>(planar_push_config(), m);
  });
  add_both_modes(reg, "Slide", [](RewardMode m) {
    return std::make_unique<PlanarTableEnv>(slide_config(), m);
  });
  add_both_modes(reg, "GraspPlace",
                 [](RewardMode m) { return std::make_unique<GraspPlaceEnv>(m); });

  const std::pair<const char*, VariantKind> variants[] = {
      {"PoseRotateZ", VariantKind::rotate_z},
      {"PoseRotateParallel", VariantKind::rotate_parallel},
      {"PoseRotateXYZ", VariantKind::rotate_xyz},
      {"PoseFull", VariantKind::full},
      {"PenRotate", VariantKind::pen_rotate},
      {"PenFull", VariantKind::pen_full},
  };
  for (const auto& [base, kind] : variants) {
    add_both_modes(reg, base, [kind](RewardMode m) {
      return std::make_unique<PoseEnv>(VariantConfig::for_kind(kind), m);
    });
  }
  return reg;
}

}  // namespace

const EnvRegistry& builtin_registry() {
  static const EnvRegistry registry = build_registry();
  return registry;
}

}  // namespace goalforge
