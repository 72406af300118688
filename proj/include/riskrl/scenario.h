// Copyright 2026 The RiskRL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RISKRL_SCENARIO_H_
#define RISKRL_SCENARIO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "riskrl/types.h"

namespace riskrl::sim {

inline constexpr int kScenarioSchemaVersion = 1;

struct ActorScript {
  enum class Kind { kConstantVelocity, kWaypointFollower, kBraking };
  Kind kind = Kind::kConstantVelocity;
  std::vector<Vec2> waypoints;    // kWaypointFollower
  double trigger_station = 0.0;   // kBraking: ego route station that starts braking
  double decel = 0.0;             // kBraking, m/s^2
};

struct Npc {
  ActorState state;
  ActorScript script;
};

struct EgoAction {
  double accel = 0.0;          // m/s^2
  double steering_rate = 0.0;  // rad/s
};

// Where an actor starts: either route-relative or a world pose. `offset`
// shifts a world pose along its own left normal.
struct SpawnSpec {
  std::optional<Vec2> position;
  double heading = 0.0;         // world heading when `position` is set
  double station = 0.0;
  double offset = 0.0;
  double heading_offset = 0.0;  // relative to the route tangent
  double speed = 0.0;
  double length = 4.5;
  double width = 1.8;
};

struct SlotSpec {
  bool is_obstacle = false;
  bool randomize = true;
  SpawnSpec spawn;
  ActorScript script;
};

// Attribute ranges drawn for randomized NPC slots.
struct RandomizeSpec {
  double speed_min = 2.0, speed_max = 5.0;
  double offset_min = -0.3, offset_max = 0.3;
  double length_min = 4.0, length_max = 5.0;
  double width_min = 1.7, width_max = 2.0;
};

// A scenario file as written, before density and seed are applied.
struct ScenarioTemplate {
  std::string name;
  Route route{{{0.0, 0.0}, {1.0, 0.0}}, 3.5, 1.0};
  SpawnSpec ego;
  std::vector<EgoAction> ego_actions;
  std::vector<std::pair<SpawnSpec, ActorScript>> npcs;
  std::vector<SpawnSpec> obstacles;
  std::vector<SlotSpec> slots;
  RandomizeSpec randomize;
  double traffic_density = 1.0;
  std::uint64_t seed = 0;
  std::optional<int> max_steps;
};

// Concrete world description with every random choice resolved.
struct Scenario {
  std::string name;
  Route route{{{0.0, 0.0}, {1.0, 0.0}}, 3.5, 1.0};
  ActorState ego;
  std::vector<EgoAction> ego_actions;
  std::vector<Npc> npcs;
  std::vector<ActorState> obstacles;
  double traffic_density = 1.0;
  std::uint64_t seed = 0;
  std::optional<int> max_steps;  // falls back to RewardConfig::timeout_steps
  std::size_t slot_count = 0;
  std::size_t slots_used = 0;
};

// Throws ConfigError listing every violation, each prefixed by the path of
// the offending field (e.g. "npcs[1].script.decel").
ScenarioTemplate parse_scenario_template(std::string_view text);
ScenarioTemplate load_scenario_template(const std::filesystem::path& path);

// All violations of the document; empty iff it parses into a valid template.
std::vector<std::string> scenario_violations(std::string_view text);

// Places round-half-up(density * slot count) slots chosen by `seed`, then
// draws randomized attributes for them. Deterministic in (template, density, seed).
Scenario resolve(const ScenarioTemplate& tmpl, double density, std::uint64_t seed);
Scenario resolve(const ScenarioTemplate& tmpl);

Scenario load_scenario(const std::filesystem::path& path);

// Number of slots filled for a density; the density definition used by resolve.
std::size_t slots_for_density(double density, std::size_t slot_count);

}  // namespace riskrl::sim

#endif  // RISKRL_SCENARIO_H_
