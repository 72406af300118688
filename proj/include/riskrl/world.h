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


#ifndef RISKRL_WORLD_H_
#define RISKRL_WORLD_H_

#include <array>
#include <span>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/scenario.h"
#include "riskrl/types.h"

namespace riskrl::sim {

struct NpcRuntime {
  ActorState state;
  ActorScript script;
  double path_distance = 0.0;  // along [spawn, waypoints...] for kWaypointFollower
  Vec2 path_origin;
};

struct World {
  int step = 0;
  double time = 0.0;
  ActorState ego;
  RouteFramePose ego_pose;
  RouteFramePose prev_pose;
  double steering_rate = 0.0;
  double jerk = 0.0;
  std::vector<NpcRuntime> npcs;
  std::vector<ActorState> obstacles;

  // NPC states followed by obstacles.
  std::vector<ActorState> others() const;
};

World initial_world(const Scenario& scenario);

// Advances time by config.dt. The ego follows a unicycle model with speed
// clamped to [0, v_max] and integrated with the trapezoid rule; NPCs follow
// their scripts.
World step_world(const World& world, const EgoAction& action, const Route& route,
                 const RewardConfig& config);

// Corners of an actor's footprint, counter-clockwise.
std::array<Vec2, 4> footprint(const ActorState& actor);

// Separating-axis overlap test of two oriented rectangles. Touching counts.
bool rectangles_overlap(const ActorState& a, const ActorState& b);
bool detect_collision(const ActorState& ego, std::span<const ActorState> actors);

// True once the body has fully left the lane corridor.
bool check_offroad(const RouteFramePose& pose, const ActorState& ego, const Route& route);

}  // namespace riskrl::sim

#endif  // RISKRL_WORLD_H_
