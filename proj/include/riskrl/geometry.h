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


#ifndef RISKRL_GEOMETRY_H_
#define RISKRL_GEOMETRY_H_

#include "riskrl/types.h"

namespace riskrl {

// Nearest-point projection onto the route centerline. Ties resolve to the
// smaller station.
RouteFramePose project_to_route(Vec2 position, double heading, const Route& route);

// World position and heading of a route-frame pose (inverse of the projection
// for points inside the lane corridor).
struct WorldPose {
  Vec2 position;
  double heading = 0.0;
};
WorldPose from_route_frame(const Route& route, double station, double lateral_offset,
                           double heading_offset = 0.0);

// Displacement of `other` from `ego`, in the frame aligned with ego heading.
struct Displacement {
  double dx = 0.0;  // along ego heading
  double dy = 0.0;  // along ego left normal
};
Displacement relative_displacement(const ActorState& ego, const ActorState& other);

// Expresses a world-frame vector in the ego-aligned frame.
Displacement to_ego_frame(const ActorState& ego, Vec2 world_vector);

}  // namespace riskrl

#endif  // RISKRL_GEOMETRY_H_
