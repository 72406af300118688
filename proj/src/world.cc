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


#include "riskrl/world.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riskrl/geometry.h"

namespace riskrl::sim {
namespace {

struct PathPoint {
  Vec2 position;
  double heading;
};

// Point at arc length `s` along origin -> waypoints, extrapolated past the end.
PathPoint along_path(Vec2 origin, const std::vector<Vec2>& waypoints, double s, double fallback_heading) {
  Vec2 from = origin;
  double heading = fallback_heading;
  for (const Vec2& to : waypoints) {
    const double len = norm(to - from);
    if (len <= 0.0) continue;
    heading = std::atan2(to.y - from.y, to.x - from.x);
    if (s <= len) return {from + s * unit_from_angle(heading), heading};
    s -= len;
    from = to;
  }
  return {from + s * unit_from_angle(heading), heading};
}

void step_npc(NpcRuntime& npc, const World& world, double dt) {
  ActorState& st = npc.state;
  const double v_old = st.speed_long;
  switch (npc.script.kind) {
    case ActorScript::Kind::kConstantVelocity:
      st.position = st.position + dt * st.velocity();
      st.accel_long = 0.0;
      break;
    case ActorScript::Kind::kBraking: {
      double v_new = v_old;
      if (world.ego_pose.station >= npc.script.trigger_station) {
        v_new = std::max(0.0, v_old - npc.script.decel * dt);
      }
      st.position = st.position + (0.5 * (v_old + v_new) * dt) * unit_from_angle(st.heading);
      st.speed_long = v_new;
      st.speed_lat = 0.0;
      st.accel_long = (v_new - v_old) / dt;
      break;
    }
    case ActorScript::Kind::kWaypointFollower: {
      npc.path_distance += v_old * dt;
      const PathPoint p = along_path(npc.path_origin, npc.script.waypoints, npc.path_distance, st.heading);
      st.position = p.position;
      st.heading = p.heading;
      st.speed_lat = 0.0;
      st.accel_long = 0.0;
      break;
    }
  }
}

// Axis-interval gap of two convex polygons along `axis`; negative when the
// projections overlap.
double projection_gap(const std::array<Vec2, 4>& a, const std::array<Vec2, 4>& b, Vec2 axis) {
  double a_min = std::numeric_limits<double>::infinity(), a_max = -a_min;
  double b_min = a_min, b_max = -a_min;
  for (const Vec2& p : a) {
    const double d = dot(p, axis);
    a_min = std::min(a_min, d);
    a_max = std::max(a_max, d);
  }
  for (const Vec2& p : b) {
    const double d = dot(p, axis);
    b_min = std::min(b_min, d);
    b_max = std::max(b_max, d);
  }
  return std::max(b_min - a_max, a_min - b_max);
}

}  // namespace

std::vector<ActorState> World::others() const {
  std::vector<ActorState> out;
  out.reserve(npcs.size() + obstacles.size());
  for (const NpcRuntime& npc : npcs) out.push_back(npc.state);
  out.insert(out.end(), obstacles.begin(), obstacles.end());
  return out;
}

World initial_world(const Scenario& scenario) {
  World w;
  w.ego = scenario.ego;
  w.ego.kind = ActorKind::kEgoVehicle;
  w.ego_pose = project_to_route(w.ego.position, w.ego.heading, scenario.route);
  w.prev_pose = w.ego_pose;
  for (const Npc& npc : scenario.npcs) {
    NpcRuntime rt{npc.state, npc.script, 0.0, npc.state.position};
    if (npc.script.kind == ActorScript::Kind::kWaypointFollower) {
      rt.state.heading = along_path(rt.path_origin, npc.script.waypoints, 0.0, npc.state.heading).heading;
    }
    w.npcs.push_back(rt);
  }
  w.obstacles = scenario.obstacles;
  return w;
}

World step_world(const World& world, const EgoAction& action, const Route& route,
                 const RewardConfig& config) {
  const double dt = config.dt;
  World next = world;
  next.step = world.step + 1;
  next.time = next.step * dt;

  ActorState& ego = next.ego;
  const double accel = std::clamp(action.accel, -config.a_comfort_max, config.a_comfort_max);
  const double v_old = world.ego.speed_long;
  const double v_new = std::clamp(v_old + accel * dt, 0.0, config.v_max);
  const double mid_heading = world.ego.heading + 0.5 * action.steering_rate * dt;
  ego.position = ego.position + (0.5 * (v_old + v_new) * dt) * unit_from_angle(mid_heading);
  ego.heading = wrap_angle(world.ego.heading + action.steering_rate * dt);
  ego.speed_long = v_new;
  ego.speed_lat = 0.0;
  ego.accel_long = (v_new - v_old) / dt;
  next.jerk = (ego.accel_long - world.ego.accel_long) / dt;
  next.steering_rate = action.steering_rate;
  next.prev_pose = world.ego_pose;
  next.ego_pose = project_to_route(ego.position, ego.heading, route);

  for (NpcRuntime& npc : next.npcs) step_npc(npc, world, dt);
  return next;
}

std::array<Vec2, 4> footprint(const ActorState& a) {
  const Vec2 f = unit_from_angle(a.heading);
  const Vec2 l{-f.y, f.x};
  const Vec2 hf = (0.5 * a.length) * f;
  const Vec2 hl = (0.5 * a.width) * l;
  return {a.position - hf - hl, a.position + hf - hl, a.position + hf + hl, a.position - hf + hl};
}

bool rectangles_overlap(const ActorState& a, const ActorState& b) {
  const auto pa = footprint(a);
  const auto pb = footprint(b);
  const Vec2 fa = unit_from_angle(a.heading);
  const Vec2 fb = unit_from_angle(b.heading);
  for (const Vec2 axis : {fa, Vec2{-fa.y, fa.x}, fb, Vec2{-fb.y, fb.x}}) {
    if (projection_gap(pa, pb, axis) > 0.0) return false;
  }
  return true;
}

bool detect_collision(const ActorState& ego, std::span<const ActorState> actors) {
  return std::any_of(actors.begin(), actors.end(),
                     [&](const ActorState& other) { return rectangles_overlap(ego, other); });
}

bool check_offroad(const RouteFramePose& pose, const ActorState& ego, const Route& route) {
  return std::abs(pose.lateral_offset) > 0.5 * route.lane_width() + 0.5 * ego.width;
}

}  // namespace riskrl::sim
