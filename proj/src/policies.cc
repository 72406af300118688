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


#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "riskrl/episode.h"
#include "riskrl/geometry.h"

namespace riskrl::sim {
namespace {

// Lane-keeping gains.
constexpr double kOffsetGain = 1.0;
constexpr double kHeadingGain = 2.0;
constexpr double kSpeedGain = 2.0;

// Intelligent Driver Model parameters.
constexpr double kIdmAccel = 2.0;
constexpr double kIdmDecel = 3.0;
constexpr double kIdmHeadway = 1.5;
constexpr double kIdmMinGap = 2.0;
constexpr double kYieldTtc = 3.0;

double lane_keeping_steer(const Observation& obs) {
  const ActorState& ego = obs.world.ego;
  const RouteFramePose& pose = obs.world.ego_pose;
  const double v = std::max(ego.speed_long, 1.0);
  const double desired_error = -std::atan(kOffsetGain * pose.lateral_offset / v);
  const double limit = std::max(ego.speed_long, 0.1) * obs.config.kappa_max;
  return std::clamp(kHeadingGain * (desired_error - pose.heading_error), -limit, limit);
}

double track_speed(const Observation& obs, double target) {
  const RewardConfig& c = obs.config;
  return std::clamp(kSpeedGain * (target - obs.world.ego.speed_long), -c.a_brk_max_x, c.a_acc_max_x);
}

EgoAction lane_follower(const Observation& obs) {
  return {track_speed(obs, obs.config.v_desired), lane_keeping_steer(obs)};
}

EgoAction full_throttle(const Observation& obs) {
  return {obs.config.a_acc_max_x, lane_keeping_steer(obs)};
}

EgoAction hold_still(const Observation& obs) {
  const double stop = -obs.world.ego.speed_long / obs.config.dt;
  return {std::max(stop, -obs.config.a_brk_max_x), 0.0};
}

EgoAction replay(const Observation& obs) {
  const auto& actions = obs.scenario.ego_actions;
  const auto idx = static_cast<std::size_t>(obs.world.step);
  return idx < actions.size() ? actions[idx] : EgoAction{};
}

// Car following along the route behind the nearest in-lane actor, plus a
// hard brake for crossing traffic on a near collision course.
EgoAction idm(const Observation& obs) {
  const RewardConfig& c = obs.config;
  const Route& route = obs.scenario.route;
  const ActorState& ego = obs.world.ego;
  const double v = ego.speed_long;
  const double v0 = c.v_desired;

  double accel = kIdmAccel * (1.0 - std::pow(v / v0, 4));
  const std::vector<ActorState> others = obs.world.others();
  double best_gap = std::numeric_limits<double>::infinity();
  double leader_speed = 0.0;
  for (const ActorState& other : others) {
    const RouteFramePose p = project_to_route(other.position, other.heading, route);
    if (std::abs(p.lateral_offset) >= 0.5 * (route.lane_width() + other.width)) continue;
    if (p.station <= obs.world.ego_pose.station) continue;
    const double gap = p.station - obs.world.ego_pose.station - 0.5 * (ego.length + other.length);
    if (gap < best_gap) {
      best_gap = gap;
      leader_speed = dot(other.velocity(), route.tangent_at(p.station));
    }
  }
  if (std::isfinite(best_gap)) {
    const double s = std::max(best_gap, 0.1);
    const double desired =
        kIdmMinGap + v * kIdmHeadway + v * (v - leader_speed) / (2.0 * std::sqrt(kIdmAccel * kIdmDecel));
    accel -= kIdmAccel * std::pow(std::max(desired, 0.0) / s, 2);
  }
  for (const ActorState& other : others) {
    if (risk::classify_interaction(ego, other) != risk::InteractionMode::kIntersecting) continue;
    if (relative_displacement(ego, other).dx <= 0.0) continue;
    if (risk::ttc_circle(ego, other) < kYieldTtc) accel = std::min(accel, -c.a_brk_min_x);
  }
  return {std::clamp(accel, -c.a_brk_max_x, c.a_acc_max_x), lane_keeping_steer(obs)};
}

}  // namespace

const std::vector<std::string>& builtin_policy_names() {
  static const std::vector<std::string> names = {"lane_follower", "full_throttle", "wait", "idm",
                                                 "replay"};
  return names;
}

Policy make_policy(std::string_view name) {
  if (name == "lane_follower") return lane_follower;
  if (name == "full_throttle") return full_throttle;
  if (name == "wait") return hold_still;
  if (name == "idm") return idm;
  if (name == "replay") return replay;
  std::string known;
  for (const auto& n : builtin_policy_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown policy '" + std::string(name) + "' (built-ins: " + known + ")");
}

}  // namespace riskrl::sim
