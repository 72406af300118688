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


#ifndef RISKRL_RISK_H_
#define RISKRL_RISK_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/types.h"

namespace riskrl::risk {

enum class InteractionMode { kSameDirection, kOppositeDirection, kIntersecting, kStaticObstacle };

std::string_view to_string(InteractionMode mode);
std::optional<InteractionMode> parse_mode(std::string_view name);

enum class Axis { kLongitudinal, kLateral };

// Shape of one risk ellipse: centers are the minimum clearances, radii the
// desired clearances beyond them.
struct EllipseParams {
  double c_x = 0.0;
  double c_y = 0.0;
  double r_x = 1.0;
  double r_y = 1.0;
  double p_x = 2.0;
  double p_y = 2.0;
  double p_outer = 4.0;
};

struct RiskAssessment {
  InteractionMode mode = InteractionMode::kSameDirection;
  double geom_penalty = 0.0;
  double dyn_penalty = 0.0;
  double combined = 0.0;
  double ttc = 0.0;  // +inf unless mode is kIntersecting
};

struct Clearance {
  double c_x = 0.0;
  double c_y = 0.0;
};

InteractionMode classify_interaction(const ActorState& ego, const ActorState& other);

Clearance clearance_center(const ActorState& ego, const ActorState& other, InteractionMode mode);

// [((|dx| - c_x)+ / r_x)^p_x + ((|dy| - c_y)+ / r_y)^p_y + 1]^-p_outer, in (0, 1].
double ellipsoid_penalty(double d_x, double d_y, const EllipseParams& params);

// Distance covered while accelerating at a_acc for the reaction time.
double accel_distance(double v, double rho, double a_acc);
// Distance to stop at a_brk_min after accelerating for the reaction time.
double stop_distance(double v, double rho, double a_acc, double a_brk_min);

// Worst-case clearance behind a leader that brakes at its maximum rate.
// Floored at the geometric radius of the axis.
double leading_clearance(double v_ego, double v_other, Axis axis, const RewardConfig& config);
// Worst-case clearance between two agents closing on each other. Floored at
// the geometric radius of the axis.
double approach_clearance(double v_ego, double v_other, Axis axis, const RewardConfig& config);
// Lateral clearance when ego moves away at v_ego_away from an agent
// approaching at v_other_toward. Never negative.
double away_clearance(double v_ego_away, double v_other_toward, const RewardConfig& config);

// Time until the circumcircles of a and b first touch under constant
// velocities; 0 if they already overlap, +inf if they never meet.
double ttc_circle(const ActorState& a, const ActorState& b);

// Log-scaled TTC penalty in [0, 1].
double ttc_penalty(double ttc, const RewardConfig& config);

double geometric_risk(const ActorState& ego, const ActorState& other, InteractionMode mode,
                      const RewardConfig& config);

struct DynamicRisk {
  double penalty = 0.0;
  double ttc = 0.0;
};
DynamicRisk dynamic_risk(const ActorState& ego, const ActorState& other, InteractionMode mode,
                         const RewardConfig& config);

RiskAssessment assess(const ActorState& ego, const ActorState& other, const RewardConfig& config);

struct RiskResult {
  double value = 0.0;  // in [-1, 0]
  std::vector<RiskAssessment> assessments;
  std::optional<std::size_t> riskiest;  // index into assessments
};

// The risk objective: negative combined penalty of the riskiest other actor.
RiskResult risk_reward(const ActorState& ego, std::span<const ActorState> others,
                       const RewardConfig& config);

}  // namespace riskrl::risk

#endif  // RISKRL_RISK_H_
