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


#include "riskrl/reward.h"

#include <algorithm>
#include <cmath>

namespace riskrl::reward {
namespace {

// Speed floor for the steering-rate normalization.
constexpr double kSteeringSpeedFloor = 0.1;

double clamped_ratio(double numerator, double denominator) {
  return std::min(std::abs(numerator) / denominator, 1.0);
}

void check_context(const StepContext& ctx) {
  if (!std::isfinite(ctx.steering_rate) || !std::isfinite(ctx.jerk)) {
    throw ContractViolation("steering_rate and jerk must be finite");
  }
  if (!std::isfinite(ctx.pose.station) || !std::isfinite(ctx.prev_pose.station) ||
      !std::isfinite(ctx.pose.lateral_offset)) {
    throw ContractViolation("route poses must be finite");
  }
  if (!(ctx.lane_width > 0.0)) throw ContractViolation("lane_width must be positive");
  if (!std::isfinite(ctx.ego.speed_long) || ctx.ego.speed_long < 0.0) {
    throw ContractViolation("ego speed must be finite and non-negative");
  }
  if (ctx.ego.kind != ActorKind::kEgoVehicle) {
    throw ContractViolation("context ego must be of kind EgoVehicle");
  }
}

}  // namespace

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kNone:
      return "None";
    case Outcome::kSuccess:
      return "Success";
    case Outcome::kCollision:
      return "Collision";
    case Outcome::kOffRoad:
      return "OffRoad";
    case Outcome::kTimeout:
      return "Timeout";
  }
  return "Unknown";
}

double level_weight(int level, double beta) {
  if (level < 1) throw std::invalid_argument("level index must be >= 1");
  return std::pow(beta, level - 1);
}

double collision_penalty(double v, double v_max) {
  const double ratio = std::clamp(v, 0.0, v_max) / v_max;
  return -1.0 * (0.5 + 0.5 * ratio);
}

double success_reward(double offset, double threshold) {
  return std::abs(offset) < threshold ? 1.0 : 0.5;
}

double terminal_reward(Outcome outcome, const ActorState& ego, const RouteFramePose& pose,
                       const RewardConfig& config) {
  switch (outcome) {
    case Outcome::kSuccess:
      return config.w_terminal * success_reward(pose.lateral_offset, config.offset_threshold);
    case Outcome::kCollision:
      return config.w_terminal * collision_penalty(ego.speed(), config.v_max);
    case Outcome::kOffRoad:
      return -config.w_terminal;
    case Outcome::kTimeout:
      return 0.0;
    case Outcome::kNone:
      break;
  }
  throw ContractViolation("terminal_reward requires a final outcome");
}

double traffic_rule_reward(const std::set<std::string>& violations) {
  return violations.empty() ? 0.0 : -1.0;
}

double progress_reward(double station, double prev_station, const RewardConfig& config) {
  return std::clamp((station - prev_station) / (config.v_max * config.dt), 0.0, 1.0);
}

double driving_style_reward(double v, double offset, double lane_width, const RewardConfig& config) {
  return -config.w_vel * clamped_ratio(v - config.v_desired, config.v_desired) -
         config.w_lane * clamped_ratio(offset, lane_width);
}

double comfort_reward(double accel, double steering_rate, double jerk, double v,
                      const RewardConfig& config) {
  const double a_max = config.a_comfort_max;
  const double steer_max = std::max(std::abs(v), kSteeringSpeedFloor) * config.kappa_max;
  return -(clamped_ratio(accel, a_max) + clamped_ratio(steering_rate, steer_max) +
           clamped_ratio(jerk, a_max / config.dt)) /
         3.0;
}

double combine_levels(const RewardBreakdown& l, const RewardConfig& config) {
  return l.l0 + level_weight(1, config.beta) * (l.l1_progress + l.l1_risk) +
         level_weight(2, config.beta) * l.l2_style + level_weight(3, config.beta) * l.l3_comfort;
}

StepEvaluation evaluate_step(const StepContext& ctx, const RewardConfig& config) {
  check_context(ctx);
  StepEvaluation eval;
  eval.risk = risk::risk_reward(ctx.ego, ctx.others, config);
  RewardBreakdown& b = eval.breakdown;
  b.l0 = traffic_rule_reward(ctx.violations);
  b.l1_progress = progress_reward(ctx.pose.station, ctx.prev_pose.station, config);
  b.l1_risk = eval.risk.value;
  b.l2_style = driving_style_reward(ctx.ego.speed(), ctx.pose.lateral_offset, ctx.lane_width, config);
  b.l3_comfort =
      comfort_reward(ctx.ego.accel_long, ctx.steering_rate, ctx.jerk, ctx.ego.speed(), config);
  if (ctx.outcome != Outcome::kNone) {
    b.terminal = terminal_reward(ctx.outcome, ctx.ego, ctx.pose, config);
  }
  b.total = is_terminal(ctx.outcome) ? b.terminal : combine_levels(b, config);
  return eval;
}

RewardBreakdown total_reward(const StepContext& ctx, const RewardConfig& config) {
  return evaluate_step(ctx, config).breakdown;
}

}  // namespace riskrl::reward
