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


#ifndef RISKRL_REWARD_H_
#define RISKRL_REWARD_H_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/risk.h"
#include "riskrl/types.h"

namespace riskrl::reward {

enum class Outcome { kNone, kSuccess, kCollision, kOffRoad, kTimeout };

std::string_view to_string(Outcome outcome);

// Ends the episode through the terminal branch of the reward.
constexpr bool is_terminal(Outcome outcome) {
  return outcome == Outcome::kSuccess || outcome == Outcome::kCollision ||
         outcome == Outcome::kOffRoad;
}

// Thrown when a StepContext is internally inconsistent.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr std::string_view kSpeeding = "speeding";

struct StepContext {
  ActorState ego;
  RouteFramePose pose;
  RouteFramePose prev_pose;
  std::vector<ActorState> others;
  double lane_width = 3.5;
  double steering_rate = 0.0;  // rad/s
  double jerk = 0.0;           // m/s^3
  std::set<std::string> violations;
  Outcome outcome = Outcome::kNone;
};

struct RewardBreakdown {
  double terminal = 0.0;
  double l0 = 0.0;
  double l1_progress = 0.0;
  double l1_risk = 0.0;
  double l2_style = 0.0;
  double l3_comfort = 0.0;
  double total = 0.0;
};

// beta^(level - 1).
double level_weight(int level, double beta);

double collision_penalty(double v, double v_max);
double success_reward(double offset, double threshold);
// Requires outcome != kNone.
double terminal_reward(Outcome outcome, const ActorState& ego, const RouteFramePose& pose,
                       const RewardConfig& config);
double traffic_rule_reward(const std::set<std::string>& violations);
// Distance gained along the route per step, normalized by v_max * dt, in [0, 1].
double progress_reward(double station, double prev_station, const RewardConfig& config);
double driving_style_reward(double v, double offset, double lane_width, const RewardConfig& config);
double comfort_reward(double accel, double steering_rate, double jerk, double v,
                      const RewardConfig& config);

// Level values already evaluated, combined per the level hierarchy.
// The risk term shares the level-one weight with progress.
double combine_levels(const RewardBreakdown& levels, const RewardConfig& config);

struct StepEvaluation {
  RewardBreakdown breakdown;
  risk::RiskResult risk;
};

StepEvaluation evaluate_step(const StepContext& ctx, const RewardConfig& config);
RewardBreakdown total_reward(const StepContext& ctx, const RewardConfig& config);

}  // namespace riskrl::reward

#endif  // RISKRL_REWARD_H_
