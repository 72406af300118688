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


#ifndef RISKRL_EPISODE_H_
#define RISKRL_EPISODE_H_

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/reward.h"
#include "riskrl/risk.h"
#include "riskrl/scenario.h"
#include "riskrl/world.h"

namespace riskrl::sim {

struct Observation {
  const World& world;
  const Scenario& scenario;
  const RewardConfig& config;
};

using Policy = std::function<EgoAction(const Observation&)>;

// lane_follower, full_throttle, wait, idm, replay.
const std::vector<std::string>& builtin_policy_names();
// Throws std::invalid_argument naming the built-ins for unknown names.
Policy make_policy(std::string_view name);

struct StepRecord {
  int step = 0;
  double time = 0.0;
  ActorState ego;
  RouteFramePose pose;
  std::vector<ActorState> others;
  reward::RewardBreakdown reward;
  std::vector<risk::RiskAssessment> assessments;
  std::optional<std::size_t> riskiest;
};

struct EpisodeTrace {
  std::string scenario_name;
  std::vector<StepRecord> steps;
  reward::Outcome outcome = reward::Outcome::kNone;
  double cumulative_reward = 0.0;
  double route_progress = 0.0;    // final station / goal station, in [0, 1]
  double average_velocity = 0.0;  // mean ego speed over steps
};

// Steps until Success, Collision or OffRoad, or Timeout after max_steps.
EpisodeTrace run_episode(const Scenario& scenario, const Policy& policy, const RewardConfig& config);

// First sampled time at which the circumcircles overlap under constant
// velocities, sweeping t = k * dt_fine up to `horizon`; +inf if none.
double brute_force_ttc(const ActorState& a, const ActorState& b, double dt_fine, double horizon);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct MetricSummary {
  std::size_t episodes = 0;
  double success_pct = 0.0;
  double offroad_pct = 0.0;
  double collision_pct = 0.0;
  double timeout_pct = 0.0;
  MeanStd cumulative_reward;
  MeanStd route_progress;
  MeanStd average_velocity;
};

// Throws std::invalid_argument on an empty input.
MetricSummary aggregate_metrics(const std::vector<EpisodeTrace>& traces);

// One row per step; header listed by trace_columns().
const std::vector<std::string_view>& trace_columns();
void write_trace_csv(const EpisodeTrace& trace, std::ostream& out);
std::string summary_json(const EpisodeTrace& trace);

}  // namespace riskrl::sim

#endif  // RISKRL_EPISODE_H_
