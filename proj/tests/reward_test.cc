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


#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "riskrl/reward.h"

namespace riskrl::reward {
namespace {

const RewardConfig kDefaults{};

TEST(LevelWeight, PowersOfBeta) {
  EXPECT_DOUBLE_EQ(level_weight(1, 0.25), 1.0);
  EXPECT_DOUBLE_EQ(level_weight(2, 0.25), 0.25);
  EXPECT_DOUBLE_EQ(level_weight(3, 0.25), 0.0625);
  EXPECT_DOUBLE_EQ(level_weight(3, 0.5), 0.25);
  EXPECT_THROW(level_weight(0, 0.25), std::invalid_argument);
}

TEST(Terminal, CollisionScalesWithSpeed) {
  EXPECT_DOUBLE_EQ(collision_penalty(0.0, 6.0), -0.5);
  EXPECT_DOUBLE_EQ(collision_penalty(6.0, 6.0), -1.0);
  EXPECT_DOUBLE_EQ(collision_penalty(3.0, 6.0), -0.75);
  EXPECT_DOUBLE_EQ(collision_penalty(9.0, 6.0), -1.0);
}

TEST(Terminal, SuccessUsesStrictThreshold) {
  EXPECT_DOUBLE_EQ(success_reward(0.2, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(success_reward(-0.2, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(success_reward(1.0, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(success_reward(0.5, 0.5), 0.5);
}

TEST(Terminal, Outcomes) {
  ActorState ego;
  ego.kind = ActorKind::kEgoVehicle;
  ego.speed_long = 6.0;
  const RouteFramePose pose{};
  EXPECT_DOUBLE_EQ(terminal_reward(Outcome::kCollision, ego, pose, kDefaults), -50.0);
  EXPECT_DOUBLE_EQ(terminal_reward(Outcome::kOffRoad, ego, pose, kDefaults), -50.0);
  EXPECT_DOUBLE_EQ(terminal_reward(Outcome::kTimeout, ego, pose, kDefaults), 0.0);
  EXPECT_DOUBLE_EQ(terminal_reward(Outcome::kSuccess, ego, pose, kDefaults), 50.0);
  EXPECT_THROW(terminal_reward(Outcome::kNone, ego, pose, kDefaults), ContractViolation);
}

TEST(TrafficRules, ViolationsDoNotStack) {
  EXPECT_DOUBLE_EQ(traffic_rule_reward({}), 0.0);
  EXPECT_DOUBLE_EQ(traffic_rule_reward({std::string(kSpeeding)}), -1.0);
  EXPECT_DOUBLE_EQ(traffic_rule_reward({std::string(kSpeeding), "red_light"}), -1.0);
}

TEST(Progress, NormalizedByMaximumStep) {
  EXPECT_DOUBLE_EQ(progress_reward(10.0, 10.0, kDefaults), 0.0);
  EXPECT_NEAR(progress_reward(10.6, 10.0, kDefaults), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(progress_reward(0.6, 0.0, kDefaults), 1.0);
  EXPECT_NEAR(progress_reward(10.3, 10.0, kDefaults), 0.5, 1e-12);
  EXPECT_DOUBLE_EQ(progress_reward(9.0, 10.0, kDefaults), 0.0);
}

TEST(DrivingStyle, Examples) {
  EXPECT_DOUBLE_EQ(driving_style_reward(4.0, 0.0, 3.5, kDefaults), 0.0);
  EXPECT_DOUBLE_EQ(driving_style_reward(2.0, 0.0, 3.5, kDefaults), -0.25);
  EXPECT_DOUBLE_EQ(driving_style_reward(4.0, 1.75, 3.5, kDefaults), -0.25);
  EXPECT_DOUBLE_EQ(driving_style_reward(0.0, 10.0, 3.5, kDefaults), -1.0);
}

TEST(Comfort, Examples) {
  EXPECT_DOUBLE_EQ(comfort_reward(0.0, 0.0, 0.0, 4.0, kDefaults), 0.0);
  EXPECT_DOUBLE_EQ(comfort_reward(8.0, 4.0 * 0.3, 8.0 / 0.1, 4.0, kDefaults), -1.0);
  EXPECT_NEAR(comfort_reward(4.0, 0.0, 0.0, 4.0, kDefaults), -1.0 / 6.0, 1e-15);
  EXPECT_DOUBLE_EQ(comfort_reward(-20.0, 0.0, 0.0, 0.0, kDefaults), -1.0 / 3.0);
}

TEST(Combine, OnlyLevelOneActive) {
  RewardBreakdown b;
  b.l1_progress = 1.0;
  EXPECT_DOUBLE_EQ(combine_levels(b, kDefaults), 1.0);
}

TEST(Combine, HandEvaluatedExample) {
  RewardBreakdown b;
  b.l0 = -1.0;
  b.l1_progress = 0.5;
  b.l1_risk = -0.7;
  b.l2_style = -0.25;
  b.l3_comfort = -1.0 / 6.0;
  const double expected = -1.0 + 1.0 * (0.5 - 0.7) + 0.25 * -0.25 + 0.0625 * (-1.0 / 6.0);
  EXPECT_NEAR(combine_levels(b, kDefaults), expected, 1e-15);
  EXPECT_NEAR(combine_levels(b, kDefaults), -1.2729, 1e-4);
}

StepContext base_context() {
  StepContext ctx;
  ctx.ego.kind = ActorKind::kEgoVehicle;
  ctx.ego.speed_long = 4.0;
  ctx.pose.station = 10.4;
  ctx.prev_pose.station = 10.0;
  return ctx;
}

TEST(EvaluateStep, TerminalReplacesSum) {
  StepContext ctx = base_context();
  ctx.outcome = Outcome::kCollision;
  ctx.others.push_back(ActorState{});
  ctx.others.back().position = {1.0, 0.0};
  const RewardBreakdown b = total_reward(ctx, kDefaults);
  EXPECT_DOUBLE_EQ(b.terminal, -50.0 * (0.5 + 0.5 * 4.0 / 6.0));
  EXPECT_DOUBLE_EQ(b.total, b.terminal);
  EXPECT_DOUBLE_EQ(b.l1_risk, -1.0);  // reported even though not summed
}

TEST(EvaluateStep, TimeoutKeepsShapedSum) {
  StepContext ctx = base_context();
  ctx.outcome = Outcome::kTimeout;
  const RewardBreakdown b = total_reward(ctx, kDefaults);
  EXPECT_DOUBLE_EQ(b.terminal, 0.0);
  EXPECT_DOUBLE_EQ(b.total, combine_levels(b, kDefaults));
}

TEST(EvaluateStep, LevelsMatchComponents) {
  StepContext ctx = base_context();
  ctx.pose.lateral_offset = 0.7;
  ctx.steering_rate = 0.2;
  ctx.jerk = 5.0;
  ctx.ego.accel_long = 1.5;
  ctx.violations.insert(std::string(kSpeeding));
  const RewardBreakdown b = total_reward(ctx, kDefaults);
  EXPECT_DOUBLE_EQ(b.l0, -1.0);
  EXPECT_DOUBLE_EQ(b.l1_progress, progress_reward(10.4, 10.0, kDefaults));
  EXPECT_DOUBLE_EQ(b.l1_risk, 0.0);
  EXPECT_DOUBLE_EQ(b.l2_style, driving_style_reward(4.0, 0.7, 3.5, kDefaults));
  EXPECT_DOUBLE_EQ(b.l3_comfort, comfort_reward(1.5, 0.2, 5.0, 4.0, kDefaults));
  EXPECT_DOUBLE_EQ(b.total, combine_levels(b, kDefaults));
}

TEST(EvaluateStep, RejectsInconsistentContexts) {
  StepContext ctx = base_context();
  ctx.lane_width = 0.0;
  EXPECT_THROW(total_reward(ctx, kDefaults), ContractViolation);
  ctx = base_context();
  ctx.jerk = std::nan("");
  EXPECT_THROW(total_reward(ctx, kDefaults), ContractViolation);
  ctx = base_context();
  ctx.ego.kind = ActorKind::kNpcVehicle;
  EXPECT_THROW(total_reward(ctx, kDefaults), ContractViolation);
  ctx = base_context();
  ctx.ego.speed_long = -1.0;
  EXPECT_THROW(total_reward(ctx, kDefaults), ContractViolation);
}

TEST(EvaluateStep, RewardDecreasesWithAnyViolation) {
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    StepContext ctx = base_context();
    ctx.ego.speed_long = 6.0 * u(gen);
    ctx.pose.lateral_offset = u(gen) - 0.5;
    const double clean = total_reward(ctx, kDefaults).total;
    ctx.violations.insert("any_rule");
    EXPECT_DOUBLE_EQ(total_reward(ctx, kDefaults).total, clean - 1.0);
  }
}

}  // namespace
}  // namespace riskrl::reward
