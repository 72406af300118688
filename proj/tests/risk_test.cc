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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "riskrl/episode.h"
#include "riskrl/risk.h"

namespace riskrl::risk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const RewardConfig kDefaults{};

ActorState car(double x, double y, double heading = 0.0, double speed = 0.0) {
  ActorState a;
  a.position = {x, y};
  a.heading = heading;
  a.speed_long = speed;
  return a;
}

ActorState obstacle(double x, double y) {
  ActorState a = car(x, y);
  a.length = 1.0;
  a.width = 1.0;
  a.kind = ActorKind::kStaticObstacle;
  return a;
}

TEST(Classify, HeadingDifferences) {
  const ActorState ego = car(0.0, 0.0);
  EXPECT_EQ(classify_interaction(ego, car(10.0, 0.0)), InteractionMode::kSameDirection);
  EXPECT_EQ(classify_interaction(ego, car(10.0, 0.0, std::numbers::pi)),
            InteractionMode::kOppositeDirection);
  EXPECT_EQ(classify_interaction(ego, car(10.0, 0.0, std::numbers::pi / 2.0)),
            InteractionMode::kIntersecting);
  EXPECT_EQ(classify_interaction(ego, obstacle(10.0, 0.0)), InteractionMode::kStaticObstacle);
  // Boundaries belong to the parallel classes, and the test is symmetric in sign.
  EXPECT_EQ(classify_interaction(ego, car(0.0, 0.0, -std::numbers::pi / 4.0)),
            InteractionMode::kSameDirection);
  EXPECT_EQ(classify_interaction(ego, car(0.0, 0.0, 3.0 * std::numbers::pi / 4.0)),
            InteractionMode::kOppositeDirection);
}

TEST(ClearanceCenter, Examples) {
  const ActorState ego = car(0.0, 0.0);
  const Clearance same = clearance_center(ego, car(5.0, 0.0), InteractionMode::kSameDirection);
  EXPECT_DOUBLE_EQ(same.c_x, 4.5);
  EXPECT_DOUBLE_EQ(same.c_y, 1.8);
  const Clearance st = clearance_center(ego, obstacle(5.0, 0.0), InteractionMode::kStaticObstacle);
  EXPECT_DOUBLE_EQ(st.c_x, 2.75);
  EXPECT_DOUBLE_EQ(st.c_y, 1.4);
  const Clearance cross = clearance_center(ego, car(5.0, 0.0), InteractionMode::kIntersecting);
  const double expected = 2.0 * std::sqrt(2.25 * 2.25 + 0.9 * 0.9);
  EXPECT_NEAR(cross.c_x, expected, 1e-12);
  EXPECT_NEAR(cross.c_y, expected, 1e-12);
  EXPECT_NEAR(expected, 4.847, 1e-3);
}

TEST(Ellipsoid, CenterAndOuterEdge) {
  const EllipseParams p{4.5, 1.8, 2.0, 0.5, 4.0, 2.0, 4.0};
  EXPECT_DOUBLE_EQ(ellipsoid_penalty(4.5, 1.8, p), 1.0);
  EXPECT_DOUBLE_EQ(ellipsoid_penalty(1.0, 0.3, p), 1.0);
  EXPECT_DOUBLE_EQ(ellipsoid_penalty(-2.0, 0.0, p), 1.0);
  EXPECT_NEAR(ellipsoid_penalty(6.5, 1.8, p), 0.0625, 1e-15);
  EXPECT_NEAR(ellipsoid_penalty(-6.5, -1.8, p), 0.0625, 1e-15);
}

TEST(Clearance, AccelAndStopDistances) {
  EXPECT_NEAR(accel_distance(6.0, 0.3, 6.0), 2.07, 1e-12);
  EXPECT_NEAR(accel_distance(0.0, 0.3, 6.0), 0.27, 1e-12);
  EXPECT_DOUBLE_EQ(accel_distance(6.0, 0.0, 6.0), 0.0);
  EXPECT_NEAR(stop_distance(6.0, 0.3, 6.0, 4.0), 7.605, 1e-12);
  EXPECT_NEAR(stop_distance(4.0, 0.3, 6.0, 4.0), 4.205, 1e-12);
  EXPECT_DOUBLE_EQ(stop_distance(0.0, 0.0, 6.0, 4.0), 0.0);
}

TEST(Clearance, Leading) {
  EXPECT_NEAR(leading_clearance(6.0, 4.0, Axis::kLongitudinal, kDefaults), 8.675, 1e-12);
  EXPECT_NEAR(leading_clearance(6.0, 0.0, Axis::kLongitudinal, kDefaults), 9.675, 1e-12);
  EXPECT_DOUBLE_EQ(leading_clearance(0.0, 20.0, Axis::kLongitudinal, kDefaults), 2.0);
}

TEST(Clearance, Approach) {
  EXPECT_NEAR(approach_clearance(4.0, 4.0, Axis::kLongitudinal, kDefaults), 11.35, 1e-12);
  RewardConfig no_reaction;
  no_reaction.rho = 0.0;
  EXPECT_DOUBLE_EQ(approach_clearance(0.0, 0.0, Axis::kLongitudinal, no_reaction), 2.0);
  EXPECT_DOUBLE_EQ(approach_clearance(0.0, 0.0, Axis::kLateral, no_reaction), 0.5);
  // The stationary other still covers its reaction-phase distance plus the
  // braking distance from its reaction-phase speed: 0.27 + 1.8^2 / 8.
  EXPECT_NEAR(approach_clearance(6.0, 0.0, Axis::kLongitudinal, kDefaults), 9.675 + 0.675,
              1e-12);
}

TEST(Clearance, LateralAway) {
  EXPECT_NEAR(away_clearance(0.1, 0.1, kDefaults), 0.009, 1e-12);
  EXPECT_DOUBLE_EQ(away_clearance(1.0, 0.1, kDefaults), 0.0);
  RewardConfig no_reaction;
  no_reaction.rho = 0.0;
  EXPECT_DOUBLE_EQ(away_clearance(0.0, 0.0, no_reaction), 0.0);
}

TEST(Ttc, HeadOn) {
  ActorState a = car(0.0, 0.0, 0.0, 5.0);
  ActorState b = car(20.0, 0.0, std::numbers::pi, 5.0);
  // Radii of 2 m each.
  a.length = b.length = 4.0;
  a.width = b.width = 1e-9;
  EXPECT_NEAR(ttc_circle(a, b), 1.6, 1e-12);
}

TEST(Ttc, ParallelAndOverlapping) {
  EXPECT_EQ(ttc_circle(car(0.0, 0.0, 0.0, 5.0), car(0.0, 10.0, 0.0, 5.0)), kInf);
  EXPECT_EQ(ttc_circle(car(0.0, 0.0, 0.0, 5.0), car(30.0, 0.0, 0.0, 8.0)), kInf);
  EXPECT_EQ(ttc_circle(car(0.0, 0.0), car(1.0, 0.0)), 0.0);
}

TEST(Ttc, MatchesBruteForceSweep) {
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> pos(-25.0, 25.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> spd(0.0, 8.0);
  constexpr double kHorizon = 20.0;
  for (int i = 0; i < 200; ++i) {
    const ActorState a = car(pos(gen), pos(gen), ang(gen), spd(gen));
    const ActorState b = car(pos(gen), pos(gen), ang(gen), spd(gen));
    const double analytic = ttc_circle(a, b);
    const double swept = sim::brute_force_ttc(a, b, 1e-3, kHorizon);
    if (analytic > kHorizon) {
      EXPECT_EQ(swept, kInf);
    } else {
      EXPECT_NEAR(analytic, swept, 1e-3);
    }
  }
}

TEST(TtcPenalty, Boundaries) {
  EXPECT_DOUBLE_EQ(ttc_penalty(7.0, kDefaults), 0.0);
  EXPECT_DOUBLE_EQ(ttc_penalty(20.0, kDefaults), 0.0);
  EXPECT_DOUBLE_EQ(ttc_penalty(0.7, kDefaults), 1.0);
  EXPECT_DOUBLE_EQ(ttc_penalty(0.0, kDefaults), 1.0);
  EXPECT_DOUBLE_EQ(ttc_penalty(kInf, kDefaults), 0.0);
  EXPECT_NEAR(ttc_penalty(1.6, kDefaults), -std::log10(1.6 / 7.0), 1e-12);
  EXPECT_NEAR(ttc_penalty(1.6, kDefaults), 0.641, 1e-3);
}

TEST(GeometricRisk, Examples) {
  const ActorState ego = car(0.0, 0.0);
  EXPECT_DOUBLE_EQ(geometric_risk(ego, car(4.5, 1.8), InteractionMode::kSameDirection, kDefaults),
                   1.0);
  EXPECT_NEAR(geometric_risk(ego, car(8.5, 1.8), InteractionMode::kSameDirection, kDefaults),
              std::pow(17.0, -4.0), 1e-15);
  EXPECT_LT(geometric_risk(ego, car(50.0, 10.0), InteractionMode::kSameDirection, kDefaults),
            1e-6);
}

TEST(DynamicRisk, StaticObstacleAhead) {
  const ActorState ego = car(0.0, 0.0, 0.0, 6.0);
  const ActorState touching = obstacle(2.75, 0.0);
  EXPECT_DOUBLE_EQ(
      dynamic_risk(ego, touching, InteractionMode::kStaticObstacle, kDefaults).penalty, 1.0);
  const double gx = (30.0 - 2.75) / 9.675;
  const double expected = std::pow(gx * gx + 1.0, -4.0);
  const double got =
      dynamic_risk(ego, obstacle(30.0, 0.0), InteractionMode::kStaticObstacle, kDefaults).penalty;
  EXPECT_NEAR(got, expected, 1e-15);
  EXPECT_NEAR(got, 1.6e-4, 0.1e-4);
}

TEST(DynamicRisk, CrossingUsesTtc) {
  // Perpendicular paths converging on the origin.
  ActorState ego = car(-8.0, 0.0, 0.0, 5.0);
  ActorState other = car(0.0, -8.0, std::numbers::pi / 2.0, 5.0);
  const double t = ttc_circle(ego, other);
  const DynamicRisk dyn = dynamic_risk(ego, other, InteractionMode::kIntersecting, kDefaults);
  EXPECT_DOUBLE_EQ(dyn.ttc, t);
  EXPECT_NEAR(dyn.penalty, -std::log10(std::clamp(t / 7.0, 0.1, 1.0)), 1e-12);
}

TEST(DynamicRisk, FasterEgoNeedsMoreRoom) {
  const ActorState slow = car(0.0, 0.0, 0.0, 2.0);
  const ActorState fast = car(0.0, 0.0, 0.0, 6.0);
  const ActorState lead = car(20.0, 0.0, 0.0, 2.0);
  EXPECT_GT(dynamic_risk(fast, lead, InteractionMode::kSameDirection, kDefaults).penalty,
            dynamic_risk(slow, lead, InteractionMode::kSameDirection, kDefaults).penalty);
}

TEST(RiskReward, NoActorsIsZero) {
  const RiskResult r = risk_reward(car(0.0, 0.0), {}, kDefaults);
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_FALSE(r.riskiest.has_value());
}

TEST(RiskReward, OverlapGivesMinusOne) {
  const std::vector<ActorState> others{car(1.0, 0.0)};
  EXPECT_DOUBLE_EQ(risk_reward(car(0.0, 0.0), others, kDefaults).value, -1.0);
}

TEST(RiskReward, SelectsRiskiestActor) {
  const ActorState ego = car(0.0, 0.0, 0.0, 4.0);
  const std::vector<ActorState> others{car(40.0, 0.0, 0.0, 4.0), car(9.0, 0.0, 0.0, 4.0),
                                       car(25.0, 0.0, 0.0, 4.0)};
  const RiskResult r = risk_reward(ego, others, kDefaults);
  ASSERT_TRUE(r.riskiest.has_value());
  EXPECT_EQ(*r.riskiest, 1u);
  EXPECT_DOUBLE_EQ(r.value, -r.assessments[1].combined);
  for (const auto& a : r.assessments) {
    EXPECT_NEAR(a.combined, 0.5 * a.geom_penalty + 0.5 * a.dyn_penalty, 1e-15);
  }
}

TEST(RiskReward, ValueIsNegatedMaximum) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> pos(-30.0, 30.0);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    const ActorState ego = car(0.0, 0.0, 0.0, 4.0);
    std::vector<ActorState> others;
    for (int k = 0; k < 4; ++k) others.push_back(car(pos(gen), pos(gen), ang(gen), 3.0));
    const RiskResult r = risk_reward(ego, others, kDefaults);
    double worst = 0.0;
    for (const auto& o : others) worst = std::max(worst, assess(ego, o, kDefaults).combined);
    EXPECT_DOUBLE_EQ(r.value, -worst);
    EXPECT_GE(r.value, -1.0);
    EXPECT_LE(r.value, 0.0);
  }
}

TEST(Ellipsoid, MonotoneAlongRays) {
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  const EllipseParams p{4.5, 1.8, 2.0, 0.5, 4.0, 2.0, 4.0};
  for (int i = 0; i < 200; ++i) {
    const double th = ang(gen);
    double prev = 1.0;
    for (double r = 0.0; r < 40.0; r += 0.05) {
      const double v = ellipsoid_penalty(r * std::cos(th), r * std::sin(th), p);
      EXPECT_LE(v, prev + 1e-15);
      prev = v;
    }
  }
}

}  // namespace
}  // namespace riskrl::risk
