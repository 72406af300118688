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
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "riskrl/episode.h"

namespace riskrl::sim {
namespace {

using reward::Outcome;

const RewardConfig kDefaults{};

std::string source_path(const std::string& rel) { return std::string(RISKRL_SOURCE_DIR) + "/" + rel; }

Scenario shipped(const std::string& name) {
  return load_scenario(source_path("scenarios/" + name + ".yaml"));
}

TEST(Episode, EmptyRoadSucceedsWithoutRisk) {
  const EpisodeTrace t = run_episode(shipped("empty_road"), make_policy("lane_follower"), kDefaults);
  EXPECT_EQ(t.outcome, Outcome::kSuccess);
  EXPECT_DOUBLE_EQ(t.route_progress, 1.0);
  for (const StepRecord& r : t.steps) {
    EXPECT_DOUBLE_EQ(r.reward.l1_risk, 0.0);
    EXPECT_FALSE(r.riskiest.has_value());
  }
  EXPECT_DOUBLE_EQ(t.steps.back().reward.terminal, 50.0);
}

TEST(Episode, FullThrottleHitsObstacle) {
  const EpisodeTrace t = run_episode(shipped("blocked_road"), make_policy("full_throttle"), kDefaults);
  ASSERT_EQ(t.outcome, Outcome::kCollision);
  const StepRecord& last = t.steps.back();
  const double impact = last.ego.speed();
  EXPECT_GT(impact, 0.0);
  EXPECT_NEAR(last.reward.terminal, -50.0 * (0.5 + 0.5 * impact / 6.0), 1e-12);
  EXPECT_DOUBLE_EQ(last.reward.total, last.reward.terminal);
}

TEST(Episode, WaitingBeatsCrashing) {
  const Scenario s = shipped("blocked_road");
  const EpisodeTrace wait = run_episode(s, make_policy("wait"), kDefaults);
  const EpisodeTrace crash = run_episode(s, make_policy("full_throttle"), kDefaults);
  EXPECT_EQ(wait.outcome, Outcome::kTimeout);
  EXPECT_EQ(crash.outcome, Outcome::kCollision);
  EXPECT_GT(wait.cumulative_reward, crash.cumulative_reward);
}

TEST(Episode, TimeoutHasNoTerminalPenalty) {
  const EpisodeTrace t = run_episode(shipped("blocked_road"), make_policy("wait"), kDefaults);
  EXPECT_EQ(t.steps.size(), 200u);
  EXPECT_DOUBLE_EQ(t.steps.back().reward.terminal, 0.0);
  double sum = 0.0;
  for (const auto& r : t.steps) sum += r.reward.total;
  EXPECT_DOUBLE_EQ(t.cumulative_reward, sum);
}

TEST(Episode, SpeedingIsFlagged) {
  RewardConfig c;
  c.speed_limit = 3.0;
  const EpisodeTrace t = run_episode(shipped("empty_road"), make_policy("full_throttle"), c);
  bool flagged = false;
  for (const auto& r : t.steps) {
    if (r.ego.speed() > 3.0) {
      EXPECT_DOUBLE_EQ(r.reward.l0, -1.0);
      flagged = true;
    } else {
      EXPECT_DOUBLE_EQ(r.reward.l0, 0.0);
    }
  }
  EXPECT_TRUE(flagged);
}

TEST(Episode, UnknownPolicyListsBuiltins) {
  try {
    make_policy("teleport");
    FAIL();
  } catch (const std::invalid_argument& e) {
    for (const auto& name : builtin_policy_names()) {
      EXPECT_NE(std::string(e.what()).find(name), std::string::npos) << name;
    }
  }
}

TEST(BruteForceTtc, Examples) {
  ActorState a, b;
  a.length = b.length = 4.0;
  a.width = b.width = 1e-9;
  a.speed_long = 5.0;
  b.position = {20.0, 0.0};
  b.heading = std::numbers::pi;
  b.speed_long = 5.0;
  EXPECT_NEAR(brute_force_ttc(a, b, 1e-4, 10.0), 1.6, 1e-4);
  b.heading = 0.0;
  b.speed_long = 8.0;
  EXPECT_EQ(brute_force_ttc(a, b, 1e-4, 10.0), std::numeric_limits<double>::infinity());
  b.position = {1.0, 0.0};
  EXPECT_EQ(brute_force_ttc(a, b, 1e-4, 10.0), 0.0);
}

EpisodeTrace fake(Outcome o, double reward, double progress, double velocity) {
  EpisodeTrace t;
  t.outcome = o;
  t.cumulative_reward = reward;
  t.route_progress = progress;
  t.average_velocity = velocity;
  return t;
}

TEST(Metrics, CountsOutcomes) {
  const std::vector<EpisodeTrace> all(10, fake(Outcome::kSuccess, 1.0, 1.0, 4.0));
  const MetricSummary a = aggregate_metrics(all);
  EXPECT_DOUBLE_EQ(a.success_pct, 100.0);
  EXPECT_DOUBLE_EQ(a.collision_pct + a.offroad_pct + a.timeout_pct, 0.0);
  const MetricSummary m = aggregate_metrics(
      {fake(Outcome::kSuccess, 0, 0, 0), fake(Outcome::kCollision, 0, 0, 0),
       fake(Outcome::kCollision, 0, 0, 0), fake(Outcome::kTimeout, 0, 0, 0)});
  EXPECT_DOUBLE_EQ(m.success_pct, 25.0);
  EXPECT_DOUBLE_EQ(m.offroad_pct, 0.0);
  EXPECT_DOUBLE_EQ(m.collision_pct, 50.0);
  EXPECT_DOUBLE_EQ(m.timeout_pct, 25.0);
  EXPECT_THROW(aggregate_metrics({}), std::invalid_argument);
}

MeanStd two_pass(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double sq = 0.0;
  for (double x : xs) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(xs.size()))};
}

TEST(Metrics, MeanStdMatchTwoPass) {
  std::mt19937_64 gen(6);
  std::normal_distribution<double> reward(150.0, 60.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<EpisodeTrace> traces;
    std::vector<double> r, p, v;
    for (int i = 0; i < 1 + trial * 7; ++i) {
      traces.push_back(fake(Outcome::kTimeout, reward(gen), unit(gen), 6.0 * unit(gen)));
      r.push_back(traces.back().cumulative_reward);
      p.push_back(traces.back().route_progress);
      v.push_back(traces.back().average_velocity);
    }
    const MetricSummary m = aggregate_metrics(traces);
    const MeanStd er = two_pass(r), ep = two_pass(p), ev = two_pass(v);
    EXPECT_NEAR(m.cumulative_reward.mean, er.mean, 1e-9);
    EXPECT_NEAR(m.cumulative_reward.stddev, er.stddev, 1e-9);
    EXPECT_NEAR(m.route_progress.mean, ep.mean, 1e-12);
    EXPECT_NEAR(m.route_progress.stddev, ep.stddev, 1e-12);
    EXPECT_NEAR(m.average_velocity.mean, ev.mean, 1e-12);
    EXPECT_NEAR(m.average_velocity.stddev, ev.stddev, 1e-12);
  }
}

TEST(Trace, HeaderIsFixed) {
  const EpisodeTrace t = run_episode(shipped("empty_road"), make_policy("lane_follower"), kDefaults);
  std::ostringstream out;
  write_trace_csv(t, out);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "step,time,ego_x,ego_y,ego_heading,ego_speed,station,offset,terminal,l0,l1_progress,"
            "l1_risk,l2_style,l3_comfort,total,max_risk_actor,geom_penalty,dyn_penalty,ttc");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 18) << line;
  }
  EXPECT_EQ(rows, t.steps.size());
}

TEST(Trace, EmptyRoadGolden) {
  const EpisodeTrace t = run_episode(shipped("empty_road"), make_policy("lane_follower"), kDefaults);
  std::ostringstream out;
  write_trace_csv(t, out);
  std::ifstream golden(source_path("tests/data/empty_road_trace.csv"), std::ios::binary);
  ASSERT_TRUE(golden) << "missing golden file";
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(out.str(), expected.str());
}

TEST(Trace, SummaryDocument) {
  const EpisodeTrace t = run_episode(shipped("empty_road"), make_policy("lane_follower"), kDefaults);
  const auto j = nlohmann::json::parse(summary_json(t));
  EXPECT_EQ(j["outcome"], "Success");
  EXPECT_EQ(j["steps"], t.steps.size());
  EXPECT_DOUBLE_EQ(j["cumulative_reward"].get<double>(), t.cumulative_reward);
  EXPECT_DOUBLE_EQ(j["route_progress"].get<double>(), 1.0);
  EXPECT_TRUE(j.contains("average_velocity"));
}

TEST(Episode, RerunGivesIdenticalTrace) {
  const Scenario s = shipped("same_direction_closing");
  const EpisodeTrace a = run_episode(s, make_policy("idm"), kDefaults);
  const EpisodeTrace b = run_episode(s, make_policy("idm"), kDefaults);
  std::ostringstream oa, ob;
  write_trace_csv(a, oa);
  write_trace_csv(b, ob);
  EXPECT_EQ(oa.str(), ob.str());
}

}  // namespace
}  // namespace riskrl::sim
