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


#include "riskrl/episode.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace riskrl::sim {
namespace {

using reward::Outcome;

Outcome classify_outcome(const World& w, const Scenario& scenario, int max_steps) {
  const std::vector<ActorState> others = w.others();
  if (detect_collision(w.ego, others)) return Outcome::kCollision;
  if (check_offroad(w.ego_pose, w.ego, scenario.route)) return Outcome::kOffRoad;
  if (w.ego_pose.station >= scenario.route.goal_station()) return Outcome::kSuccess;
  if (w.step >= max_steps) return Outcome::kTimeout;
  return Outcome::kNone;
}

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.9g}", v == 0.0 ? 0.0 : v);
}

// Plain double for JSON; infinities become null.
nlohmann::json json_number(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

EpisodeTrace run_episode(const Scenario& scenario, const Policy& policy, const RewardConfig& config) {
  const int max_steps = scenario.max_steps.value_or(config.timeout_steps);
  EpisodeTrace trace;
  trace.scenario_name = scenario.name;
  World world = initial_world(scenario);
  double speed_sum = 0.0;

  while (trace.outcome == Outcome::kNone) {
    const EgoAction action = policy(Observation{world, scenario, config});
    world = step_world(world, action, scenario.route, config);

    reward::StepContext ctx;
    ctx.ego = world.ego;
    ctx.pose = world.ego_pose;
    ctx.prev_pose = world.prev_pose;
    ctx.others = world.others();
    ctx.lane_width = scenario.route.lane_width();
    ctx.steering_rate = world.steering_rate;
    ctx.jerk = world.jerk;
    if (world.ego.speed() > config.speed_limit) ctx.violations.insert(std::string(reward::kSpeeding));
    ctx.outcome = classify_outcome(world, scenario, max_steps);

    reward::StepEvaluation eval = reward::evaluate_step(ctx, config);
    StepRecord rec;
    rec.step = world.step;
    rec.time = world.time;
    rec.ego = world.ego;
    rec.pose = world.ego_pose;
    rec.others = std::move(ctx.others);
    rec.reward = eval.breakdown;
    rec.assessments = std::move(eval.risk.assessments);
    rec.riskiest = eval.risk.riskiest;
    trace.cumulative_reward += rec.reward.total;
    speed_sum += world.ego.speed();
    trace.steps.push_back(std::move(rec));
    trace.outcome = ctx.outcome;
  }

  const double goal = scenario.route.goal_station();
  trace.route_progress = goal > 0.0 ? std::clamp(world.ego_pose.station / goal, 0.0, 1.0) : 1.0;
  trace.average_velocity = speed_sum / static_cast<double>(trace.steps.size());
  return trace;
}

double brute_force_ttc(const ActorState& a, const ActorState& b, double dt_fine, double horizon) {
  const Vec2 va = a.velocity();
  const Vec2 vb = b.velocity();
  const double radius = a.circumradius() + b.circumradius();
  const auto steps = static_cast<long long>(std::floor(horizon / dt_fine));
  for (long long k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt_fine;
    const Vec2 pa = a.position + t * va;
    const Vec2 pb = b.position + t * vb;
    if (norm(pa - pb) <= radius) return t;
  }
  return std::numeric_limits<double>::infinity();
}

MetricSummary aggregate_metrics(const std::vector<EpisodeTrace>& traces) {
  if (traces.empty()) throw std::invalid_argument("aggregate_metrics needs at least one trace");
  MetricSummary s;
  s.episodes = traces.size();
  std::size_t success = 0, offroad = 0, collision = 0, timeout = 0;
  // Welford accumulators: count, mean, M2.
  struct Acc {
    double mean = 0.0, m2 = 0.0;
    std::size_t n = 0;
    void add(double x) {
      ++n;
      const double delta = x - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (x - mean);
    }
    MeanStd result() const { return {mean, std::sqrt(m2 / static_cast<double>(n))}; }
  } reward_acc, progress_acc, velocity_acc;

  for (const EpisodeTrace& t : traces) {
    switch (t.outcome) {
      case Outcome::kSuccess:
        ++success;
        break;
      case Outcome::kOffRoad:
        ++offroad;
        break;
      case Outcome::kCollision:
        ++collision;
        break;
      case Outcome::kTimeout:
        ++timeout;
        break;
      case Outcome::kNone:
        throw std::invalid_argument("trace has no final outcome");
    }
    reward_acc.add(t.cumulative_reward);
    progress_acc.add(t.route_progress);
    velocity_acc.add(t.average_velocity);
  }
  const double n = static_cast<double>(traces.size());
  s.success_pct = 100.0 * static_cast<double>(success) / n;
  s.offroad_pct = 100.0 * static_cast<double>(offroad) / n;
  s.collision_pct = 100.0 * static_cast<double>(collision) / n;
  s.timeout_pct = 100.0 * static_cast<double>(timeout) / n;
  s.cumulative_reward = reward_acc.result();
  s.route_progress = progress_acc.result();
  s.average_velocity = velocity_acc.result();
  return s;
}

const std::vector<std::string_view>& trace_columns() {
  static const std::vector<std::string_view> columns = {
      "step",        "time",        "ego_x",          "ego_y",        "ego_heading",
      "ego_speed",   "station",     "offset",         "terminal",     "l0",
      "l1_progress", "l1_risk",     "l2_style",       "l3_comfort",   "total",
      "max_risk_actor", "geom_penalty", "dyn_penalty", "ttc"};
  return columns;
}

void write_trace_csv(const EpisodeTrace& trace, std::ostream& out) {
  const auto& cols = trace_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const StepRecord& r : trace.steps) {
    const auto& b = r.reward;
    long long actor = -1;
    double geom = 0.0, dyn = 0.0, ttc = std::numeric_limits<double>::infinity();
    if (r.riskiest) {
      const auto& a = r.assessments[*r.riskiest];
      actor = static_cast<long long>(*r.riskiest);
      geom = a.geom_penalty;
      dyn = a.dyn_penalty;
      ttc = a.ttc;
    }
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.step,
                       num(r.time), num(r.ego.position.x), num(r.ego.position.y),
                       num(r.ego.heading), num(r.ego.speed()), num(r.pose.station),
                       num(r.pose.lateral_offset), num(b.terminal), num(b.l0),
                       num(b.l1_progress), num(b.l1_risk), num(b.l2_style), num(b.l3_comfort),
                       num(b.total), actor, num(geom), num(dyn), num(ttc));
  }
}

std::string summary_json(const EpisodeTrace& trace) {
  nlohmann::ordered_json j;
  j["scenario"] = trace.scenario_name;
  j["outcome"] = std::string(reward::to_string(trace.outcome));
  j["steps"] = trace.steps.size();
  j["cumulative_reward"] = json_number(trace.cumulative_reward);
  j["route_progress"] = json_number(trace.route_progress);
  j["average_velocity"] = json_number(trace.average_velocity);
  if (!trace.steps.empty()) j["terminal_reward"] = json_number(trace.steps.back().reward.terminal);
  return j.dump(2) + "\n";
}

}  // namespace riskrl::sim
