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


#include "riskrl/risk.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "riskrl/geometry.h"

namespace riskrl::risk {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSameDirectionMax = std::numbers::pi / 4.0;
constexpr double kOppositeDirectionMin = 3.0 * std::numbers::pi / 4.0;

struct AxisLimits {
  double a_acc_max;
  double a_brk_min;
  double a_brk_max;
  double r_geom;
};

AxisLimits limits_for(Axis axis, const RewardConfig& c) {
  if (axis == Axis::kLongitudinal) return {c.a_acc_max_x, c.a_brk_min_x, c.a_brk_max_x, c.r_x_geom};
  return {c.a_acc_max_y, c.a_brk_min_y, c.a_brk_max_y, c.r_y_geom};
}

// Reaction-phase plus braking distance of one agent.
double reach_distance(double v, double rho, const AxisLimits& lim) {
  return accel_distance(v, rho, lim.a_acc_max) + stop_distance(v, rho, lim.a_acc_max, lim.a_brk_min);
}

struct Exponents {
  double p_x;
  double p_y;
};

Exponents exponents_for(InteractionMode mode, const RewardConfig& c) {
  switch (mode) {
    case InteractionMode::kSameDirection:
      return {c.p_max, c.p_min};
    case InteractionMode::kOppositeDirection:
    case InteractionMode::kStaticObstacle:
      return {c.p_min, c.p_max};
    case InteractionMode::kIntersecting:
      return {c.p_max, c.p_max};
  }
  return {c.p_max, c.p_max};
}

// Longitudinal desired clearance from motion along the ego heading.
double dynamic_longitudinal_radius(InteractionMode mode, double d_x, double ego_vx,
                                   double other_vx, const RewardConfig& c) {
  if (mode == InteractionMode::kOppositeDirection) {
    const double s = d_x >= 0.0 ? 1.0 : -1.0;
    return approach_clearance(std::max(ego_vx * s, 0.0), std::max(-other_vx * s, 0.0),
                              Axis::kLongitudinal, c);
  }
  // Same direction or static: the rear agent is the follower.
  if (d_x >= 0.0) {
    return leading_clearance(std::max(ego_vx, 0.0), std::max(other_vx, 0.0), Axis::kLongitudinal, c);
  }
  return leading_clearance(std::max(other_vx, 0.0), std::max(ego_vx, 0.0), Axis::kLongitudinal, c);
}

// Lateral desired clearance from the four lateral motion cases.
double dynamic_lateral_radius(double d_y, double ego_vy, double other_vy, const RewardConfig& c) {
  const double s = d_y >= 0.0 ? 1.0 : -1.0;
  const double ego_toward = ego_vy * s;
  const double other_toward = -other_vy * s;
  double radius = 0.0;
  if (ego_toward > 0.0 && other_toward > 0.0) {
    radius = approach_clearance(ego_toward, other_toward, Axis::kLateral, c);
  } else if (ego_toward > 0.0) {
    radius = leading_clearance(ego_toward, std::max(-other_toward, 0.0), Axis::kLateral, c);
  } else if (other_toward > 0.0) {
    radius = away_clearance(std::max(-ego_toward, 0.0), other_toward, c);
  }
  return std::max(radius, c.r_y_geom);
}

}  // namespace

std::string_view to_string(InteractionMode mode) {
  switch (mode) {
    case InteractionMode::kSameDirection:
      return "same_direction";
    case InteractionMode::kOppositeDirection:
      return "opposite_direction";
    case InteractionMode::kIntersecting:
      return "intersecting";
    case InteractionMode::kStaticObstacle:
      return "static_obstacle";
  }
  return "unknown";
}

std::optional<InteractionMode> parse_mode(std::string_view name) {
  for (auto mode : {InteractionMode::kSameDirection, InteractionMode::kOppositeDirection,
                    InteractionMode::kIntersecting, InteractionMode::kStaticObstacle}) {
    if (to_string(mode) == name) return mode;
  }
  return std::nullopt;
}

InteractionMode classify_interaction(const ActorState& ego, const ActorState& other) {
  if (other.kind == ActorKind::kStaticObstacle) return InteractionMode::kStaticObstacle;
  const double delta = std::abs(wrap_angle(other.heading - ego.heading));
  if (delta <= kSameDirectionMax) return InteractionMode::kSameDirection;
  if (delta >= kOppositeDirectionMin) return InteractionMode::kOppositeDirection;
  return InteractionMode::kIntersecting;
}

Clearance clearance_center(const ActorState& ego, const ActorState& other, InteractionMode mode) {
  if (mode == InteractionMode::kIntersecting) {
    const double c = ego.circumradius() + other.circumradius();
    return {c, c};
  }
  return {0.5 * (ego.length + other.length), 0.5 * (ego.width + other.width)};
}

double ellipsoid_penalty(double d_x, double d_y, const EllipseParams& p) {
  const double gap_x = std::max(std::abs(d_x) - p.c_x, 0.0) / p.r_x;
  const double gap_y = std::max(std::abs(d_y) - p.c_y, 0.0) / p.r_y;
  return std::pow(std::pow(gap_x, p.p_x) + std::pow(gap_y, p.p_y) + 1.0, -p.p_outer);
}

double accel_distance(double v, double rho, double a_acc) {
  return v * rho + 0.5 * a_acc * rho * rho;
}

double stop_distance(double v, double rho, double a_acc, double a_brk_min) {
  const double v_peak = v + rho * a_acc;
  return v_peak * v_peak / (2.0 * a_brk_min);
}

double leading_clearance(double v_ego, double v_other, Axis axis, const RewardConfig& config) {
  const AxisLimits lim = limits_for(axis, config);
  const double leader_stop = v_other * v_other / (2.0 * lim.a_brk_max);
  return std::max(reach_distance(v_ego, config.rho, lim) - leader_stop, lim.r_geom);
}

double approach_clearance(double v_ego, double v_other, Axis axis, const RewardConfig& config) {
  const AxisLimits lim = limits_for(axis, config);
  const double r = reach_distance(v_ego, config.rho, lim) + reach_distance(v_other, config.rho, lim);
  return std::max(r, lim.r_geom);
}

double away_clearance(double v_ego_away, double v_other_toward, const RewardConfig& config) {
  const double v_other_rho = v_other_toward + config.rho * config.a_acc_max_y;
  if (v_ego_away > v_other_rho) return 0.0;
  const double r = accel_distance(v_other_toward, config.rho, config.a_acc_max_y) -
                   v_ego_away * config.rho;
  return std::max(r, 0.0);
}

double ttc_circle(const ActorState& a, const ActorState& b) {
  const Vec2 dp = a.position - b.position;
  const Vec2 dv = a.velocity() - b.velocity();
  const double radius = a.circumradius() + b.circumradius();
  // a t^2 + 2 b t + c = 0
  const double qa = dot(dv, dv);
  const double qb = dot(dp, dv);
  const double qc = dot(dp, dp) - radius * radius;
  if (qc <= 0.0) return 0.0;
  if (qa == 0.0 || qb >= 0.0) return kInf;
  const double disc = qb * qb - qa * qc;
  if (disc < 0.0) return kInf;
  // Smaller root written as c / (-b + sqrt(disc)) to avoid cancellation.
  return qc / (-qb + std::sqrt(disc));
}

double ttc_penalty(double ttc, const RewardConfig& config) {
  if (!std::isfinite(ttc)) return 0.0;
  const double ratio = std::clamp(ttc / config.ttc_max, 0.1, 1.0);
  return 0.0 - std::log10(ratio);
}

double geometric_risk(const ActorState& ego, const ActorState& other, InteractionMode mode,
                      const RewardConfig& config) {
  const Clearance center = clearance_center(ego, other, mode);
  const Exponents exp = exponents_for(mode, config);
  const Displacement d = relative_displacement(ego, other);
  return ellipsoid_penalty(d.dx, d.dy,
                           {center.c_x, center.c_y, config.r_x_geom, config.r_y_geom, exp.p_x,
                            exp.p_y, config.p_outer});
}

DynamicRisk dynamic_risk(const ActorState& ego, const ActorState& other, InteractionMode mode,
                         const RewardConfig& config) {
  if (mode == InteractionMode::kIntersecting) {
    const double ttc = ttc_circle(ego, other);
    return {ttc_penalty(ttc, config), ttc};
  }
  const Displacement d = relative_displacement(ego, other);
  const Displacement ego_v = to_ego_frame(ego, ego.velocity());
  const Displacement other_v = to_ego_frame(ego, other.velocity());
  const double r_x = dynamic_longitudinal_radius(mode, d.dx, ego_v.dx, other_v.dx, config);
  const double r_y = dynamic_lateral_radius(d.dy, ego_v.dy, other_v.dy, config);
  const Clearance center = clearance_center(ego, other, mode);
  const Exponents exp = exponents_for(mode, config);
  return {ellipsoid_penalty(d.dx, d.dy,
                            {center.c_x, center.c_y, r_x, r_y, exp.p_x, exp.p_y, config.p_outer}),
          kInf};
}

RiskAssessment assess(const ActorState& ego, const ActorState& other, const RewardConfig& config) {
  RiskAssessment out;
  out.mode = classify_interaction(ego, other);
  out.geom_penalty = geometric_risk(ego, other, out.mode, config);
  const DynamicRisk dyn = dynamic_risk(ego, other, out.mode, config);
  out.dyn_penalty = dyn.penalty;
  out.ttc = dyn.ttc;
  out.combined = config.w_geom * out.geom_penalty + config.w_dyn * out.dyn_penalty;
  return out;
}

RiskResult risk_reward(const ActorState& ego, std::span<const ActorState> others,
                       const RewardConfig& config) {
  RiskResult result;
  result.assessments.reserve(others.size());
  double worst = 0.0;
  for (const ActorState& other : others) {
    result.assessments.push_back(assess(ego, other, config));
    const double combined = result.assessments.back().combined;
    if (!result.riskiest || combined > worst) {
      worst = combined;
      result.riskiest = result.assessments.size() - 1;
    }
  }
  result.value = 0.0 - worst;
  return result;
}

}  // namespace riskrl::risk
