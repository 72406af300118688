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


#include "riskrl/geometry.h"

#include <algorithm>
#include <limits>
#include <string>

namespace riskrl {

void validate_actor(const ActorState& actor) {
  const bool finite = std::isfinite(actor.position.x) && std::isfinite(actor.position.y) &&
                      std::isfinite(actor.heading) && std::isfinite(actor.speed_long) &&
                      std::isfinite(actor.speed_lat) && std::isfinite(actor.accel_long);
  if (!finite) throw std::invalid_argument("actor state must be finite");
  if (!(actor.length > 0.0) || !(actor.width > 0.0)) {
    throw std::invalid_argument("actor length and width must be positive");
  }
  if (actor.kind == ActorKind::kStaticObstacle &&
      (actor.speed_long != 0.0 || actor.speed_lat != 0.0)) {
    throw std::invalid_argument("static obstacle must have zero speed");
  }
}

Route::Route(std::vector<Vec2> centerline, double lane_width, double goal_station)
    : centerline_(std::move(centerline)), lane_width_(lane_width), goal_station_(goal_station) {
  if (centerline_.size() < 2) {
    throw ConfigError("route.centerline", "needs at least 2 points");
  }
  stations_.reserve(centerline_.size());
  stations_.push_back(0.0);
  for (std::size_t i = 1; i < centerline_.size(); ++i) {
    const double len = norm(centerline_[i] - centerline_[i - 1]);
    if (!(len > 0.0) || !std::isfinite(len)) {
      throw ConfigError("route.centerline[" + std::to_string(i) + "]",
                        "consecutive points must be distinct and finite");
    }
    stations_.push_back(stations_.back() + len);
  }
  if (!(lane_width_ > 0.0)) throw ConfigError("route.lane_width", "must be > 0");
  if (!(goal_station_ >= 0.0) || goal_station_ > length()) {
    throw ConfigError("route.goal_station", "must lie in [0, route length]");
  }
}

std::size_t Route::segment_at(double station) const {
  const auto it = std::upper_bound(stations_.begin(), stations_.end(), station);
  const auto idx = static_cast<std::size_t>(std::distance(stations_.begin(), it));
  return std::clamp<std::size_t>(idx == 0 ? 0 : idx - 1, 0, centerline_.size() - 2);
}

Vec2 Route::point_at(double station) const {
  const std::size_t seg = segment_at(station);
  const double t = station - stations_[seg];
  return centerline_[seg] + t * tangent_at(station);
}

Vec2 Route::tangent_at(double station) const {
  const std::size_t seg = segment_at(station);
  const Vec2 d = centerline_[seg + 1] - centerline_[seg];
  return (1.0 / norm(d)) * d;
}

RouteFramePose project_to_route(Vec2 position, double heading, const Route& route) {
  const auto& pts = route.centerline();
  const auto& stations = route.vertex_stations();
  double best_dist = std::numeric_limits<double>::infinity();
  RouteFramePose best;
  Vec2 best_dir{1.0, 0.0};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Vec2 seg = pts[i + 1] - pts[i];
    const double seg_len = stations[i + 1] - stations[i];
    const Vec2 dir = (1.0 / seg_len) * seg;
    const double along = std::clamp(dot(position - pts[i], dir), 0.0, seg_len);
    const Vec2 foot = pts[i] + along * dir;
    const double dist = norm(position - foot);
    if (dist < best_dist) {
      best_dist = dist;
      best.station = stations[i] + along;
      const double side = cross(dir, position - foot);
      best.lateral_offset = side < 0.0 ? -dist : dist;
      best_dir = dir;
    }
  }
  best.heading_error = wrap_angle(heading - std::atan2(best_dir.y, best_dir.x));
  return best;
}

WorldPose from_route_frame(const Route& route, double station, double lateral_offset,
                           double heading_offset) {
  const Vec2 tangent = route.tangent_at(station);
  const Vec2 left{-tangent.y, tangent.x};
  return {route.point_at(station) + lateral_offset * left,
          wrap_angle(std::atan2(tangent.y, tangent.x) + heading_offset)};
}

Displacement to_ego_frame(const ActorState& ego, Vec2 world_vector) {
  const double c = std::cos(ego.heading);
  const double s = std::sin(ego.heading);
  return {c * world_vector.x + s * world_vector.y, -s * world_vector.x + c * world_vector.y};
}

Displacement relative_displacement(const ActorState& ego, const ActorState& other) {
  return to_ego_frame(ego, other.position - ego.position);
}

}  // namespace riskrl
