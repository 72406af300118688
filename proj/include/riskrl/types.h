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


#ifndef RISKRL_TYPES_H_
#define RISKRL_TYPES_H_

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace riskrl {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
// z-component of the 3D cross product; positive when b is left of a.
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit_from_angle(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Wraps an angle into (-pi, pi].
inline double wrap_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

enum class ActorKind { kEgoVehicle, kNpcVehicle, kStaticObstacle };

// Kinematic state of one traffic participant.
//
// speed_long is along the actor's heading and speed_lat along its left
// normal, so for an actor aligned with its lane the pair is route-relative.
struct ActorState {
  Vec2 position;
  double heading = 0.0;
  double speed_long = 0.0;
  double speed_lat = 0.0;
  double accel_long = 0.0;
  double length = 4.5;
  double width = 1.8;
  ActorKind kind = ActorKind::kNpcVehicle;

  Vec2 velocity() const {
    const Vec2 forward = unit_from_angle(heading);
    const Vec2 left{-forward.y, forward.x};
    return speed_long * forward + speed_lat * left;
  }
  // Radius of the rectangle's circumcircle.
  double circumradius() const { return 0.5 * std::hypot(length, width); }
  double speed() const { return std::hypot(speed_long, speed_lat); }
};

// Throws std::invalid_argument when the state breaks the ActorState invariants.
void validate_actor(const ActorState& actor);

struct RouteFramePose {
  double station = 0.0;
  double lateral_offset = 0.0;  // left of travel direction is positive
  double heading_error = 0.0;   // (-pi, pi]
};

// Raised for malformed routes, configs and scenarios. `field` names the
// offending key or path when one is known.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message, bool prefix_field = true)
      : std::runtime_error(field.empty() || !prefix_field ? message : field + ": " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// Single-lane reference route described by its centerline polyline.
class Route {
 public:
  Route(std::vector<Vec2> centerline, double lane_width, double goal_station);

  const std::vector<Vec2>& centerline() const { return centerline_; }
  double lane_width() const { return lane_width_; }
  double goal_station() const { return goal_station_; }
  double length() const { return stations_.back(); }
  // Arc length at each centerline vertex.
  const std::vector<double>& vertex_stations() const { return stations_; }

  Vec2 point_at(double station) const;
  // Unit tangent of the segment containing `station`.
  Vec2 tangent_at(double station) const;

 private:
  std::size_t segment_at(double station) const;

  std::vector<Vec2> centerline_;
  std::vector<double> stations_;
  double lane_width_;
  double goal_station_;
};

}  // namespace riskrl

#endif  // RISKRL_TYPES_H_
