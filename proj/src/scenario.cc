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


#include "riskrl/scenario.h"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numeric>
#include <sstream>

#include "riskrl/geometry.h"
#include "riskrl/rng.h"

namespace riskrl::sim {
namespace {

// Hard cap on scripted NPC deceleration, m/s^2.
constexpr double kMaxScriptDecel = 8.0;

std::string at_line(const YAML::Node& node) {
  const YAML::Mark mark = node.Mark();
  return mark.is_null() ? std::string() : fmt::format(" (line {})", mark.line + 1);
}

// Walks a YAML document and collects every schema violation with its path.
class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& message, const YAML::Node& node) {
    errors.push_back(fmt::format("{}: {}{}", path, message, at_line(node)));
  }

  void only_keys(const YAML::Node& map, const std::string& path,
                 std::initializer_list<std::string_view> allowed) {
    for (const auto& entry : map) {
      const auto key = entry.first.as<std::string>();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail(join(path, key), "unknown key", entry.first);
      }
    }
  }

  bool is_map(const YAML::Node& node, const std::string& path) {
    if (node.IsMap()) return true;
    fail(path, "expected a mapping", node);
    return false;
  }

  std::optional<double> number(const YAML::Node& map, std::string_view key,
                               const std::string& path) {
    const YAML::Node node = map[std::string(key)];
    if (!node) return std::nullopt;
    try {
      const double v = node.as<double>();
      if (std::isfinite(v)) return v;
    } catch (const YAML::BadConversion&) {
    }
    fail(join(path, key), "expected a finite number", node);
    return std::nullopt;
  }

  double number_or(const YAML::Node& map, std::string_view key, const std::string& path,
                   double fallback) {
    return number(map, key, path).value_or(fallback);
  }

  std::optional<Vec2> point(const YAML::Node& node, const std::string& path) {
    if (node.IsSequence() && node.size() == 2) {
      try {
        const Vec2 p{node[0].as<double>(), node[1].as<double>()};
        if (std::isfinite(p.x) && std::isfinite(p.y)) return p;
      } catch (const YAML::BadConversion&) {
      }
    }
    fail(path, "expected a point [x, y]", node);
    return std::nullopt;
  }

  std::vector<Vec2> points(const YAML::Node& node, const std::string& path) {
    std::vector<Vec2> out;
    if (!node.IsSequence()) {
      fail(path, "expected a list of points", node);
      return out;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (auto p = point(node[i], index(path, i))) out.push_back(*p);
    }
    return out;
  }

  static std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
  }
  static std::string index(const std::string& path, std::size_t i) {
    return fmt::format("{}[{}]", path, i);
  }
};

SpawnSpec read_spawn(Reader& r, const YAML::Node& node, const std::string& path, bool is_static,
                     const Route& route) {
  SpawnSpec s;
  if (node["position"]) s.position = r.point(node["position"], Reader::join(path, "position"));
  s.heading = r.number_or(node, "heading", path, 0.0);
  s.station = r.number_or(node, "station", path, 0.0);
  s.offset = r.number_or(node, "offset", path, 0.0);
  s.heading_offset = r.number_or(node, "heading_offset", path, 0.0);
  s.speed = r.number_or(node, "speed", path, 0.0);
  s.length = r.number_or(node, "length", path, is_static ? 1.0 : 4.5);
  s.width = r.number_or(node, "width", path, is_static ? 1.0 : 1.8);
  if (node["heading"] && !node["position"]) {
    r.fail(Reader::join(path, "heading"), "only valid together with position", node["heading"]);
  }
  if (!node["position"] && (s.station < 0.0 || s.station > route.length())) {
    r.fail(Reader::join(path, "station"), "must lie in [0, route length]", node["station"]);
  }
  if (!(s.length > 0.0)) r.fail(Reader::join(path, "length"), "must be > 0", node["length"]);
  if (!(s.width > 0.0)) r.fail(Reader::join(path, "width"), "must be > 0", node["width"]);
  if (s.speed < 0.0) r.fail(Reader::join(path, "speed"), "must be >= 0", node["speed"]);
  if (is_static && s.speed != 0.0) {
    r.fail(Reader::join(path, "speed"), "static obstacles cannot move", node["speed"]);
  }
  return s;
}

ActorScript read_script(Reader& r, const YAML::Node& node, const std::string& path) {
  ActorScript script;
  if (!node) return script;
  if (!r.is_map(node, path)) return script;
  r.only_keys(node, path, {"type", "points", "trigger_station", "decel"});
  const std::string type = node["type"] ? node["type"].as<std::string>() : "constant_velocity";
  if (type == "constant_velocity") {
    script.kind = ActorScript::Kind::kConstantVelocity;
  } else if (type == "waypoints") {
    script.kind = ActorScript::Kind::kWaypointFollower;
    if (!node["points"]) {
      r.fail(Reader::join(path, "points"), "required for waypoints scripts", node);
    } else {
      script.waypoints = r.points(node["points"], Reader::join(path, "points"));
      if (script.waypoints.empty()) {
        r.fail(Reader::join(path, "points"), "needs at least one point", node["points"]);
      }
    }
  } else if (type == "braking") {
    script.kind = ActorScript::Kind::kBraking;
    script.trigger_station = r.number_or(node, "trigger_station", path, 0.0);
    script.decel = r.number_or(node, "decel", path, 0.0);
    if (!(script.decel > 0.0 && script.decel <= kMaxScriptDecel)) {
      r.fail(Reader::join(path, "decel"), fmt::format("must lie in (0, {}]", kMaxScriptDecel),
             node["decel"] ? node["decel"] : node);
    }
  } else {
    r.fail(Reader::join(path, "type"),
           "unknown script type (expected constant_velocity, waypoints or braking)", node["type"]);
  }
  return script;
}

std::pair<double, double> read_range(Reader& r, const YAML::Node& map, std::string_view key,
                                     const std::string& path, std::pair<double, double> fallback) {
  const YAML::Node node = map[std::string(key)];
  if (!node) return fallback;
  const auto p = r.point(node, Reader::join(path, key));
  if (!p) return fallback;
  if (p->x > p->y) r.fail(Reader::join(path, key), "range min exceeds max", node);
  return {p->x, p->y};
}

ScenarioTemplate read_template(Reader& r, const YAML::Node& root) {
  ScenarioTemplate t;
  if (!root.IsMap()) {
    r.fail("<root>", "scenario must be a mapping", root);
    return t;
  }
  r.only_keys(root, "", {"schema_version", "name", "seed", "max_steps", "traffic_density", "route",
                         "ego", "npcs", "obstacles", "slots", "randomize"});

  if (!root["schema_version"]) {
    r.fail("schema_version", "required", root);
  } else if (r.number_or(root, "schema_version", "", -1) != kScenarioSchemaVersion) {
    r.fail("schema_version", fmt::format("unsupported (expected {})", kScenarioSchemaVersion),
           root["schema_version"]);
  }
  if (root["name"]) t.name = root["name"].as<std::string>();
  if (root["seed"]) {
    try {
      t.seed = root["seed"].as<std::uint64_t>();
    } catch (const YAML::BadConversion&) {
      r.fail("seed", "expected a non-negative integer", root["seed"]);
    }
  }
  if (root["max_steps"]) {
    try {
      t.max_steps = root["max_steps"].as<int>();
      if (*t.max_steps < 1) r.fail("max_steps", "must be >= 1", root["max_steps"]);
    } catch (const YAML::BadConversion&) {
      r.fail("max_steps", "expected an integer", root["max_steps"]);
    }
  }
  t.traffic_density = r.number_or(root, "traffic_density", "", 1.0);
  if (!(t.traffic_density >= 0.0 && t.traffic_density <= 1.0)) {
    r.fail("traffic_density", "must lie in [0, 1]", root["traffic_density"]);
  }

  const YAML::Node route = root["route"];
  if (!route) {
    r.fail("route", "required", root);
    return t;
  }
  if (!r.is_map(route, "route")) return t;
  r.only_keys(route, "route", {"centerline", "lane_width", "goal_station"});
  const std::size_t errors_before = r.errors.size();
  std::vector<Vec2> centerline;
  if (!route["centerline"]) {
    r.fail("route.centerline", "required", route);
  } else {
    centerline = r.points(route["centerline"], "route.centerline");
  }
  const double lane_width = r.number_or(route, "lane_width", "route", 3.5);
  if (r.errors.size() != errors_before) return t;
  try {
    double length = 0.0;
    for (std::size_t i = 1; i < centerline.size(); ++i) length += norm(centerline[i] - centerline[i - 1]);
    const double goal = r.number_or(route, "goal_station", "route", length);
    t.route = Route(centerline, lane_width, goal);
  } catch (const ConfigError& e) {
    r.errors.push_back(std::string(e.what()) + at_line(route));
    return t;
  }

  const YAML::Node ego = root["ego"];
  if (!ego) {
    r.fail("ego", "required", root);
  } else if (r.is_map(ego, "ego")) {
    r.only_keys(ego, "ego", {"position", "heading", "station", "offset", "heading_offset", "speed",
                             "length", "width", "actions"});
    t.ego = read_spawn(r, ego, "ego", false, t.route);
    if (!t.ego.position && std::abs(t.ego.offset) > 0.5 * t.route.lane_width()) {
      r.fail("ego.offset", "ego must spawn inside the lane", ego["offset"]);
    }
    if (const YAML::Node actions = ego["actions"]) {
      for (const Vec2& a : r.points(actions, "ego.actions")) t.ego_actions.push_back({a.x, a.y});
    }
  }

  const auto read_list = [&](std::string_view key, auto&& each) {
    const YAML::Node list = root[std::string(key)];
    if (!list) return;
    if (!list.IsSequence()) {
      r.fail(std::string(key), "expected a list", list);
      return;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = Reader::index(std::string(key), i);
      if (r.is_map(list[i], path)) each(list[i], path);
    }
  };

  read_list("npcs", [&](const YAML::Node& n, const std::string& path) {
    r.only_keys(n, path, {"position", "heading", "station", "offset", "heading_offset", "speed",
                          "length", "width", "script"});
    SpawnSpec spawn = read_spawn(r, n, path, false, t.route);
    t.npcs.emplace_back(spawn, read_script(r, n["script"], Reader::join(path, "script")));
  });
  read_list("obstacles", [&](const YAML::Node& n, const std::string& path) {
    r.only_keys(n, path, {"position", "heading", "station", "offset", "heading_offset", "length",
                          "width"});
    t.obstacles.push_back(read_spawn(r, n, path, true, t.route));
  });
  read_list("slots", [&](const YAML::Node& n, const std::string& path) {
    r.only_keys(n, path, {"kind", "randomize", "position", "heading", "station", "offset",
                          "heading_offset", "speed", "length", "width", "script"});
    SlotSpec slot;
    const std::string kind = n["kind"] ? n["kind"].as<std::string>() : "npc";
    if (kind != "npc" && kind != "obstacle") {
      r.fail(Reader::join(path, "kind"), "expected npc or obstacle", n["kind"]);
    }
    slot.is_obstacle = kind == "obstacle";
    if (n["randomize"]) {
      try {
        slot.randomize = n["randomize"].as<bool>();
      } catch (const YAML::BadConversion&) {
        r.fail(Reader::join(path, "randomize"), "expected true or false", n["randomize"]);
      }
    }
    slot.spawn = read_spawn(r, n, path, slot.is_obstacle, t.route);
    if (slot.is_obstacle && n["script"]) {
      r.fail(Reader::join(path, "script"), "obstacles cannot have scripts", n["script"]);
    }
    slot.script = read_script(r, n["script"], Reader::join(path, "script"));
    t.slots.push_back(slot);
  });

  if (const YAML::Node rnd = root["randomize"]) {
    if (r.is_map(rnd, "randomize")) {
      r.only_keys(rnd, "randomize", {"speed", "offset", "length", "width"});
      RandomizeSpec& s = t.randomize;
      std::tie(s.speed_min, s.speed_max) =
          read_range(r, rnd, "speed", "randomize", {s.speed_min, s.speed_max});
      std::tie(s.offset_min, s.offset_max) =
          read_range(r, rnd, "offset", "randomize", {s.offset_min, s.offset_max});
      std::tie(s.length_min, s.length_max) =
          read_range(r, rnd, "length", "randomize", {s.length_min, s.length_max});
      std::tie(s.width_min, s.width_max) =
          read_range(r, rnd, "width", "randomize", {s.width_min, s.width_max});
      if (s.speed_min < 0.0) r.fail("randomize.speed", "must be >= 0", rnd["speed"]);
      if (!(s.length_min > 0.0)) r.fail("randomize.length", "must be > 0", rnd["length"]);
      if (!(s.width_min > 0.0)) r.fail("randomize.width", "must be > 0", rnd["width"]);
    }
  }
  return t;
}

std::vector<std::string> parse_into(std::string_view text, ScenarioTemplate& out) {
  Reader r;
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    return {fmt::format("line {}: parse error: {}", e.mark.line + 1, e.msg)};
  }
  try {
    out = read_template(r, root);
  } catch (const YAML::Exception& e) {
    r.errors.push_back(fmt::format("line {}: {}", e.mark.line + 1, e.msg));
  }
  return r.errors;
}

ActorState place(const Route& route, const SpawnSpec& s, ActorKind kind) {
  ActorState a;
  if (s.position) {
    const Vec2 forward = unit_from_angle(s.heading);
    a.position = *s.position + s.offset * Vec2{-forward.y, forward.x};
    a.heading = wrap_angle(s.heading);
  } else {
    const WorldPose pose = from_route_frame(route, s.station, s.offset, s.heading_offset);
    a.position = pose.position;
    a.heading = pose.heading;
  }
  a.speed_long = kind == ActorKind::kStaticObstacle ? 0.0 : s.speed;
  a.length = s.length;
  a.width = s.width;
  a.kind = kind;
  return a;
}

}  // namespace

std::vector<std::string> scenario_violations(std::string_view text) {
  ScenarioTemplate unused;
  return parse_into(text, unused);
}

ScenarioTemplate parse_scenario_template(std::string_view text) {
  ScenarioTemplate t;
  const auto errors = parse_into(text, t);
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
    throw ConfigError(errors.front().substr(0, errors.front().find(':')), joined,
                      /*prefix_field=*/false);
  }
  return t;
}

ScenarioTemplate load_scenario_template(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open scenario file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  ScenarioTemplate t = parse_scenario_template(buffer.str());
  if (t.name.empty()) t.name = path.stem().string();
  return t;
}

std::size_t slots_for_density(double density, std::size_t slot_count) {
  return static_cast<std::size_t>(std::floor(density * static_cast<double>(slot_count) + 0.5));
}

Scenario resolve(const ScenarioTemplate& tmpl, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ConfigError("traffic_density", "must lie in [0, 1]");
  }
  Scenario s;
  s.name = tmpl.name;
  s.route = tmpl.route;
  s.ego = place(tmpl.route, tmpl.ego, ActorKind::kEgoVehicle);
  s.ego_actions = tmpl.ego_actions;
  s.traffic_density = density;
  s.seed = seed;
  s.max_steps = tmpl.max_steps;
  for (const auto& [spawn, script] : tmpl.npcs) {
    s.npcs.push_back({place(tmpl.route, spawn, ActorKind::kNpcVehicle), script});
  }
  for (const SpawnSpec& spawn : tmpl.obstacles) {
    s.obstacles.push_back(place(tmpl.route, spawn, ActorKind::kStaticObstacle));
  }

  s.slot_count = tmpl.slots.size();
  s.slots_used = slots_for_density(density, s.slot_count);
  Rng rng(seed);
  // Fisher-Yates prefix: the first slots_used entries are the chosen slots.
  std::vector<std::size_t> order(s.slot_count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = 0; i < s.slots_used; ++i) {
    std::swap(order[i], order[i + rng.index(s.slot_count - i)]);
  }
  std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s.slots_used));

  const RandomizeSpec& rnd = tmpl.randomize;
  for (std::size_t k = 0; k < s.slots_used; ++k) {
    const SlotSpec& slot = tmpl.slots[order[k]];
    SpawnSpec spawn = slot.spawn;
    if (slot.randomize) {
      spawn.offset += rng.uniform(rnd.offset_min, rnd.offset_max);
      if (!slot.is_obstacle) {
        spawn.speed = rng.uniform(rnd.speed_min, rnd.speed_max);
        spawn.length = rng.uniform(rnd.length_min, rnd.length_max);
        spawn.width = rng.uniform(rnd.width_min, rnd.width_max);
      }
    }
    if (slot.is_obstacle) {
      s.obstacles.push_back(place(tmpl.route, spawn, ActorKind::kStaticObstacle));
    } else {
      s.npcs.push_back({place(tmpl.route, spawn, ActorKind::kNpcVehicle), slot.script});
    }
  }
  return s;
}

Scenario resolve(const ScenarioTemplate& tmpl) {
  return resolve(tmpl, tmpl.traffic_density, tmpl.seed);
}

Scenario load_scenario(const std::filesystem::path& path) {
  return resolve(load_scenario_template(path));
}

}  // namespace riskrl::sim
