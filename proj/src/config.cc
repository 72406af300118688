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


#include "riskrl/config.h"

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "riskrl/types.h"

namespace riskrl {
namespace {

constexpr double kWeightSumTolerance = 1e-9;

using DoubleField = double RewardConfig::*;

const std::vector<std::pair<std::string_view, DoubleField>>& double_fields() {
  static const std::vector<std::pair<std::string_view, DoubleField>> fields = {
      {"beta", &RewardConfig::beta},
      {"v_max", &RewardConfig::v_max},
      {"w_terminal", &RewardConfig::w_terminal},
      {"r_x_geom", &RewardConfig::r_x_geom},
      {"r_y_geom", &RewardConfig::r_y_geom},
      {"p_min", &RewardConfig::p_min},
      {"p_max", &RewardConfig::p_max},
      {"p_outer", &RewardConfig::p_outer},
      {"rho", &RewardConfig::rho},
      {"a_acc_max_x", &RewardConfig::a_acc_max_x},
      {"a_brk_min_x", &RewardConfig::a_brk_min_x},
      {"a_brk_max_x", &RewardConfig::a_brk_max_x},
      {"a_acc_max_y", &RewardConfig::a_acc_max_y},
      {"a_brk_min_y", &RewardConfig::a_brk_min_y},
      {"a_brk_max_y", &RewardConfig::a_brk_max_y},
      {"ttc_max", &RewardConfig::ttc_max},
      {"w_geom", &RewardConfig::w_geom},
      {"w_dyn", &RewardConfig::w_dyn},
      {"v_desired", &RewardConfig::v_desired},
      {"w_vel", &RewardConfig::w_vel},
      {"w_lane", &RewardConfig::w_lane},
      {"dt", &RewardConfig::dt},
      {"offset_threshold", &RewardConfig::offset_threshold},
      {"a_comfort_max", &RewardConfig::a_comfort_max},
      {"kappa_max", &RewardConfig::kappa_max},
      {"speed_limit", &RewardConfig::speed_limit},
  };
  return fields;
}

bool is_even_integer(double value) {
  return std::isfinite(value) && value == std::floor(value) && std::fmod(value, 2.0) == 0.0;
}

void require_positive(std::vector<std::string>& out, std::string_view name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    out.push_back(fmt::format("{}: must be a finite value > 0 (got {})", name, value));
  }
}

void require_weight_pair(std::vector<std::string>& out, std::string_view a_name, double a,
                         std::string_view b_name, double b) {
  if (!(a >= 0.0 && a <= 1.0)) out.push_back(fmt::format("{}: must lie in [0, 1] (got {})", a_name, a));
  if (!(b >= 0.0 && b <= 1.0)) out.push_back(fmt::format("{}: must lie in [0, 1] (got {})", b_name, b));
  if (!(std::abs(a + b - 1.0) <= kWeightSumTolerance)) {
    out.push_back(fmt::format("{}: {} + {} must equal 1 (got {})", a_name, a_name, b_name, a + b));
  }
}

std::string line_prefix(const YAML::Mark& mark) {
  return mark.is_null() ? std::string() : fmt::format("line {}: ", mark.line + 1);
}

double read_double(const YAML::Node& node, std::string_view key) {
  try {
    return node.as<double>();
  } catch (const YAML::BadConversion& e) {
    throw ConfigError(std::string(key), line_prefix(e.mark) + "expected a number");
  }
}

// Fills a missing member of a weight pair with the complement of the other.
void complete_pair(double& a, bool has_a, double& b, bool has_b) {
  if (has_a && !has_b) b = 1.0 - a;
  if (has_b && !has_a) a = 1.0 - b;
}

}  // namespace

const std::vector<std::string_view>& config_keys() {
  static const std::vector<std::string_view> keys = [] {
    std::vector<std::string_view> k;
    for (const auto& [name, member] : double_fields()) k.push_back(name);
    k.push_back("timeout_steps");
    return k;
  }();
  return keys;
}

std::vector<std::string> validate(const RewardConfig& c) {
  std::vector<std::string> out;
  if (!(c.beta > 0.0 && c.beta < 1.0)) {
    out.push_back(fmt::format("beta: must satisfy 0 < beta < 1 (got {})", c.beta));
  }
  for (const auto& [name, member] : double_fields()) {
    if (name == "beta" || name.starts_with("w_") || name.starts_with("p_")) continue;
    require_positive(out, name, c.*member);
  }
  require_positive(out, "w_terminal", c.w_terminal);
  for (auto [name, value] : {std::pair{"p_min", c.p_min}, std::pair{"p_max", c.p_max}}) {
    if (!(value >= 2.0) || !is_even_integer(value)) {
      out.push_back(fmt::format("{}: must be an even integer >= 2 (got {})", name, value));
    }
  }
  if (c.p_min > c.p_max) out.push_back("p_min: must not exceed p_max");
  if (!(c.p_outer >= 1.0) || !std::isfinite(c.p_outer)) {
    out.push_back(fmt::format("p_outer: must be >= 1 (got {})", c.p_outer));
  }
  if (c.a_brk_min_x > c.a_brk_max_x) out.push_back("a_brk_min_x: must not exceed a_brk_max_x");
  if (c.a_brk_min_y > c.a_brk_max_y) out.push_back("a_brk_min_y: must not exceed a_brk_max_y");
  require_weight_pair(out, "w_geom", c.w_geom, "w_dyn", c.w_dyn);
  require_weight_pair(out, "w_vel", c.w_vel, "w_lane", c.w_lane);
  if (c.timeout_steps < 1) {
    out.push_back(fmt::format("timeout_steps: must be >= 1 (got {})", c.timeout_steps));
  }
  return out;
}

namespace {

// Parses into `config`, returning every violation found.
std::vector<std::string> parse_into(std::string_view text, RewardConfig& config) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    return {fmt::format("{}parse error: {}", line_prefix(e.mark), e.msg)};
  }
  config = RewardConfig{};
  if (root.IsNull()) return {};
  if (!root.IsMap()) return {"config must be a flat key-value mapping"};

  std::vector<std::string> errors;
  std::vector<std::string> seen;
  for (const auto& entry : root) {
    const auto key = entry.first.as<std::string>();
    if (!entry.second.IsScalar()) {
      errors.push_back(fmt::format("{}: {}expected a scalar value", key, line_prefix(entry.second.Mark())));
      continue;
    }
    bool known = false;
    try {
      for (const auto& [name, member] : double_fields()) {
        if (key == name) {
          known = true;
          config.*member = read_double(entry.second, key);
          break;
        }
      }
      if (key == "timeout_steps") {
        known = true;
        try {
          config.timeout_steps = entry.second.as<int>();
        } catch (const YAML::BadConversion& e) {
          throw ConfigError(key, line_prefix(e.mark) + "expected an integer");
        }
      }
    } catch (const ConfigError& e) {
      errors.push_back(e.what());
      continue;
    }
    if (!known) {
      errors.push_back(fmt::format("{}: {}unknown key", key, line_prefix(entry.first.Mark())));
      continue;
    }
    seen.push_back(key);
  }

  const auto has = [&](std::string_view k) { return std::ranges::find(seen, k) != seen.end(); };
  complete_pair(config.w_geom, has("w_geom"), config.w_dyn, has("w_dyn"));
  complete_pair(config.w_vel, has("w_vel"), config.w_lane, has("w_lane"));
  if (!has("speed_limit")) config.speed_limit = config.v_max;

  for (auto& v : validate(config)) errors.push_back(std::move(v));
  return errors;
}

}  // namespace

std::vector<std::string> config_violations(std::string_view text) {
  RewardConfig unused;
  return parse_into(text, unused);
}

RewardConfig parse_config(std::string_view text) {
  RewardConfig config;
  const auto errors = parse_into(text, config);
  if (!errors.empty()) {
    std::string joined;
    for (const auto& e : errors) joined += (joined.empty() ? "" : "; ") + e;
    throw ConfigError(errors.front().substr(0, errors.front().find(':')), joined,
                      /*prefix_field=*/false);
  }
  return config;
}

RewardConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "cannot open config file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const RewardConfig& config) {
  std::string out;
  for (const auto& [name, member] : double_fields()) {
    out += fmt::format("{}: {}\n", name, config.*member);
  }
  out += fmt::format("timeout_steps: {}\n", config.timeout_steps);
  return out;
}

}  // namespace riskrl
