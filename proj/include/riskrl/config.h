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


#ifndef RISKRL_CONFIG_H_
#define RISKRL_CONFIG_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace riskrl {

// Parameters of the reward function. Defaults reproduce the published
// parameter table; dt, offset_threshold, speed_limit and timeout_steps are
// project defaults.
struct RewardConfig {
  double beta = 0.25;
  double v_max = 6.0;
  double w_terminal = 50.0;
  double r_x_geom = 2.0;
  double r_y_geom = 0.5;
  double p_min = 2.0;
  double p_max = 4.0;
  double p_outer = 4.0;
  double rho = 0.3;
  double a_acc_max_x = 6.0;
  double a_brk_min_x = 4.0;
  double a_brk_max_x = 8.0;
  double a_acc_max_y = 0.2;
  double a_brk_min_y = 0.4;
  double a_brk_max_y = 0.8;
  double ttc_max = 7.0;
  double w_geom = 0.5;
  double w_dyn = 0.5;
  double v_desired = 4.0;
  double w_vel = 0.5;
  double w_lane = 0.5;
  double dt = 0.1;
  double offset_threshold = 0.5;
  double a_comfort_max = 8.0;
  double kappa_max = 0.3;
  double speed_limit = 6.0;
  int timeout_steps = 500;

  friend bool operator==(const RewardConfig&, const RewardConfig&) = default;
};

// Human-readable violations of the config invariants, each prefixed with the
// field name. Empty when the config is valid.
std::vector<std::string> validate(const RewardConfig& config);

// Parses a flat YAML mapping. Absent keys take their defaults; a lone member
// of a weight pair is completed so the pair sums to one. Unknown keys,
// malformed text and invariant violations throw ConfigError.
RewardConfig parse_config(std::string_view text);
RewardConfig load_config(const std::filesystem::path& path);

// Every problem in a config document (parse, unknown keys, invariants).
std::vector<std::string> config_violations(std::string_view text);

// Flat YAML document listing every field; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RewardConfig& config);

// Names of all recognised config keys, in serialization order.
const std::vector<std::string_view>& config_keys();

}  // namespace riskrl

#endif  // RISKRL_CONFIG_H_
