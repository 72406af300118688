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


#ifndef RISKRL_CLI_H_
#define RISKRL_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace riskrl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // I/O or validation
inline constexpr int kExitUsage = 2;

struct RunOptions {
  std::filesystem::path scenario;
  std::optional<std::filesystem::path> config;
  std::string policy = "lane_follower";
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
};

struct SweepOptions {
  std::filesystem::path scenario_dir;
  std::optional<std::filesystem::path> config;
  std::vector<double> densities{0.5, 0.75, 1.0};
  int episodes = 20;
  std::uint64_t seed = 0;
  std::string policy = "idm";
  std::filesystem::path out = "sweep.csv";
  bool serial = false;
};

struct FieldOptions {
  std::optional<std::filesystem::path> config;
  std::string mode = "same_direction";
  double ego_speed = 0.0;
  double other_speed = 0.0;
  std::string grid = "-20,40,-6,6,0.25";
  std::filesystem::path out = "field.csv";
  bool serial = false;
};

// Writes <out_dir>/trace.csv and <out_dir>/summary.json.
int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);
// Writes one metrics row per density to opts.out.
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
// Writes the risk field grid to opts.out.
int cmd_field(const FieldOptions& opts, std::ostream& out, std::ostream& err);
// Validates a scenario (has schema_version or route) or a config document.
int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

// Parses "0.5,0.75,1.0".
std::vector<double> parse_densities(const std::string& text);

}  // namespace riskrl::cli

#endif  // RISKRL_CLI_H_
