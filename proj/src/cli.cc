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


#include "riskrl/cli.h"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "riskrl/config.h"
#include "riskrl/episode.h"
#include "riskrl/field.h"
#include "riskrl/scenario.h"
#include "riskrl/sweep.h"

namespace riskrl::cli {
namespace {

RewardConfig config_or_default(const std::optional<std::filesystem::path>& path) {
  return path ? load_config(*path) : RewardConfig{};
}

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError(path.string(), "cannot open output file");
  return out;
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

std::vector<double> parse_densities(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stod(item, &used));
    } catch (const std::exception&) {
      throw ConfigError("densities", "expected comma-separated numbers, got '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("densities", "at least one density required");
  return out;
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  sim::Policy policy;
  try {
    policy = sim::make_policy(opts.policy);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    const RewardConfig config = config_or_default(opts.config);
    sim::ScenarioTemplate tmpl = sim::load_scenario_template(opts.scenario);
    const sim::Scenario scenario =
        sim::resolve(tmpl, tmpl.traffic_density, opts.seed.value_or(tmpl.seed));
    const sim::EpisodeTrace trace = sim::run_episode(scenario, policy, config);

    std::filesystem::create_directories(opts.out_dir);
    auto trace_file = open_output(opts.out_dir / "trace.csv");
    sim::write_trace_csv(trace, trace_file);
    auto summary_file = open_output(opts.out_dir / "summary.json");
    summary_file << sim::summary_json(trace);
    if (!trace_file || !summary_file) throw ConfigError(opts.out_dir.string(), "write failed");
    out << "outcome: " << reward::to_string(trace.outcome) << ", steps: " << trace.steps.size()
        << ", cumulative reward: " << trace.cumulative_reward << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    sim::make_policy(opts.policy);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  try {
    if (opts.episodes < 1) throw ConfigError("episodes", "must be >= 1");
    const RewardConfig config = config_or_default(opts.config);
    sweep::SweepSpec spec;
    spec.scenarios = sweep::load_scenario_dir(opts.scenario_dir);
    spec.densities = opts.densities;
    spec.episodes_per_density = opts.episodes;
    spec.seed = opts.seed;
    spec.policy = opts.policy;
    const auto rows = sweep::run_sweep(spec, config, !opts.serial);
    auto file = open_output(opts.out);
    sweep::write_sweep_csv(rows, file);
    if (!file) throw ConfigError(opts.out.string(), "write failed");
    out << "wrote " << rows.size() << " rows to " << opts.out.string() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_field(const FieldOptions& opts, std::ostream& out, std::ostream& err) {
  const auto mode = risk::parse_mode(opts.mode);
  if (!mode) {
    err << "error: unknown mode '" << opts.mode
        << "' (expected same_direction, opposite_direction, intersecting, static_obstacle)\n";
    return kExitUsage;
  }
  try {
    const RewardConfig config = config_or_default(opts.config);
    field::FieldRequest req{*mode, opts.ego_speed, opts.other_speed, field::parse_grid(opts.grid)};
    if (opts.ego_speed < 0.0 || opts.other_speed < 0.0) {
      throw ConfigError("speed", "speeds must be >= 0");
    }
    const auto cells = opts.serial ? field::risk_field_serial(req, config)
                                   : field::risk_field_parallel(req, config);
    auto file = open_output(opts.out);
    field::write_field_csv(cells, file);
    if (!file) throw ConfigError(opts.out.string(), "write failed");
    out << "wrote " << req.grid.nx() << "x" << req.grid.ny() << " grid to " << opts.out.string()
        << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  const auto text = read_file(path);
  if (!text) {
    err << "error: " << path.string() << ": cannot open file\n";
    return kExitFailure;
  }
  bool is_scenario = false;
  try {
    const YAML::Node root = YAML::Load(*text);
    is_scenario = root.IsMap() && (root["schema_version"] || root["route"]);
  } catch (const YAML::Exception&) {
    // Reported with its line number by the validators below.
  }
  const auto violations = is_scenario ? sim::scenario_violations(*text) : config_violations(*text);
  if (violations.empty()) {
    out << path.string() << ": valid " << (is_scenario ? "scenario" : "config") << '\n';
    return kExitOk;
  }
  for (const auto& v : violations) err << path.string() << ": " << v << '\n';
  return kExitFailure;
}

}  // namespace riskrl::cli
