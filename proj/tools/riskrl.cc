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


#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "riskrl/cli.h"
#include "riskrl/types.h"

namespace {

using riskrl::cli::kExitUsage;

void add_config_option(CLI::App& cmd, std::string& config) {
  cmd.add_option("--config", config, "Reward config YAML (defaults to built-in parameters)")
      ->envname("RISKRL_CONFIG");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical risk-aware reward: episodes, density sweeps and risk fields"};
  app.require_subcommand(1);

  riskrl::cli::RunOptions run;
  std::string run_scenario, run_config, run_out = "out", run_seed;
  auto* run_cmd = app.add_subcommand("run", "Run one episode, write trace.csv and summary.json");
  run_cmd->add_option("--scenario", run_scenario, "Scenario YAML file")
      ->required()
      ->envname("RISKRL_SCENARIO");
  add_config_option(*run_cmd, run_config);
  run_cmd
      ->add_option("--policy", run.policy,
                   "Built-in policy: lane_follower, full_throttle, wait, idm, replay")
      ->envname("RISKRL_POLICY")
      ->capture_default_str();
  run_cmd->add_option("--out", run_out, "Output directory")
      ->envname("RISKRL_OUT")
      ->capture_default_str();
  run_cmd->add_option("--seed", run_seed, "Override the scenario seed")->envname("RISKRL_SEED");

  riskrl::cli::SweepOptions sweep;
  std::string sweep_dir, sweep_config, sweep_out = "sweep.csv", sweep_densities = "0.5,0.75,1.0";
  auto* sweep_cmd = app.add_subcommand("sweep", "Aggregate metrics per traffic density");
  sweep_cmd->add_option("--scenario", sweep_dir, "Directory of scenario YAML files")
      ->required()
      ->envname("RISKRL_SCENARIO");
  add_config_option(*sweep_cmd, sweep_config);
  sweep_cmd->add_option("--densities", sweep_densities, "Comma-separated densities in [0, 1]")
      ->envname("RISKRL_DENSITIES")
      ->capture_default_str();
  sweep_cmd->add_option("--episodes", sweep.episodes, "Episodes per density")
      ->envname("RISKRL_EPISODES")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep.seed, "Sweep seed")
      ->envname("RISKRL_SEED")
      ->capture_default_str();
  sweep_cmd->add_option("--policy", sweep.policy, "Built-in policy")
      ->envname("RISKRL_POLICY")
      ->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path")
      ->envname("RISKRL_OUT")
      ->capture_default_str();
  sweep_cmd->add_flag("--serial", sweep.serial, "Use the single-threaded reference kernel");

  riskrl::cli::FieldOptions field;
  std::string field_config, field_out = "field.csv";
  auto* field_cmd = app.add_subcommand("field", "Dump a risk-field grid for heatmaps");
  add_config_option(*field_cmd, field_config);
  field_cmd
      ->add_option("--mode", field.mode,
                   "same_direction, opposite_direction, intersecting or static_obstacle")
      ->envname("RISKRL_MODE")
      ->capture_default_str();
  field_cmd->add_option("--ego-speed", field.ego_speed, "Ego speed [m/s]")
      ->envname("RISKRL_EGO_SPEED")
      ->capture_default_str();
  field_cmd->add_option("--other-speed", field.other_speed, "Other actor speed [m/s]")
      ->envname("RISKRL_OTHER_SPEED")
      ->capture_default_str();
  field_cmd->add_option("--grid", field.grid, "x_min,x_max,y_min,y_max,resolution")
      ->envname("RISKRL_GRID")
      ->capture_default_str();
  field_cmd->add_option("--out", field_out, "Output CSV path")
      ->envname("RISKRL_OUT")
      ->capture_default_str();
  field_cmd->add_flag("--serial", field.serial, "Use the single-threaded reference kernel");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a scenario or config file");
  validate_cmd->add_option("path", validate_path, "Scenario or config YAML")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run_cmd) {
      run.scenario = run_scenario;
      if (!run_config.empty()) run.config = run_config;
      run.out_dir = run_out;
      if (!run_seed.empty()) run.seed = std::stoull(run_seed);
      return riskrl::cli::cmd_run(run, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
      sweep.scenario_dir = sweep_dir;
      if (!sweep_config.empty()) sweep.config = sweep_config;
      sweep.out = sweep_out;
      sweep.densities = riskrl::cli::parse_densities(sweep_densities);
      return riskrl::cli::cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*field_cmd) {
      if (!field_config.empty()) field.config = field_config;
      field.out = field_out;
      return riskrl::cli::cmd_field(field, std::cout, std::cerr);
    }
    return riskrl::cli::cmd_validate(validate_path, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
