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


#ifndef RISKRL_SWEEP_H_
#define RISKRL_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/episode.h"
#include "riskrl/scenario.h"

namespace riskrl::sweep {

// One episode of a batch: the template is resolved with (density, seed).
struct EpisodeJob {
  const sim::ScenarioTemplate* scenario = nullptr;
  double density = 1.0;
  std::uint64_t seed = 0;
};

// Results are indexed like `jobs` in both kernels.
std::vector<sim::EpisodeTrace> run_jobs_serial(const std::vector<EpisodeJob>& jobs,
                                               const sim::Policy& policy,
                                               const RewardConfig& config);
std::vector<sim::EpisodeTrace> run_jobs_parallel(const std::vector<EpisodeJob>& jobs,
                                                 const sim::Policy& policy,
                                                 const RewardConfig& config);

struct SweepSpec {
  std::vector<sim::ScenarioTemplate> scenarios;  // episode i uses scenarios[i % size]
  std::vector<double> densities;
  int episodes_per_density = 20;
  std::uint64_t seed = 0;
  std::string policy = "idm";
};

struct SweepRow {
  double density = 0.0;
  sim::MetricSummary metrics;
};

// Seed of episode `episode` at density index `density_index`.
std::uint64_t episode_seed(std::uint64_t seed, std::size_t density_index, std::size_t episode);

std::vector<EpisodeJob> plan_jobs(const SweepSpec& spec);

// Throws ConfigError for empty scenario sets, densities outside [0, 1] or a
// non-positive episode count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RewardConfig& config,
                                bool parallel = true);

// Scenario files (*.yaml, *.yml) of a directory in lexicographic order.
std::vector<sim::ScenarioTemplate> load_scenario_dir(const std::filesystem::path& dir);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace riskrl::sweep

#endif  // RISKRL_SWEEP_H_
