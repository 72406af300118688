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


#include "riskrl/sweep.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <exception>

#include "riskrl/rng.h"

namespace riskrl::sweep {

std::vector<sim::EpisodeTrace> run_jobs_serial(const std::vector<EpisodeJob>& jobs,
                                               const sim::Policy& policy,
                                               const RewardConfig& config) {
  std::vector<sim::EpisodeTrace> traces;
  traces.reserve(jobs.size());
  for (const EpisodeJob& job : jobs) {
    traces.push_back(sim::run_episode(sim::resolve(*job.scenario, job.density, job.seed), policy, config));
  }
  return traces;
}

std::vector<sim::EpisodeTrace> run_jobs_parallel(const std::vector<EpisodeJob>& jobs,
                                                 const sim::Policy& policy,
                                                 const RewardConfig& config) {
  std::vector<sim::EpisodeTrace> traces(jobs.size());
  std::exception_ptr failure;
  const auto n = static_cast<long long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) {
    try {
      const EpisodeJob& job = jobs[static_cast<std::size_t>(i)];
      traces[static_cast<std::size_t>(i)] =
          sim::run_episode(sim::resolve(*job.scenario, job.density, job.seed), policy, config);
    } catch (...) {
#pragma omp critical(riskrl_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return traces;
}

std::uint64_t episode_seed(std::uint64_t seed, std::size_t density_index, std::size_t episode) {
  return splitmix64(splitmix64(seed ^ splitmix64(density_index)) + episode);
}

std::vector<EpisodeJob> plan_jobs(const SweepSpec& spec) {
  if (spec.scenarios.empty()) throw ConfigError("scenarios", "no scenario files");
  if (spec.episodes_per_density < 1) throw ConfigError("episodes", "must be >= 1");
  if (spec.densities.empty()) throw ConfigError("densities", "at least one density required");
  std::vector<EpisodeJob> jobs;
  for (std::size_t d = 0; d < spec.densities.size(); ++d) {
    const double density = spec.densities[d];
    if (!(density >= 0.0 && density <= 1.0)) {
      throw ConfigError("densities", fmt::format("{} outside [0, 1]", density));
    }
    for (int e = 0; e < spec.episodes_per_density; ++e) {
      const auto idx = static_cast<std::size_t>(e);
      jobs.push_back({&spec.scenarios[idx % spec.scenarios.size()], density,
                      episode_seed(spec.seed, d, idx)});
    }
  }
  return jobs;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const RewardConfig& config, bool parallel) {
  const std::vector<EpisodeJob> jobs = plan_jobs(spec);
  const sim::Policy policy = sim::make_policy(spec.policy);
  const auto traces = parallel ? run_jobs_parallel(jobs, policy, config)
                               : run_jobs_serial(jobs, policy, config);
  std::vector<SweepRow> rows;
  const auto per = static_cast<std::size_t>(spec.episodes_per_density);
  for (std::size_t d = 0; d < spec.densities.size(); ++d) {
    const std::vector<sim::EpisodeTrace> group(traces.begin() + static_cast<std::ptrdiff_t>(d * per),
                                               traces.begin() + static_cast<std::ptrdiff_t>((d + 1) * per));
    rows.push_back({spec.densities[d], sim::aggregate_metrics(group)});
  }
  return rows;
}

std::vector<sim::ScenarioTemplate> load_scenario_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw ConfigError(dir.string(), "not a scenario directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".yaml" || ext == ".yml")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<sim::ScenarioTemplate> out;
  for (const auto& f : files) out.push_back(sim::load_scenario_template(f));
  if (out.empty()) throw ConfigError(dir.string(), "contains no scenario files");
  return out;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "density,episodes,success_pct,offroad_pct,collision_pct,timeout_pct,"
         "cumulative_reward_mean,cumulative_reward_std,route_progress_mean,route_progress_std,"
         "average_velocity_mean,average_velocity_std\n";
  for (const SweepRow& r : rows) {
    const sim::MetricSummary& m = r.metrics;
    out << fmt::format("{:.4g},{},{:.2f},{:.2f},{:.2f},{:.2f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n",
                       r.density, m.episodes, m.success_pct, m.offroad_pct, m.collision_pct,
                       m.timeout_pct, m.cumulative_reward.mean, m.cumulative_reward.stddev,
                       m.route_progress.mean, m.route_progress.stddev, m.average_velocity.mean,
                       m.average_velocity.stddev);
  }
}

}  // namespace riskrl::sweep
