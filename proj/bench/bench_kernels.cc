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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "riskrl/field.h"
#include "riskrl/scenario.h"
#include "riskrl/sweep.h"

namespace {

using namespace riskrl;

field::FieldRequest field_request() {
  field::FieldRequest req;
  req.mode = risk::InteractionMode::kSameDirection;
  req.ego_speed = 6.0;
  req.other_speed = 4.0;
  req.grid = {-20.0, 40.0, -6.0, 6.0, 0.05};
  return req;
}

void BM_FieldSerial(benchmark::State& state) {
  const auto req = field_request();
  const RewardConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(field::risk_field_serial(req, config));
}

void BM_FieldParallel(benchmark::State& state) {
  const auto req = field_request();
  const RewardConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(field::risk_field_parallel(req, config));
}

constexpr const char* kCorridor = R"(
schema_version: 1
name: bench_corridor
max_steps: 200
route: {centerline: [[0, 0], [150, 0]], lane_width: 3.5}
ego: {station: 0, speed: 2}
slots:
  - {station: 20}
  - {station: 40}
  - {station: 60}
  - {station: 50, offset: 3.5, heading_offset: 3.141592653589793}
  - {station: 90, offset: 3.5, heading_offset: 3.141592653589793}
)";

std::vector<sweep::EpisodeJob> batch(const sim::ScenarioTemplate& tmpl, int n) {
  std::vector<sweep::EpisodeJob> jobs;
  for (int i = 0; i < n; ++i) {
    jobs.push_back({&tmpl, 0.8, sweep::episode_seed(3, 0, static_cast<std::size_t>(i))});
  }
  return jobs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto tmpl = sim::parse_scenario_template(kCorridor);
  const auto jobs = batch(tmpl, static_cast<int>(state.range(0)));
  const auto policy = sim::make_policy("idm");
  const RewardConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(sweep::run_jobs_serial(jobs, policy, config));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto tmpl = sim::parse_scenario_template(kCorridor);
  const auto jobs = batch(tmpl, static_cast<int>(state.range(0)));
  const auto policy = sim::make_policy("idm");
  const RewardConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(sweep::run_jobs_parallel(jobs, policy, config));
}

}  // namespace

BENCHMARK(BM_FieldSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FieldParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BatchParallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
