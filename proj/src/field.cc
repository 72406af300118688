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


#include "riskrl/field.h"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "riskrl/types.h"

namespace riskrl::field {
namespace {

std::size_t lattice_size(double lo, double hi, double step) {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

ActorState field_ego(const FieldRequest& req) {
  ActorState ego;
  ego.kind = ActorKind::kEgoVehicle;
  ego.speed_long = req.ego_speed;
  return ego;
}

ActorState field_other(const FieldRequest& req, double x, double y) {
  ActorState other;
  other.position = {x, y};
  switch (req.mode) {
    case risk::InteractionMode::kSameDirection:
      other.heading = 0.0;
      break;
    case risk::InteractionMode::kOppositeDirection:
      other.heading = std::numbers::pi;
      break;
    case risk::InteractionMode::kIntersecting:
      other.heading = 0.5 * std::numbers::pi;
      break;
    case risk::InteractionMode::kStaticObstacle:
      other.kind = ActorKind::kStaticObstacle;
      other.length = 1.0;
      other.width = 1.0;
      return other;
  }
  other.speed_long = req.other_speed;
  return other;
}

// Evaluates the assessment with the requested mode, independent of the
// heading classifier.
FieldCell evaluate_cell(const FieldRequest& req, const ActorState& ego, double x, double y,
                        const RewardConfig& config) {
  const ActorState other = field_other(req, x, y);
  const double geom = risk::geometric_risk(ego, other, req.mode, config);
  const double dyn = risk::dynamic_risk(ego, other, req.mode, config).penalty;
  return {x, y, geom, dyn, config.w_geom * geom + config.w_dyn * dyn};
}

}  // namespace

std::size_t GridSpec::nx() const { return lattice_size(x_min, x_max, resolution); }
std::size_t GridSpec::ny() const { return lattice_size(y_min, y_max, resolution); }

void validate_grid(const GridSpec& g) {
  if (!(g.resolution > 0.0) || !std::isfinite(g.resolution)) {
    throw ConfigError("grid.resolution", "must be > 0");
  }
  if (!(g.x_max >= g.x_min) || !(g.y_max >= g.y_min)) {
    throw ConfigError("grid", "bounds must satisfy min <= max");
  }
}

GridSpec parse_grid(std::string_view text) {
  std::vector<double> values;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("grid", "expected x_min,x_max,y_min,y_max,resolution");
    }
  }
  if (values.size() != 5) throw ConfigError("grid", "expected x_min,x_max,y_min,y_max,resolution");
  GridSpec g{values[0], values[1], values[2], values[3], values[4]};
  validate_grid(g);
  return g;
}

std::vector<FieldCell> risk_field_serial(const FieldRequest& req, const RewardConfig& config) {
  validate_grid(req.grid);
  const std::size_t nx = req.grid.nx();
  const std::size_t ny = req.grid.ny();
  const ActorState ego = field_ego(req);
  std::vector<FieldCell> cells;
  cells.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    const double y = req.grid.y_min + static_cast<double>(j) * req.grid.resolution;
    for (std::size_t i = 0; i < nx; ++i) {
      const double x = req.grid.x_min + static_cast<double>(i) * req.grid.resolution;
      cells.push_back(evaluate_cell(req, ego, x, y, config));
    }
  }
  return cells;
}

std::vector<FieldCell> risk_field_parallel(const FieldRequest& req, const RewardConfig& config) {
  validate_grid(req.grid);
  const auto nx = static_cast<long long>(req.grid.nx());
  const auto ny = static_cast<long long>(req.grid.ny());
  const ActorState ego = field_ego(req);
  std::vector<FieldCell> cells(static_cast<std::size_t>(nx * ny));
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < ny; ++j) {
    const double y = req.grid.y_min + static_cast<double>(j) * req.grid.resolution;
    for (long long i = 0; i < nx; ++i) {
      const double x = req.grid.x_min + static_cast<double>(i) * req.grid.resolution;
      cells[static_cast<std::size_t>(j * nx + i)] = evaluate_cell(req, ego, x, y, config);
    }
  }
  return cells;
}

void write_field_csv(const std::vector<FieldCell>& cells, std::ostream& out) {
  out << "x,y,geom_penalty,dyn_penalty,combined\n";
  for (const FieldCell& c : cells) {
    out << fmt::format("{:.9g},{:.9g},{:.9g},{:.9g},{:.9g}\n", c.x, c.y, c.geom, c.dyn, c.combined);
  }
}

}  // namespace riskrl::field
