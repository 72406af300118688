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


#ifndef RISKRL_FIELD_H_
#define RISKRL_FIELD_H_

#include <ostream>
#include <string_view>
#include <vector>

#include "riskrl/config.h"
#include "riskrl/risk.h"

namespace riskrl::field {

// Inclusive sample lattice x_min, x_min + resolution, ... <= x_max (same in y).
struct GridSpec {
  double x_min = -20.0;
  double x_max = 40.0;
  double y_min = -6.0;
  double y_max = 6.0;
  double resolution = 0.25;

  std::size_t nx() const;
  std::size_t ny() const;
};

// "x_min,x_max,y_min,y_max,resolution"; throws ConfigError when malformed.
GridSpec parse_grid(std::string_view text);
void validate_grid(const GridSpec& grid);

struct FieldRequest {
  risk::InteractionMode mode = risk::InteractionMode::kSameDirection;
  double ego_speed = 0.0;
  double other_speed = 0.0;
  GridSpec grid;
};

struct FieldCell {
  double x = 0.0;
  double y = 0.0;
  double geom = 0.0;
  double dyn = 0.0;
  double combined = 0.0;
};

// Ego at the origin heading +x; a virtual other actor is placed at every
// lattice point with the heading implied by the mode (same 0, opposite pi,
// intersecting pi/2). Cells are row-major in y then x.
std::vector<FieldCell> risk_field_serial(const FieldRequest& request, const RewardConfig& config);
// OpenMP-parallel over rows; identical output to the serial kernel.
std::vector<FieldCell> risk_field_parallel(const FieldRequest& request, const RewardConfig& config);

void write_field_csv(const std::vector<FieldCell>& cells, std::ostream& out);

}  // namespace riskrl::field

#endif  // RISKRL_FIELD_H_
