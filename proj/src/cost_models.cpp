// Copyright 2026 The raekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "raekit/cost_models.hpp"

#include <cmath>
#include <stdexcept>

namespace raekit {

CircuitCosts circuit_costs(int num_qubits, Connectivity conn) {
  if (num_qubits < 4 || num_qubits % 2 != 0) {
    throw std::invalid_argument("qubit count must be even and >= 4");
  }
  const double n = num_qubits;
  CircuitCosts costs;
  costs.num_qubits = num_qubits;
  costs.connectivity = conn;
  switch (conn) {
    case Connectivity::kTwoDimensional:
      costs.ansatz_depth = n;
      costs.phaseflip_depth = 192.0 * (n - 3.0) * (n - 1.0);
      break;
    case Connectivity::kAllToAll:
      costs.ansatz_depth = n / 2.0;
      costs.phaseflip_depth = 32.0 * n - 96.0;
      break;
  }
  return costs;
}

NoiseModel layer_decay(const CircuitCosts& costs, double logical_gate_error,
                       double p_bar) {
  if (logical_gate_error <= 0.0 || logical_gate_error >= 1.0) {
    throw std::invalid_argument("logical gate error must lie in (0, 1)");
  }
  NoiseModel noise;
  noise.lambda = -costs.layer_gates() * std::log1p(-logical_gate_error);
  noise.p_bar = p_bar;
  return noise;
}

double layer_time(const CircuitCosts& costs, double logical_gate_time) {
  if (logical_gate_time <= 0.0) {
    throw std::invalid_argument("logical gate time must be positive");
  }
  return costs.layer_depth() * logical_gate_time;
}

CodePoint code_point(int distance, const SurfaceCodeParams& params) {
  if (distance < 3) throw std::invalid_argument("code distance must be >= 3");
  const double eps = std::pow(10.0, -(distance + 3.0) / 2.0);
  const double cycles = params.cycles_per_gate_per_distance * distance;
  CodePoint point;
  point.distance = distance;
  point.logical_gate_error = -std::expm1(cycles * std::log1p(-eps));
  point.logical_gate_time = cycles * params.cycle_time;
  point.physical_qubits_per_logical = 2 * distance * distance;
  return point;
}

CodePoint distance_for_error(double target_gate_error,
                             const SurfaceCodeParams& params, int d_max) {
  if (target_gate_error <= 0.0 || target_gate_error >= 1.0) {
    throw std::invalid_argument("target gate error must lie in (0, 1)");
  }
  for (int d = 3; d <= d_max; ++d) {
    CodePoint point = code_point(d, params);
    if (point.logical_gate_error <= target_gate_error) return point;
  }
  throw std::runtime_error("target gate error below the model floor at d_max");
}

std::int64_t physical_qubits(int n_logical, int distance) {
  if (n_logical <= 0 || distance <= 0) {
    throw std::invalid_argument("qubit count and distance must be positive");
  }
  return 2ll * distance * distance * n_logical;
}

}  // namespace raekit
