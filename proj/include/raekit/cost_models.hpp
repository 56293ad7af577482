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

#pragma once

#include <cstdint>

#include "raekit/likelihood.hpp"

namespace raekit {

enum class Connectivity { kTwoDimensional, kAllToAll };

/// Two-qubit-layer depths for the ansatz and the phase-flip reflection, per
/// connectivity. Effective gate counts follow the depth * N/2 convention
/// (idle qubits decohere like an imperfect two-qubit gate).
struct CircuitCosts {
  int num_qubits = 0;
  Connectivity connectivity = Connectivity::kAllToAll;
  double ansatz_depth = 0.0;      // D_A
  double phaseflip_depth = 0.0;   // D_R

  double ansatz_gates() const { return ansatz_depth * num_qubits / 2.0; }
  double phaseflip_gates() const { return phaseflip_depth * num_qubits / 2.0; }
  /// Depth of one amplification layer A R0 A^dagger P (Pauli gates free).
  double layer_depth() const { return 2.0 * ansatz_depth + phaseflip_depth; }
  double layer_gates() const { return layer_depth() * num_qubits / 2.0; }
};

/// 2D: D_A = N, D_R = 192 (N-3)(N-1); all-to-all: D_A = N/2, D_R = 32N - 96.
/// Requires N >= 4 and even.
CircuitCosts circuit_costs(int num_qubits, Connectivity conn);

/// lambda = -(layer gate count) * ln(1 - rbar_g), so that
/// e^-lambda = (1 - rbar_g)^((2 D_A + D_R) N / 2).
NoiseModel layer_decay(const CircuitCosts& costs, double logical_gate_error,
                       double p_bar = 1.0);

/// tau_l = (2 D_A + D_R) * logical gate time.
double layer_time(const CircuitCosts& costs, double logical_gate_time);

struct SurfaceCodeParams {
  double cycle_time = 1e-6;               // seconds
  double cycles_per_gate_per_distance = 100.0;
  double physical_gate_error = 1e-3;      // metadata; baked into eps(d)
};

struct CodePoint {
  int distance = 0;
  double logical_gate_error = 0.0;  // rbar_g
  double logical_gate_time = 0.0;   // seconds
  int physical_qubits_per_logical = 0;  // 2 d^2
};

/// Per-cycle logical error eps = 10^-((d+3)/2); gate error is the exact
/// product form 1 - (1 - eps)^(100 d). Requires d >= 3.
CodePoint code_point(int distance, const SurfaceCodeParams& params);

/// Smallest d >= 3 with logical gate error <= target; throws when the target
/// is below the model floor at d_max.
CodePoint distance_for_error(double target_gate_error,
                             const SurfaceCodeParams& params, int d_max = 51);

std::int64_t physical_qubits(int n_logical, int distance);

}  // namespace raekit
