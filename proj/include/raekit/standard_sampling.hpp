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

#include "raekit/cost_models.hpp"
#include "raekit/hamiltonian.hpp"

namespace raekit {

struct StandardSamplingEstimate {
  double runtime_constant = 0.0;     // K, Ha^2
  double shots = 0.0;                // M = K / eps^2
  double mitigation_overhead = 1.0;  // 1/f^2
  double shot_time = 0.0;            // C = D_A * logical gate time, seconds
  double total_runtime = 0.0;        // M * C * overhead, seconds
};

/// K = (sum_i |mu_i|)^2 over non-identity terms: the ungrouped worst-case
/// constant with unit single-shot variances and shots proportional to |mu_i|.
double runtime_constant_K(const PauliHamiltonian& h);

/// Variance inflation 1/f^2 = (1 - rbar_g)^(-D_A N) from rescaling noisy
/// expectation values by the ansatz circuit fidelity.
double mitigation_overhead(const CircuitCosts& costs, double logical_gate_error);

StandardSamplingEstimate standard_runtime(const PauliHamiltonian& h,
                                          double target_rmse,
                                          const CircuitCosts& costs,
                                          const CodePoint& code);

}  // namespace raekit
