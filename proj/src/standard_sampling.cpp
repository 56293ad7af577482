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

#include "raekit/standard_sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace raekit {

double runtime_constant_K(const PauliHamiltonian& h) {
  const double norm = h.one_norm(/*include_identity=*/false);
  if (norm == 0.0) {
    throw std::invalid_argument("Hamiltonian has no non-identity weight");
  }
  return norm * norm;
}

double mitigation_overhead(const CircuitCosts& costs,
                           double logical_gate_error) {
  if (logical_gate_error <= 0.0 || logical_gate_error >= 1.0) {
    throw std::invalid_argument("logical gate error must lie in (0, 1)");
  }
  // 1/f^2 = (1 - rbar_g)^(-D_A N), following the printed exponent.
  const double log_f2 = costs.ansatz_depth * costs.num_qubits *
                        std::log1p(-logical_gate_error);
  return std::exp(-log_f2);
}

StandardSamplingEstimate standard_runtime(const PauliHamiltonian& h,
                                          double target_rmse,
                                          const CircuitCosts& costs,
                                          const CodePoint& code) {
  if (target_rmse <= 0.0) {
    throw std::invalid_argument("target RMSE must be positive");
  }
  StandardSamplingEstimate est;
  est.runtime_constant = runtime_constant_K(h);
  est.shots = est.runtime_constant / (target_rmse * target_rmse);
  est.mitigation_overhead = mitigation_overhead(costs, code.logical_gate_error);
  est.shot_time = costs.ansatz_depth * code.logical_gate_time;
  est.total_runtime = est.shots * est.shot_time * est.mitigation_overhead;
  return est;
}

}  // namespace raekit
