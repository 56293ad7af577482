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

#include <vector>

#include "raekit/hamiltonian.hpp"

namespace raekit {

struct RuntimeModelParams {
  double lambda = 0.0;  // decay per layer
  double p_bar = 1.0;   // prep/measure factor
  double omega = 1.0;   // seconds per layer unit used by the allocation
};

/// Expected total layer count for a single-amplitude estimate to reach target
/// RMSE epsilon:
///   t = e^2/(e-1) * e^-lambda / (2 p_bar^2)
///       * [lambda/eps^2 + 1/(sqrt(2) eps) + hypot(lambda/eps^2, 2 sqrt(2)/eps)]
/// Interpolates between 1/eps (Heisenberg) and lambda/eps^2 (shot-noise).
double runtime_model_layers(double epsilon, const RuntimeModelParams& params);

/// Per-term runtime in seconds:
///   T_i = omega/2 * [lambda/eps^2 + 1/(sqrt(2) eps) + hypot(lambda/eps^2, sqrt(8)/eps)]
double per_term_runtime(double epsilon_i, const RuntimeModelParams& params);

/// Calibrates omega so that per_term_runtime(eps) == tau_l *
/// runtime_model_layers(eps) exactly, with tau_l the layer duration.
double omega_from_layer_time(double tau_l, double lambda, double p_bar);

struct AllocationResult {
  std::vector<double> epsilons;        // per non-identity term
  std::vector<double> term_runtimes;   // seconds
  std::vector<double> coefficients;    // |mu_i| order matching epsilons
  double lagrange_multiplier = 0.0;
  double total_runtime = 0.0;          // sum of term runtimes
  double parallel_runtime = 0.0;       // max of term runtimes
};

/// Optimal per-term accuracy allocation under the constraint
/// sum_i mu_i^2 eps_i^2 = target_rmse^2. Solves the multiplier polynomial
///   x^4 eps^2 = x sqrt(2 omega lambda) sum|mu| + alpha^(2/3) sum|mu|^(2/3)
/// for x = Lambda^(1/6) by bisection, evaluates the approximate closed form
/// for eps_i^2, then rescales so the constraint holds exactly.
AllocationResult allocate(const PauliHamiltonian& h, double target_rmse,
                          const RuntimeModelParams& params);

/// Baseline with all eps_i^2 equal, fixed by the constraint.
AllocationResult uniform_allocation(const PauliHamiltonian& h,
                                    double target_rmse,
                                    const RuntimeModelParams& params);

}  // namespace raekit
