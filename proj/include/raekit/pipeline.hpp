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
#include <optional>
#include <string>
#include <vector>

#include "raekit/cost_models.hpp"
#include "raekit/hamiltonian.hpp"
#include "raekit/runtime_model.hpp"
#include "raekit/standard_sampling.hpp"

namespace raekit {

struct SweepPoint {
  int distance = 0;
  double gate_error = 0.0;      // rbar_g at this distance
  double gate_time = 0.0;       // seconds
  double lambda = 0.0;
  double tau_l = 0.0;           // seconds per layer
  double rae_runtime = 0.0;     // serial, seconds
  double rae_parallel_runtime = 0.0;
  double rae_layers = 0.0;      // total queried layers sum_j t_j
  double vqe_runtime = 0.0;     // seconds
  std::int64_t rae_physical_qubits = 0;
  std::int64_t vqe_physical_qubits = 0;
};

enum class Method { kRae, kVqe };

/// One row per code distance: surface-code point -> circuit costs -> noise and
/// layer time -> accuracy allocation -> RAE runtime; standard sampling for the
/// VQE column.
std::vector<SweepPoint> sweep(const PauliHamiltonian& h, double target_rmse,
                              Connectivity conn,
                              const SurfaceCodeParams& params, int d_min,
                              int d_max, double p_bar = 1.0);

/// Minimizer of the method's runtime; ties break toward the smaller distance.
SweepPoint optimal_point(const std::vector<SweepPoint>& points, Method method);

/// Largest swept gate error such that RAE beats VQE there and at every smaller
/// swept gate error; nullopt when RAE never wins.
std::optional<double> crossover_error_rate(
    const std::vector<SweepPoint>& points);

struct PowerLawFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual_norm = 0.0;
  int points_used = 0;
  bool c_pinned = false;
};

/// Nonlinear least squares of y = a N^b + c (Levenberg-Marquardt). With
/// exactly two points, c is pinned to zero and the fit is exact.
PowerLawFit fit_power_law(const std::vector<double>& n,
                          const std::vector<double>& y);

double extrapolate(const PowerLawFit& fit, double n_target);

struct ReportSeries {
  std::string label;
  std::vector<PauliHamiltonian> hamiltonians;  // increasing qubit count
  int target_qubits = 0;
};

struct ReportConfig {
  double target_rmse = 1e-3;
  Connectivity connectivity = Connectivity::kAllToAll;
  SurfaceCodeParams code_params;
  int d_min = 3;
  int d_max = 35;
};

struct RuntimePrediction {
  std::string label;
  int logical_qubits = 0;
  std::int64_t rae_physical_qubits = 0;
  std::int64_t vqe_physical_qubits = 0;
  double rae_optimal_gate_error = 0.0;
  double vqe_optimal_gate_error = 0.0;
  double rae_runtime = 0.0;           // seconds at RAE's own optimum
  double rae_parallel_runtime = 0.0;  // seconds
  double vqe_runtime = 0.0;           // seconds at VQE's own optimum
  std::optional<double> crossover_gate_error;
  double runtime_ratio = 0.0;         // vqe_runtime / rae_runtime
};

/// Per series: fit RAE layer totals and K against qubit count at each swept
/// distance, extrapolate to the target qubit count, then reduce the
/// extrapolated sweep to a Table-1-style row. A single-element series skips
/// fitting and computes directly at its own size.
RuntimePrediction build_prediction(const ReportSeries& series,
                                   const ReportConfig& config);

std::vector<RuntimePrediction> build_report(
    const std::vector<ReportSeries>& series, const ReportConfig& config);

}  // namespace raekit
