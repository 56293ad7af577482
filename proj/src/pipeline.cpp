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

#include "raekit/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace raekit {

namespace {
// The closed-form layer-count model peaks at lambda = 1 and then decays, an
// artifact of extrapolating it far outside its derivation regime (per-layer
// fidelities near 1). Past the turnover a single amplification layer already
// destroys the signal, so those sweep points report the amplified method as
// unusable rather than spuriously cheap.
constexpr double kLambdaCap = 1.0;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

std::vector<SweepPoint> sweep(const PauliHamiltonian& h, double target_rmse,
                              Connectivity conn,
                              const SurfaceCodeParams& params, int d_min,
                              int d_max, double p_bar) {
  if (d_min < 3 || d_max < d_min) {
    throw std::invalid_argument("distance range must satisfy 3 <= d_min <= d_max");
  }
  const CircuitCosts costs = circuit_costs(h.num_qubits(), conn);
  std::vector<SweepPoint> points;
  points.reserve(d_max - d_min + 1);
  for (int d = d_min; d <= d_max; ++d) {
    const CodePoint code = code_point(d, params);
    const NoiseModel noise = layer_decay(costs, code.logical_gate_error, p_bar);
    const double tau_l = layer_time(costs, code.logical_gate_time);

    const StandardSamplingEstimate std_est =
        standard_runtime(h, target_rmse, costs, code);

    SweepPoint pt;
    pt.distance = d;
    pt.gate_error = code.logical_gate_error;
    pt.gate_time = code.logical_gate_time;
    pt.lambda = noise.lambda;
    pt.tau_l = tau_l;
    if (noise.lambda > kLambdaCap) {
      pt.rae_runtime = kInf;
      pt.rae_parallel_runtime = kInf;
      pt.rae_layers = kInf;
    } else {
      RuntimeModelParams model;
      model.lambda = noise.lambda;
      model.p_bar = p_bar;
      model.omega = omega_from_layer_time(tau_l, noise.lambda, p_bar);
      const AllocationResult alloc = allocate(h, target_rmse, model);
      pt.rae_runtime = alloc.total_runtime;
      pt.rae_parallel_runtime = alloc.parallel_runtime;
      pt.rae_layers = alloc.total_runtime / tau_l;
    }
    pt.vqe_runtime = std_est.total_runtime;
    pt.rae_physical_qubits = physical_qubits(h.num_qubits(), d);
    pt.vqe_physical_qubits = pt.rae_physical_qubits;
    points.push_back(pt);
  }
  return points;
}

SweepPoint optimal_point(const std::vector<SweepPoint>& points, Method method) {
  if (points.empty()) throw std::invalid_argument("empty sweep");
  const SweepPoint* best = &points.front();
  for (const auto& pt : points) {
    const double runtime =
        method == Method::kRae ? pt.rae_runtime : pt.vqe_runtime;
    const double best_runtime =
        method == Method::kRae ? best->rae_runtime : best->vqe_runtime;
    if (runtime < best_runtime ||
        (runtime == best_runtime && pt.distance < best->distance)) {
      best = &pt;
    }
  }
  return *best;
}

std::optional<double> crossover_error_rate(
    const std::vector<SweepPoint>& points) {
  // Larger distance means smaller gate error; walk from the smallest error
  // upward and keep extending the winning streak.
  std::vector<const SweepPoint*> by_error;
  for (const auto& pt : points) by_error.push_back(&pt);
  std::sort(by_error.begin(), by_error.end(),
            [](const SweepPoint* a, const SweepPoint* b) {
              return a->gate_error < b->gate_error;
            });
  std::optional<double> crossover;
  for (const SweepPoint* pt : by_error) {
    if (pt->rae_runtime < pt->vqe_runtime) {
      crossover = pt->gate_error;
    } else {
      break;
    }
  }
  return crossover;
}

namespace {

struct LmResult {
  double a = 0.0, b = 0.0, c = 0.0;
  double residual = std::numeric_limits<double>::infinity();
};

double residual_norm(const std::vector<double>& n, const std::vector<double>& y,
                     double a, double b, double c) {
  double ss = 0.0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const double r = a * std::pow(n[i], b) + c - y[i];
    ss += r * r;
  }
  return std::sqrt(ss);
}

/// Levenberg-Marquardt on (a, b, c) or (a, b) with c pinned.
LmResult lm_fit(const std::vector<double>& n, const std::vector<double>& y,
                double a0, double b0, double c0, bool pin_c, int max_iter) {
  const std::size_t m = n.size();
  double a = a0, b = b0, c = c0;
  double mu = 1e-3;
  double prev = residual_norm(n, y, a, b, c);
  for (int iter = 0; iter < max_iter; ++iter) {
    // Accumulate J^T J and J^T r for r_i = a n^b + c - y.
    std::array<std::array<double, 3>, 3> jtj{};
    std::array<double, 3> jtr{};
    for (std::size_t i = 0; i < m; ++i) {
      const double nb = std::pow(n[i], b);
      const double r = a * nb + c - y[i];
      const std::array<double, 3> grad = {nb, a * nb * std::log(n[i]), 1.0};
      const int dims = pin_c ? 2 : 3;
      for (int p = 0; p < dims; ++p) {
        jtr[p] += grad[p] * r;
        for (int q = 0; q < dims; ++q) jtj[p][q] += grad[p] * grad[q];
      }
    }
    const int dims = pin_c ? 2 : 3;
    std::array<std::array<double, 4>, 3> aug{};
    for (int p = 0; p < dims; ++p) {
      for (int q = 0; q < dims; ++q) aug[p][q] = jtj[p][q];
      aug[p][p] += mu * (jtj[p][p] > 0.0 ? jtj[p][p] : 1.0);
      aug[p][dims] = -jtr[p];
    }
    // Gaussian elimination with partial pivoting.
    bool singular = false;
    for (int col = 0; col < dims; ++col) {
      int pivot = col;
      for (int row = col + 1; row < dims; ++row) {
        if (std::abs(aug[row][col]) > std::abs(aug[pivot][col])) pivot = row;
      }
      std::swap(aug[col], aug[pivot]);
      if (std::abs(aug[col][col]) < 1e-300) {
        singular = true;
        break;
      }
      for (int row = 0; row < dims; ++row) {
        if (row == col) continue;
        const double f = aug[row][col] / aug[col][col];
        for (int k = col; k <= dims; ++k) aug[row][k] -= f * aug[col][k];
      }
    }
    if (singular) {
      mu *= 10.0;
      continue;
    }
    const double da = aug[0][3] / aug[0][0];
    const double db = aug[1][3] / aug[1][1];
    const double dc = pin_c ? 0.0 : aug[2][3] / aug[2][2];
    const double na = a + da, nb2 = b + db, nc = c + dc;
    const double next = residual_norm(n, y, na, nb2, nc);
    if (std::isfinite(next) && next < prev) {
      a = na;
      b = nb2;
      c = nc;
      mu = std::max(mu * 0.3, 1e-12);
      const double improvement = prev - next;
      prev = next;
      if (improvement < 1e-15 * (1.0 + prev) && mu <= 1e-11) break;
    } else {
      mu *= 10.0;
      if (mu > 1e12) break;
    }
  }
  return {a, b, c, prev};
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<double>& n,
                          const std::vector<double>& y) {
  if (n.size() != y.size() || n.size() < 2) {
    throw std::invalid_argument("fit needs at least two (N, y) points");
  }
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] <= 0.0 || y[i] <= 0.0) {
      throw std::invalid_argument("fit points require N > 0 and y > 0");
    }
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      if (n[i] == n[j]) throw std::invalid_argument("fit N values must be distinct");
    }
  }

  PowerLawFit fit;
  fit.points_used = static_cast<int>(n.size());

  if (n.size() == 2) {
    // Exact two-point solution with c pinned to zero.
    fit.c_pinned = true;
    fit.b = std::log(y[1] / y[0]) / std::log(n[1] / n[0]);
    fit.a = y[0] / std::pow(n[0], fit.b);
    fit.c = 0.0;
    fit.residual_norm = residual_norm(n, y, fit.a, fit.b, fit.c);
    return fit;
  }

  // Log-log slope over the endpoints seeds b; a from the last point; c from 0.
  const double slope = std::log(y.back() / y.front()) /
                       std::log(n.back() / n.front());
  std::vector<double> b_candidates = {slope, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 4.0};
  LmResult best;
  for (double b0 : b_candidates) {
    if (!std::isfinite(b0)) continue;
    const double a0 = y.back() / std::pow(n.back(), b0);
    const LmResult r = lm_fit(n, y, a0, b0, 0.0, /*pin_c=*/false, 10000);
    if (r.residual < best.residual) best = r;
  }
  if (!std::isfinite(best.residual)) {
    throw std::runtime_error("power-law fit failed to converge");
  }
  fit.a = best.a;
  fit.b = best.b;
  fit.c = best.c;
  fit.residual_norm = best.residual;
  return fit;
}

double extrapolate(const PowerLawFit& fit, double n_target) {
  if (n_target <= 0.0) throw std::invalid_argument("target N must be positive");
  return fit.a * std::pow(n_target, fit.b) + fit.c;
}

namespace {

struct RaeLayerCurve {
  std::vector<double> totals;    // per series member, at a fixed distance
  std::vector<double> maxima;
};

}  // namespace

RuntimePrediction build_prediction(const ReportSeries& series,
                                   const ReportConfig& config) {
  if (series.hamiltonians.empty()) {
    throw std::invalid_argument("series has no Hamiltonians");
  }
  const bool single = series.hamiltonians.size() == 1;
  const int n_target =
      single ? series.hamiltonians.front().num_qubits() : series.target_qubits;
  if (!single && n_target <= 0) {
    throw std::invalid_argument("multi-point series needs a target qubit count");
  }

  std::vector<double> qubit_counts;
  std::vector<double> k_values;
  for (const auto& h : series.hamiltonians) {
    qubit_counts.push_back(h.num_qubits());
    k_values.push_back(runtime_constant_K(h));
  }
  const double k_target =
      single ? k_values.front()
             : extrapolate(fit_power_law(qubit_counts, k_values),
                           static_cast<double>(n_target));

  const CircuitCosts target_costs = circuit_costs(n_target, config.connectivity);
  const double eps_sq = config.target_rmse * config.target_rmse;

  std::vector<SweepPoint> points;
  for (int d = config.d_min; d <= config.d_max; ++d) {
    const CodePoint code = code_point(d, config.code_params);
    RaeLayerCurve curve;
    bool degenerate = false;
    for (const auto& h : series.hamiltonians) {
      const CircuitCosts costs = circuit_costs(h.num_qubits(), config.connectivity);
      const NoiseModel noise = layer_decay(costs, code.logical_gate_error);
      if (noise.lambda > kLambdaCap) {
        degenerate = true;
        break;
      }
      const double tau_l = layer_time(costs, code.logical_gate_time);
      RuntimeModelParams model;
      model.lambda = noise.lambda;
      model.omega = omega_from_layer_time(tau_l, noise.lambda, 1.0);
      const AllocationResult alloc = allocate(h, config.target_rmse, model);
      curve.totals.push_back(alloc.total_runtime / tau_l);
      curve.maxima.push_back(alloc.parallel_runtime / tau_l);
    }
    double layers_total, layers_max;
    if (degenerate ||
        layer_decay(target_costs, code.logical_gate_error).lambda > kLambdaCap) {
      layers_total = std::numeric_limits<double>::infinity();
      layers_max = layers_total;
    } else if (single) {
      layers_total = curve.totals.front();
      layers_max = curve.maxima.front();
    } else {
      layers_total = extrapolate(fit_power_law(qubit_counts, curve.totals),
                                 static_cast<double>(n_target));
      layers_max = extrapolate(fit_power_law(qubit_counts, curve.maxima),
                               static_cast<double>(n_target));
      // A fit driven outside its domain can extrapolate non-physically.
      if (!std::isfinite(layers_total) || layers_total <= 0.0 ||
          !std::isfinite(layers_max) || layers_max <= 0.0) {
        layers_total = kInf;
        layers_max = kInf;
      }
    }

    const NoiseModel target_noise =
        layer_decay(target_costs, code.logical_gate_error);
    const double target_tau_l = layer_time(target_costs, code.logical_gate_time);

    SweepPoint pt;
    pt.distance = d;
    pt.gate_error = code.logical_gate_error;
    pt.gate_time = code.logical_gate_time;
    pt.lambda = target_noise.lambda;
    pt.tau_l = target_tau_l;
    pt.rae_layers = layers_total;
    pt.rae_runtime = target_tau_l * layers_total;
    pt.rae_parallel_runtime = target_tau_l * layers_max;
    pt.vqe_runtime = k_target / eps_sq * target_costs.ansatz_depth *
                     code.logical_gate_time *
                     mitigation_overhead(target_costs, code.logical_gate_error);
    pt.rae_physical_qubits = physical_qubits(n_target, d);
    pt.vqe_physical_qubits = pt.rae_physical_qubits;
    points.push_back(pt);
  }

  const SweepPoint rae_opt = optimal_point(points, Method::kRae);
  const SweepPoint vqe_opt = optimal_point(points, Method::kVqe);

  RuntimePrediction prediction;
  prediction.label = series.label;
  prediction.logical_qubits = n_target;
  prediction.rae_physical_qubits = rae_opt.rae_physical_qubits;
  prediction.vqe_physical_qubits = vqe_opt.vqe_physical_qubits;
  prediction.rae_optimal_gate_error = rae_opt.gate_error;
  prediction.vqe_optimal_gate_error = vqe_opt.gate_error;
  prediction.rae_runtime = rae_opt.rae_runtime;
  prediction.rae_parallel_runtime = rae_opt.rae_parallel_runtime;
  prediction.vqe_runtime = vqe_opt.vqe_runtime;
  prediction.crossover_gate_error = crossover_error_rate(points);
  prediction.runtime_ratio = prediction.vqe_runtime / prediction.rae_runtime;
  return prediction;
}

std::vector<RuntimePrediction> build_report(
    const std::vector<ReportSeries>& series, const ReportConfig& config) {
  std::vector<RuntimePrediction> report;
  report.reserve(series.size());
  for (const auto& s : series) report.push_back(build_prediction(s, config));
  return report;
}

}  // namespace raekit
