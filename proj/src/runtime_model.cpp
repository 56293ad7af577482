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

#include "raekit/runtime_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace raekit {

namespace {

// alpha = (sqrt(1/2) + sqrt(8)) / 2
const double kAlpha = 0.5 * (std::sqrt(0.5) + std::sqrt(8.0));

double bracket_term(double epsilon, double lambda) {
  const double shot = lambda / (epsilon * epsilon);
  const double heis = 1.0 / (std::sqrt(2.0) * epsilon);
  return shot + heis + std::hypot(shot, std::sqrt(8.0) / epsilon);
}

}  // namespace

double runtime_model_layers(double epsilon, const RuntimeModelParams& params) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  const double e = std::exp(1.0);
  const double prefactor = e * e / (e - 1.0) * std::exp(-params.lambda) /
                           (2.0 * params.p_bar * params.p_bar);
  return prefactor * bracket_term(epsilon, params.lambda);
}

double per_term_runtime(double epsilon_i, const RuntimeModelParams& params) {
  if (epsilon_i <= 0.0) throw std::invalid_argument("epsilon must be positive");
  return 0.5 * params.omega * bracket_term(epsilon_i, params.lambda);
}

double omega_from_layer_time(double tau_l, double lambda, double p_bar) {
  const double e = std::exp(1.0);
  return tau_l * e * e / (e - 1.0) * std::exp(-lambda) / (p_bar * p_bar);
}

namespace {

AllocationResult finish_allocation(std::vector<double> abs_mu,
                                   std::vector<double> eps_sq,
                                   double target_rmse,
                                   const RuntimeModelParams& params,
                                   double lagrange_multiplier) {
  const std::size_t n = abs_mu.size();
  // Rescale so the constraint sum mu_i^2 eps_i^2 = eps_bar^2 holds exactly.
  double achieved = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    achieved += abs_mu[i] * abs_mu[i] * eps_sq[i];
  }
  const double scale = target_rmse * target_rmse / achieved;
  AllocationResult result;
  result.coefficients = std::move(abs_mu);
  result.lagrange_multiplier = lagrange_multiplier;
  result.epsilons.resize(n);
  result.term_runtimes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.epsilons[i] = std::sqrt(eps_sq[i] * scale);
    result.term_runtimes[i] = per_term_runtime(result.epsilons[i], params);
    result.total_runtime += result.term_runtimes[i];
    result.parallel_runtime =
        std::max(result.parallel_runtime, result.term_runtimes[i]);
  }
  return result;
}

std::vector<double> non_identity_abs_mu(const PauliHamiltonian& h) {
  std::vector<double> abs_mu;
  for (double mu : h.non_identity_coefficients()) {
    abs_mu.push_back(std::abs(mu));
  }
  if (abs_mu.empty() ||
      std::all_of(abs_mu.begin(), abs_mu.end(), [](double m) { return m == 0.0; })) {
    throw std::invalid_argument("Hamiltonian has no non-identity weight");
  }
  return abs_mu;
}

}  // namespace

AllocationResult allocate(const PauliHamiltonian& h, double target_rmse,
                          const RuntimeModelParams& params) {
  if (target_rmse <= 0.0) {
    throw std::invalid_argument("target RMSE must be positive");
  }
  if (params.lambda < 0.0 || params.omega <= 0.0 || params.p_bar <= 0.0) {
    throw std::invalid_argument("invalid runtime model parameters");
  }
  std::vector<double> abs_mu = non_identity_abs_mu(h);

  double sum_mu = 0.0;
  double sum_mu_23 = 0.0;
  for (double m : abs_mu) {
    sum_mu += m;
    sum_mu_23 += std::pow(m, 2.0 / 3.0);
  }
  const double eps_bar_sq = target_rmse * target_rmse;
  const double c1 = std::sqrt(2.0 * params.omega * params.lambda) * sum_mu;
  const double c0 = std::pow(kAlpha, 2.0 / 3.0) * sum_mu_23;

  // x^4 eps^2 - c1 x - c0 = 0 has exactly one positive root: the quartic side
  // is convex increasing from 0 and the right side is affine.
  double x;
  if (c1 == 0.0) {
    x = std::pow(c0 / eps_bar_sq, 0.25);
  } else {
    double lo = 0.0;
    double hi = std::pow(c0 / eps_bar_sq, 0.25) + 1.0;
    auto f = [&](double v) {
      return v * v * v * v * eps_bar_sq - c1 * v - c0;
    };
    while (f(hi) < 0.0) hi *= 2.0;
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (f(mid) < 0.0 ? lo : hi) = mid;
      if (hi - lo <= 1e-14 * hi) break;
    }
    x = 0.5 * (lo + hi);
  }
  const double lambda_mult = std::pow(x, 6.0);

  std::vector<double> eps_sq(abs_mu.size());
  const double sqrt_lm = std::sqrt(lambda_mult);
  const double lm_23 = std::pow(lambda_mult, 2.0 / 3.0);
  for (std::size_t i = 0; i < abs_mu.size(); ++i) {
    const double m = abs_mu[i];
    eps_sq[i] = std::sqrt(2.0 * params.omega * params.lambda) / (sqrt_lm * m) +
                std::pow(kAlpha, 2.0 / 3.0) /
                    (lm_23 * std::pow(m, 4.0 / 3.0));
  }
  return finish_allocation(std::move(abs_mu), std::move(eps_sq), target_rmse,
                           params, lambda_mult);
}

AllocationResult uniform_allocation(const PauliHamiltonian& h,
                                    double target_rmse,
                                    const RuntimeModelParams& params) {
  if (target_rmse <= 0.0) {
    throw std::invalid_argument("target RMSE must be positive");
  }
  std::vector<double> abs_mu = non_identity_abs_mu(h);
  double sum_mu_sq = 0.0;
  for (double m : abs_mu) sum_mu_sq += m * m;
  std::vector<double> eps_sq(abs_mu.size(),
                             target_rmse * target_rmse / sum_mu_sq);
  return finish_allocation(std::move(abs_mu), std::move(eps_sq), target_rmse,
                           params, 0.0);
}

}  // namespace raekit
