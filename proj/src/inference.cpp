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

#include "raekit/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "raekit/rng.hpp"

namespace raekit {

namespace {
constexpr double kPi = std::numbers::pi;
}

GridPosterior::GridPosterior(std::vector<double> weights)
    : weights_(std::move(weights)) {}

double GridPosterior::node(int i) const {
  return kPi * i / (num_nodes() - 1);
}

double GridPosterior::grid_spacing() const { return kPi / (num_nodes() - 1); }

GridPosterior GridPosterior::gaussian(double mean, double sd, int num_nodes) {
  if (num_nodes < 3) throw std::invalid_argument("grid needs >= 3 nodes");
  if (sd <= 0.0) throw std::invalid_argument("prior sd must be positive");
  std::vector<double> w(num_nodes);
  const double h = kPi / (num_nodes - 1);
  double total = 0.0;
  for (int i = 0; i < num_nodes; ++i) {
    const double theta = h * i;
    const double z = (theta - mean) / sd;
    // Trapezoid coefficients fold into the masses at the endpoints.
    const double trap = (i == 0 || i == num_nodes - 1) ? 0.5 : 1.0;
    w[i] = trap * std::exp(-0.5 * z * z);
    total += w[i];
  }
  if (total <= 0.0) {
    throw std::runtime_error("prior mass vanished on the grid");
  }
  for (auto& x : w) x /= total;
  return GridPosterior(std::move(w));
}

GridPosterior GridPosterior::uniform(int num_nodes) {
  if (num_nodes < 3) throw std::invalid_argument("grid needs >= 3 nodes");
  std::vector<double> w(num_nodes);
  const double total = num_nodes - 1.0;  // trapezoid-weighted count
  for (int i = 0; i < num_nodes; ++i) {
    w[i] = ((i == 0 || i == num_nodes - 1) ? 0.5 : 1.0) / total;
  }
  return GridPosterior(std::move(w));
}

double GridPosterior::mean() const {
  double m = 0.0;
  for (int i = 0; i < num_nodes(); ++i) m += weights_[i] * node(i);
  return m;
}

double GridPosterior::sd() const {
  const double m = mean();
  double v = 0.0;
  for (int i = 0; i < num_nodes(); ++i) {
    const double d = node(i) - m;
    v += weights_[i] * d * d;
  }
  return std::sqrt(std::max(v, 0.0));
}

GridPosterior GridPosterior::bayes_update(int d, int layers,
                                          const NoiseModel& noise) const {
  const int n = num_nodes();
  std::vector<double> w(n);
  const double amp = 2.0 * layers + 1.0;
  const double q = noise.p_bar * std::exp(-noise.lambda * layers);
  const double sign = (d == 0) ? 1.0 : -1.0;
  const double h = kPi / (n - 1);
  double evidence = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lik = 0.5 * (1.0 + sign * q * std::cos(amp * (h * i)));
    w[i] = weights_[i] * lik;
    evidence += w[i];
  }
  if (evidence < 1e-300) {
    throw std::runtime_error("Bayes update evidence underflow");
  }
  for (auto& x : w) x /= evidence;
  return GridPosterior(std::move(w));
}

int choose_layer_count(const GridPosterior& posterior, const NoiseModel& noise,
                       const LayerPolicy& policy) {
  const double sd = posterior.sd();
  int l_max = policy.max_layers;
  if (sd > 0.0) {
    l_max = std::min(l_max, static_cast<int>(std::ceil(kPi / (4.0 * sd))));
  }
  if (noise.lambda > 0.0) {
    l_max = std::min(l_max, static_cast<int>(std::ceil(3.0 / noise.lambda)));
  }
  l_max = std::max(l_max, 0);
  const double theta_hat = posterior.mean();
  int best = 0;
  double best_rate = -1.0;
  for (int l = 0; l <= l_max; ++l) {
    const double rate =
        fisher_information(theta_hat, noise, l) / (2.0 * l + 1.0);
    if (rate > best_rate) {
      best_rate = rate;
      best = l;
    }
  }
  return best;
}

GridPosterior init_prior(double true_theta, const TrialConfig& config,
                         SplitMix64& rng) {
  if (config.prior_sd <= 0.0 || config.prior_mean_jitter_sd <= 0.0) {
    throw std::invalid_argument("prior sd and jitter sd must be positive");
  }
  const double mean =
      true_theta + config.prior_mean_jitter_sd * rng.next_normal();
  return GridPosterior::gaussian(mean, config.prior_sd, config.grid_nodes);
}

TrialTrace run_trial(const TrialConfig& config) {
  if (config.true_pi < -1.0 || config.true_pi > 1.0) {
    throw std::invalid_argument("true_pi must lie in [-1, 1]");
  }
  if (config.max_steps < 1) {
    throw std::invalid_argument("max_steps must be >= 1");
  }
  if (!config.noise.valid()) {
    throw std::invalid_argument("invalid noise model");
  }
  SplitMix64 rng(config.seed);
  const double true_theta = std::acos(config.true_pi);
  GridPosterior posterior = init_prior(true_theta, config, rng);

  TrialTrace trace;
  trace.steps.reserve(config.max_steps);
  double cum_layers = 0.0;
  for (int step = 0; step < config.max_steps; ++step) {
    const int layers =
        choose_layer_count(posterior, config.noise, config.layer_policy);
    const double p0 = likelihood_noisy(0, true_theta, config.noise, layers);
    const int outcome = rng.next_bernoulli(p0) ? 0 : 1;
    posterior = posterior.bayes_update(outcome, layers, config.noise);
    cum_layers += 2.0 * layers + 1.0;

    TrialStep rec;
    rec.layers = layers;
    rec.outcome = outcome;
    rec.cum_layers = cum_layers;
    rec.theta_hat = posterior.mean();
    rec.sd = posterior.sd();
    rec.pi_hat = std::cos(rec.theta_hat);
    const double err_pi = rec.pi_hat - config.true_pi;
    const double err_theta = rec.theta_hat - true_theta;
    rec.sq_err_pi = err_pi * err_pi;
    rec.sq_err_theta = err_theta * err_theta;
    trace.steps.push_back(rec);

    if (config.pi_sd_stop > 0.0 &&
        rec.sd * std::abs(std::sin(rec.theta_hat)) < config.pi_sd_stop) {
      break;
    }
  }
  return trace;
}

std::vector<TrialTrace> run_ensemble(const TrialConfig& config, int trials) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  std::vector<TrialTrace> traces(trials);
  for (int t = 0; t < trials; ++t) {
    TrialConfig c = config;
    c.seed = SplitMix64::mix(config.seed, static_cast<std::uint64_t>(t));
    traces[t] = run_trial(c);
  }
  return traces;
}

std::vector<EnsemblePoint> ensemble_stats(const std::vector<TrialTrace>& traces,
                                          double trim_fraction) {
  if (traces.empty()) throw std::invalid_argument("empty ensemble");
  if (trim_fraction < 0.0 || trim_fraction >= 1.0) {
    throw std::invalid_argument("trim fraction must lie in [0, 1)");
  }
  std::size_t max_len = 0;
  for (const auto& t : traces) max_len = std::max(max_len, t.steps.size());

  const int n = static_cast<int>(traces.size());
  const int dropped = static_cast<int>(std::ceil(trim_fraction * n));
  const int kept = std::max(n - dropped, 1);

  std::vector<EnsemblePoint> curve(max_len);
  std::vector<int> order(n);
  for (std::size_t s = 0; s < max_len; ++s) {
    // A finished trace contributes its final state (carry-forward).
    auto at = [&](int t) -> const TrialStep& {
      const auto& steps = traces[t].steps;
      return steps[std::min(s, steps.size() - 1)];
    };
    for (int t = 0; t < n; ++t) order[t] = t;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return at(a).sq_err_pi < at(b).sq_err_pi;
    });
    EnsemblePoint pt;
    for (int k = 0; k < kept; ++k) {
      const TrialStep& rec = at(order[k]);
      pt.cum_layers += rec.cum_layers;
      pt.trimmed_mse_pi += rec.sq_err_pi;
      pt.trimmed_mse_theta += rec.sq_err_theta;
    }
    pt.cum_layers /= kept;
    pt.trimmed_mse_pi /= kept;
    pt.trimmed_mse_theta /= kept;
    curve[s] = pt;
  }
  return curve;
}

}  // namespace raekit
