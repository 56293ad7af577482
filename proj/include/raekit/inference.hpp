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
#include <vector>

#include "raekit/likelihood.hpp"

namespace raekit {

class SplitMix64;

/// Discretized posterior over the phase angle theta on a uniform grid covering
/// [0, pi]. Weights are probability masses (trapezoid coefficients absorbed at
/// initialization) and sum to 1 after every update.
class GridPosterior {
 public:
  /// Gaussian density with the given mean and sd, truncated to [0, pi].
  static GridPosterior gaussian(double mean, double sd, int num_nodes);

  static GridPosterior uniform(int num_nodes);

  int num_nodes() const { return static_cast<int>(weights_.size()); }
  double node(int i) const;
  const std::vector<double>& weights() const { return weights_; }
  double grid_spacing() const;

  double mean() const;
  double sd() const;

  /// Multiplies weights by the outcome likelihood and renormalizes; the input
  /// is left untouched. Throws std::runtime_error when the total evidence
  /// underflows below 1e-300.
  GridPosterior bayes_update(int d, int layers, const NoiseModel& noise) const;

 private:
  explicit GridPosterior(std::vector<double> weights);

  std::vector<double> weights_;
};

struct LayerPolicy {
  /// Hard cap on candidate layer counts; the adaptive bound
  /// min(ceil(pi / (4 sd)), ceil(3 / lambda)) is additionally applied.
  int max_layers = 100000;
};

/// Picks L in {0, ..., L_max} maximizing Fisher information per layer cost
/// (2L+1) at the posterior mean. Ties break toward smaller L.
int choose_layer_count(const GridPosterior& posterior, const NoiseModel& noise,
                       const LayerPolicy& policy = {});

struct TrialConfig {
  double true_pi = 0.0;          // in [-1, 1]
  NoiseModel noise;
  double prior_sd = 0.01;        // radians
  double prior_mean_jitter_sd = 0.01;
  int max_steps = 100;
  int grid_nodes = 2001;
  std::uint64_t seed = 0;
  LayerPolicy layer_policy;
  /// Optional early stop once the posterior sd in Pi-space falls below this
  /// value; 0 disables.
  double pi_sd_stop = 0.0;
};

struct TrialStep {
  int layers = 0;           // chosen L
  int outcome = 0;          // sampled bit d
  double cum_layers = 0.0;  // cumulative 2L+1 cost
  double theta_hat = 0.0;
  double sd = 0.0;
  double pi_hat = 0.0;
  double sq_err_pi = 0.0;
  double sq_err_theta = 0.0;
};

struct TrialTrace {
  std::vector<TrialStep> steps;
};

GridPosterior init_prior(double true_theta, const TrialConfig& config,
                         SplitMix64& rng);

/// Runs one adaptive estimation trial: choose L, sample an outcome from the
/// noisy likelihood at the true angle, update the posterior, record the step.
/// Fully determined by (config, config.seed).
TrialTrace run_trial(const TrialConfig& config);

/// Derives per-trial seeds from (master_seed, trial index) so results are
/// identical under any scheduling of trials.
std::vector<TrialTrace> run_ensemble(const TrialConfig& config, int trials);

struct EnsemblePoint {
  double cum_layers = 0.0;   // mean over retained trials
  double trimmed_mse_pi = 0.0;
  double trimmed_mse_theta = 0.0;
};

/// Per step index: drops the ceil(trim_fraction * n) largest Pi-space squared
/// errors and averages the rest; cum_layers averages over the retained trials.
/// Shorter traces are carried forward at their final state.
std::vector<EnsemblePoint> ensemble_stats(const std::vector<TrialTrace>& traces,
                                          double trim_fraction);

}  // namespace raekit
