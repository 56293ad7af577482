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

#include <cmath>

namespace raekit {

/// Exponential-decay noise model of the amplified likelihood: the oscillatory
/// signal is attenuated by p_bar * exp(-lambda * L) after L circuit layers.
struct NoiseModel {
  double lambda = 0.0;  // per-layer decay, >= 0
  double p_bar = 1.0;   // state-prep/measurement factor in (0, 1]

  bool valid() const { return lambda >= 0.0 && p_bar > 0.0 && p_bar <= 1.0; }
};

/// P(d | theta; L) = (1 + (-1)^d cos((2L+1) theta)) / 2 for outcome d in {0,1}
/// after L amplification layers.
inline double likelihood_noiseless(int d, double theta, int layers) {
  const double c = std::cos((2.0 * layers + 1.0) * theta);
  return 0.5 * (1.0 + (d == 0 ? c : -c));
}

/// P(d | theta, lambda, p_bar; L) with the attenuated signal. Reduces to the
/// noiseless likelihood at lambda = 0, p_bar = 1.
inline double likelihood_noisy(int d, double theta, const NoiseModel& noise,
                               int layers) {
  const double signal = noise.p_bar * std::exp(-noise.lambda * layers) *
                        std::cos((2.0 * layers + 1.0) * theta);
  return 0.5 * (1.0 + (d == 0 ? signal : -signal));
}

/// Fisher information of theta for a single L-layer shot,
///   I(theta; L) = A^2 q^2 sin^2(A theta) / (1 - q^2 cos^2(A theta)),
/// with A = 2L+1 and q = p_bar exp(-lambda L). At the removable singularity
/// (q |cos| -> 1 with sin -> 0) the continuity limit 0 is returned.
inline double fisher_information(double theta, const NoiseModel& noise,
                                 int layers) {
  const double amp = 2.0 * layers + 1.0;
  const double q = noise.p_bar * std::exp(-noise.lambda * layers);
  const double s = std::sin(amp * theta);
  const double c = std::cos(amp * theta);
  const double denom = 1.0 - q * q * c * c;
  const double numer = amp * amp * q * q * s * s;
  if (denom <= 0.0) return 0.0;
  return numer / denom;
}

}  // namespace raekit
