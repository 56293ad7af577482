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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "raekit/hamiltonian.hpp"
#include "raekit/rng.hpp"
#include "raekit/runtime_model.hpp"

using raekit::allocate;
using raekit::omega_from_layer_time;
using raekit::parse_hamiltonian;
using raekit::per_term_runtime;
using raekit::runtime_model_layers;
using raekit::RuntimeModelParams;
using raekit::SplitMix64;
using raekit::uniform_allocation;

namespace {

/// Brute-force oracle for two terms: scan the single free parameter under
/// mu1^2 e1^2 + mu2^2 e2^2 = eps^2 and return the best total runtime.
double brute_force_two_term(double mu1, double mu2, double eps,
                            const RuntimeModelParams& params) {
  const double budget = eps * eps;
  double best = std::numeric_limits<double>::infinity();
  const int n = 200000;
  for (int i = 1; i < n; ++i) {
    const double share = budget * i / n;  // mu1^2 e1^2
    const double e1 = std::sqrt(share) / std::abs(mu1);
    const double e2 = std::sqrt(budget - share) / std::abs(mu2);
    const double total =
        per_term_runtime(e1, params) + per_term_runtime(e2, params);
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

TEST_CASE("runtime model fixed points") {
  // High-precision references for the closed-form expected layer count.
  RuntimeModelParams clean{0.0, 1.0, 1.0};
  CHECK(runtime_model_layers(0.1, clean) ==
        doctest::Approx(76.0185492797).epsilon(1e-10));
  RuntimeModelParams noisy{1e-3, 1.0, 1.0};
  CHECK(runtime_model_layers(0.01, noisy) ==
        doctest::Approx(781.285083658).epsilon(1e-10));
}

TEST_CASE("runtime model limits") {
  RuntimeModelParams clean{0.0, 1.0, 1.0};
  // Heisenberg limit: lambda = 0 scales as 1/eps.
  const double r = runtime_model_layers(1e-4, clean) /
                   runtime_model_layers(1e-3, clean);
  CHECK(r == doctest::Approx(10.0).epsilon(1e-9));
  // Shot-noise limit: eps^2 t approaches a constant as eps -> 0 at fixed
  // lambda.
  RuntimeModelParams noisy{0.1, 1.0, 1.0};
  const double a = 1e-5 * 1e-5 * runtime_model_layers(1e-5, noisy);
  const double b = 1e-6 * 1e-6 * runtime_model_layers(1e-6, noisy);
  CHECK(a == doctest::Approx(b).epsilon(1e-3));
}

TEST_CASE("per-term runtime fixed point") {
  RuntimeModelParams params{0.0, 1.0, 2.0};
  // omega/2 * (1/sqrt(2) + sqrt(8)) at eps = 1.
  CHECK(per_term_runtime(1.0, params) ==
        doctest::Approx(3.53553390593).epsilon(1e-10));
}

TEST_CASE("omega calibration ties the two runtime forms together") {
  for (double lambda : {0.0, 1e-3, 0.05}) {
    const double tau_l = 2.5e-7;
    RuntimeModelParams params{lambda, 0.9,
                              omega_from_layer_time(tau_l, lambda, 0.9)};
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      CHECK(per_term_runtime(eps, params) ==
            doctest::Approx(tau_l * runtime_model_layers(eps, params))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("two-term allocation matches a brute-force oracle") {
  SplitMix64 rng(2024);
  for (double lambda : {0.0, 1e-4, 1e-2}) {
    for (int trial = 0; trial < 8; ++trial) {
      const double mu1 = 0.1 + 2.0 * rng.next_double();
      const double mu2 = 0.1 + 2.0 * rng.next_double();
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.17g ZI\n%.17g IX\n", mu1, mu2);
      const auto h = parse_hamiltonian(buf);
      RuntimeModelParams params{lambda, 1.0, 1.0};
      const auto result = allocate(h, 1e-3, params);
      const double oracle = brute_force_two_term(mu1, mu2, 1e-3, params);
      CHECK(result.total_runtime <= oracle * 1.02);
      CHECK(result.total_runtime >= oracle * 0.98);
    }
  }
}

TEST_CASE("constraint holds exactly after rescaling") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int terms = 2 + static_cast<int>(rng.next_u64() % 199);
    raekit::SynthesisSpec spec;
    spec.law = raekit::CoefficientLaw::kLogUniform;
    const auto h = raekit::synthesize_hamiltonian(8, terms, spec,
                                                  rng.next_u64());
    RuntimeModelParams params{1e-3, 1.0, 1.0};
    const double eps = 1e-3;
    const auto result = allocate(h, eps, params);
    double lhs = 0.0;
    for (std::size_t i = 0; i < result.epsilons.size(); ++i) {
      lhs += result.coefficients[i] * result.coefficients[i] *
             result.epsilons[i] * result.epsilons[i];
    }
    CHECK(lhs == doctest::Approx(eps * eps).epsilon(1e-9));
  }
}

TEST_CASE("optimal allocation never exceeds uniform allocation") {
  const auto h = parse_hamiltonian("1.5 ZZII\n0.03 XXII\n0.4 IYYI\n0.01 IIZX\n");
  for (double lambda : {0.0, 1e-4, 1e-2, 0.5}) {
    RuntimeModelParams params{lambda, 1.0, 1.0};
    const auto opt = allocate(h, 1e-3, params);
    const auto uni = uniform_allocation(h, 1e-3, params);
    CHECK(opt.total_runtime <= uni.total_runtime * (1.0 + 1e-12));
  }
}

TEST_CASE("totals aggregate the term runtimes") {
  const auto h = parse_hamiltonian("0.8 ZZ\n0.2 XX\n0.05 YY\n");
  RuntimeModelParams params{1e-3, 1.0, 3.0};
  const auto result = allocate(h, 1e-3, params);
  double sum = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < result.term_runtimes.size(); ++i) {
    sum += result.term_runtimes[i];
    peak = std::max(peak, result.term_runtimes[i]);
    CHECK(result.term_runtimes[i] ==
          doctest::Approx(per_term_runtime(result.epsilons[i], params)));
  }
  CHECK(result.total_runtime == doctest::Approx(sum));
  CHECK(result.parallel_runtime == doctest::Approx(peak));
  CHECK(result.lagrange_multiplier > 0.0);
}

TEST_CASE("identity terms are excluded from allocation") {
  const auto with_id = parse_hamiltonian("0.8 ZZ\n0.2 XX\n5.0 II\n");
  const auto without = parse_hamiltonian("0.8 ZZ\n0.2 XX\n");
  RuntimeModelParams params{1e-3, 1.0, 1.0};
  const auto a = allocate(with_id, 1e-3, params);
  const auto b = allocate(without, 1e-3, params);
  REQUIRE(a.epsilons.size() == 2);
  CHECK(a.total_runtime == doctest::Approx(b.total_runtime));
}

TEST_CASE("invalid inputs are rejected") {
  const auto h = parse_hamiltonian("0.8 ZZ\n0.2 XX\n");
  RuntimeModelParams params{0.0, 1.0, 1.0};
  CHECK_THROWS_AS(allocate(h, 0.0, params), std::invalid_argument);
  CHECK_THROWS_AS(allocate(h, -1.0, params), std::invalid_argument);
  RuntimeModelParams bad{-0.1, 1.0, 1.0};
  CHECK_THROWS_AS(allocate(h, 1e-3, bad), std::invalid_argument);
  const auto identity_only = parse_hamiltonian("1.0 II\n");
  CHECK_THROWS_AS(allocate(identity_only, 1e-3, params),
                  std::invalid_argument);
}
