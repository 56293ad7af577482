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

#include <cmath>
#include <cstring>
#include <string>

#include "raekit/raekit.h"

namespace {

struct Str {
  char* v = nullptr;
  ~Str() { rk_string_free(v); }
};

struct Ham {
  rk_hamiltonian* v = nullptr;
  ~Ham() { rk_hamiltonian_free(v); }
};

}  // namespace

TEST_CASE("null arguments produce invalid-argument status") {
  CHECK(rk_hamiltonian_from_string(nullptr, nullptr) ==
        RK_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(rk_last_error()) > 0);
}

TEST_CASE("malformed text produces a parse status with a message") {
  Ham h;
  CHECK(rk_hamiltonian_from_string("0.5 ZZ\nbogus\n", &h.v) == RK_ERR_PARSE);
  CHECK(std::string(rk_last_error()).find("line 2") != std::string::npos);
}

TEST_CASE("hamiltonian accessors round-trip through the handle") {
  Ham h;
  REQUIRE(rk_hamiltonian_from_string("0.5 ZZII\n-0.25 XXII\n1.0 IIII\n",
                                     &h.v) == RK_OK);
  CHECK(rk_hamiltonian_num_qubits(h.v) == 4);
  CHECK(rk_hamiltonian_num_terms(h.v) == 3);
  CHECK(rk_hamiltonian_one_norm(h.v, 0) == doctest::Approx(0.75));
  CHECK(rk_hamiltonian_one_norm(h.v, 1) == doctest::Approx(1.75));
  Str text, json;
  REQUIRE(rk_hamiltonian_to_text(h.v, &text.v) == RK_OK);
  REQUIRE(rk_hamiltonian_to_json(h.v, &json.v) == RK_OK);
  Ham back;
  REQUIRE(rk_hamiltonian_from_string(json.v, &back.v) == RK_OK);
  CHECK(rk_hamiltonian_num_terms(back.v) == 3);
}

TEST_CASE("synthesis through the C API is deterministic") {
  Ham a, b;
  REQUIRE(rk_hamiltonian_synthesize(6, 30, "log-uniform", 1e-3, 1.0, 42,
                                    &a.v) == RK_OK);
  REQUIRE(rk_hamiltonian_synthesize(6, 30, "log-uniform", 1e-3, 1.0, 42,
                                    &b.v) == RK_OK);
  Str ta, tb;
  REQUIRE(rk_hamiltonian_to_text(a.v, &ta.v) == RK_OK);
  REQUIRE(rk_hamiltonian_to_text(b.v, &tb.v) == RK_OK);
  CHECK(std::string(ta.v) == tb.v);
  CHECK(rk_hamiltonian_synthesize(6, 10, "banana", 0, 1, 0, &a.v) ==
        RK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("likelihood and runtime model pass-throughs") {
  CHECK(rk_likelihood(0, 3.14159265358979323846 / 4.0, 0.01, 0.9, 10) ==
        doctest::Approx(0.212082496626).epsilon(1e-10));
  CHECK(rk_fisher_information(0.4, 0.0, 1.0, 1) == doctest::Approx(9.0));
  double t = 0.0;
  REQUIRE(rk_runtime_model_layers(0.1, 0.0, 1.0, &t) == RK_OK);
  CHECK(t == doctest::Approx(76.0185492797).epsilon(1e-10));
  CHECK(rk_runtime_model_layers(0.0, 0.0, 1.0, &t) ==
        RK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("circuit and code cost pass-throughs") {
  rk_circuit_costs costs;
  REQUIRE(rk_circuit_costs_for(4, RK_CONN_A2A, &costs) == RK_OK);
  CHECK(costs.layer_gates == doctest::Approx(72.0));
  double lambda = 0.0;
  REQUIRE(rk_layer_decay(&costs, 1e-6, &lambda) == RK_OK);
  CHECK(lambda == doctest::Approx(7.20000360e-5).epsilon(1e-9));
  double tau = 0.0;
  REQUIRE(rk_layer_time(&costs, 1e-3, &tau) == RK_OK);
  CHECK(tau == doctest::Approx(0.036));

  rk_surface_code_params params;
  rk_surface_code_params_default(&params);
  CHECK(params.cycle_time == doctest::Approx(1e-6));
  rk_code_point code;
  REQUIRE(rk_code_point_at(13, &params, &code) == RK_OK);
  CHECK(code.logical_gate_error ==
        doctest::Approx(1.29999155654e-5).epsilon(1e-9));
  REQUIRE(rk_distance_for_error(1.3e-5, &params, 51, &code) == RK_OK);
  CHECK(code.distance == 13);
  CHECK(rk_physical_qubits(104, 13) == 35152);
  CHECK(rk_circuit_costs_for(5, RK_CONN_A2A, &costs) ==
        RK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("allocation summary and csv are consistent") {
  Ham h;
  REQUIRE(rk_hamiltonian_from_string("0.8 ZZ\n0.2 XX\n0.05 YY\n", &h.v) ==
          RK_OK);
  rk_allocation_summary summary;
  Str csv;
  REQUIRE(rk_allocate(h.v, 1e-3, 1e-3, 1.0, 1.0, &summary, &csv.v) == RK_OK);
  CHECK(summary.total_runtime_s > 0.0);
  CHECK(summary.parallel_runtime_s <= summary.total_runtime_s);
  CHECK(summary.total_layers > 0.0);
  const std::string body(csv.v);
  CHECK(body.find("term_index") != std::string::npos);
  CHECK(body.find("lagrange_multiplier") != std::string::npos);
  CHECK(body.find("T_star_seconds") != std::string::npos);
}

TEST_CASE("standard sampling pass-through") {
  Ham h;
  REQUIRE(rk_hamiltonian_from_string("0.5 ZZZZ\n-0.25 XXXX\n", &h.v) == RK_OK);
  rk_circuit_costs costs;
  REQUIRE(rk_circuit_costs_for(4, RK_CONN_A2A, &costs) == RK_OK);
  rk_surface_code_params params;
  rk_surface_code_params_default(&params);
  rk_code_point code;
  REQUIRE(rk_code_point_at(13, &params, &code) == RK_OK);
  rk_standard_estimate est;
  REQUIRE(rk_standard_runtime(h.v, 1e-3, &costs, &code, &est) == RK_OK);
  CHECK(est.runtime_constant == doctest::Approx(0.5625));
  CHECK(est.total_runtime_s ==
        doctest::Approx(est.shots * est.shot_time_s * est.mitigation_overhead));
}

TEST_CASE("simulation output is byte-identical across calls") {
  rk_trial_config config;
  rk_trial_config_default(&config);
  config.true_pi = 0.3;
  config.lambda = 0.01;
  config.max_steps = 40;
  config.grid_nodes = 501;
  config.seed = 12;
  Str a, b, traces;
  REQUIRE(rk_simulate(&config, 8, 0.1, &a.v, &traces.v) == RK_OK);
  REQUIRE(rk_simulate(&config, 8, 0.1, &b.v, nullptr) == RK_OK);
  CHECK(std::string(a.v) == b.v);
  CHECK(std::string(traces.v).find("trial") != std::string::npos);
}

TEST_CASE("power-law fit pass-through") {
  const double n[] = {4, 8, 16, 32};
  double y[4];
  for (int i = 0; i < 4; ++i) y[i] = 2.0 * n[i] * n[i] * n[i];
  rk_power_law_fit fit;
  REQUIRE(rk_fit_power_law(n, y, 4, &fit) == RK_OK);
  CHECK(fit.b == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(rk_power_law_eval(&fit, 10.0) == doctest::Approx(2000.0).epsilon(1e-5));
}

TEST_CASE("sweep csv has a header and the requested row count") {
  Ham h;
  REQUIRE(rk_hamiltonian_synthesize(8, 20, "uniform", 1.0, 0.0, 5, &h.v) ==
          RK_OK);
  rk_surface_code_params params;
  rk_surface_code_params_default(&params);
  Str csv;
  REQUIRE(rk_sweep(h.v, 1e-3, RK_CONN_A2A, &params, 3, 12, &csv.v) == RK_OK);
  const std::string body(csv.v);
  int lines = 0;
  for (char c : body) lines += c == '\n';
  CHECK(lines == 11);  // header + 10 rows
  CHECK(body.rfind("d,gate_error", 0) == 0);
}

TEST_CASE("report runs on a synthetic series config") {
  const char* config = R"({
    "target_rmse": 1e-3,
    "connectivity": "a2a",
    "d_min": 3, "d_max": 17,
    "series": [{
      "label": "toy",
      "target_qubits": 8,
      "synthetic": [
        {"num_qubits": 8, "num_terms": 24, "law": "uniform",
         "p0": 1.0, "p1": 0.0, "seed": 9}
      ]
    }]
  })";
  Str out;
  REQUIRE(rk_report(config, &out.v) == RK_OK);
  const std::string body(out.v);
  CHECK(body.find("\"label\"") != std::string::npos);
  CHECK(body.find("toy") != std::string::npos);
  CHECK(rk_report("{nope", &out.v) == RK_ERR_PARSE);
}
