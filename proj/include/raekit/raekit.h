/* Copyright 2026 The raekit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the raekit shared library. All entry points return a status
 * code; rk_last_error() describes the most recent failure on the calling
 * thread. Strings returned through char** outputs are owned by the caller and
 * released with rk_string_free(). */

#ifndef RAEKIT_RAEKIT_H_
#define RAEKIT_RAEKIT_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_ERR_INVALID_ARGUMENT = 1,
  RK_ERR_PARSE = 2,
  RK_ERR_NUMERIC = 3,
  RK_ERR_IO = 4,
} rk_status;

typedef enum rk_connectivity {
  RK_CONN_2D = 0,
  RK_CONN_A2A = 1,
} rk_connectivity;

/* Thread-local message for the most recent error; empty string otherwise. */
const char* rk_last_error(void);

void rk_string_free(char* s);

/* ---- Pauli Hamiltonians (opaque handle) ---- */

typedef struct rk_hamiltonian rk_hamiltonian;

rk_status rk_hamiltonian_from_string(const char* text, rk_hamiltonian** out);
rk_status rk_hamiltonian_from_file(const char* path, rk_hamiltonian** out);

/* law: "uniform" (p0 = halfwidth, p1 ignored) or "log-uniform"
 * (magnitudes in [p0, p1], random signs). */
rk_status rk_hamiltonian_synthesize(int num_qubits, int num_terms,
                                    const char* law, double p0, double p1,
                                    uint64_t seed, rk_hamiltonian** out);
void rk_hamiltonian_free(rk_hamiltonian* h);

int rk_hamiltonian_num_qubits(const rk_hamiltonian* h);
int rk_hamiltonian_num_terms(const rk_hamiltonian* h);
double rk_hamiltonian_one_norm(const rk_hamiltonian* h, int include_identity);
rk_status rk_hamiltonian_to_text(const rk_hamiltonian* h, char** out);
rk_status rk_hamiltonian_to_json(const rk_hamiltonian* h, char** out);

/* ---- Likelihoods and the single-term runtime model ---- */

double rk_likelihood(int outcome, double theta, double lambda, double p_bar,
                     int layers);
double rk_fisher_information(double theta, double lambda, double p_bar,
                             int layers);

/* Expected total layer count to reach target RMSE epsilon. */
rk_status rk_runtime_model_layers(double epsilon, double lambda, double p_bar,
                                  double* out);

/* ---- Compilation and fault-tolerance cost models ---- */

typedef struct rk_circuit_costs {
  int num_qubits;
  int connectivity; /* rk_connectivity */
  double ansatz_depth;
  double phaseflip_depth;
  double ansatz_gates;
  double phaseflip_gates;
  double layer_depth;
  double layer_gates;
} rk_circuit_costs;

rk_status rk_circuit_costs_for(int num_qubits, int connectivity,
                               rk_circuit_costs* out);
rk_status rk_layer_decay(const rk_circuit_costs* costs,
                         double logical_gate_error, double* lambda_out);
rk_status rk_layer_time(const rk_circuit_costs* costs,
                        double logical_gate_time, double* tau_l_out);

typedef struct rk_surface_code_params {
  double cycle_time;                    /* seconds, default 1e-6 */
  double cycles_per_gate_per_distance;  /* default 100 */
  double physical_gate_error;           /* default 1e-3 */
} rk_surface_code_params;

void rk_surface_code_params_default(rk_surface_code_params* out);

typedef struct rk_code_point {
  int distance;
  double logical_gate_error;
  double logical_gate_time; /* seconds */
  int physical_qubits_per_logical;
} rk_code_point;

rk_status rk_code_point_at(int distance, const rk_surface_code_params* params,
                           rk_code_point* out);
rk_status rk_distance_for_error(double target_gate_error,
                                const rk_surface_code_params* params,
                                int d_max, rk_code_point* out);
int64_t rk_physical_qubits(int n_logical, int distance);

/* ---- Accuracy allocation across Pauli terms ---- */

typedef struct rk_allocation_summary {
  double lagrange_multiplier;
  double total_runtime_s;
  double parallel_runtime_s;
  double total_layers;
} rk_allocation_summary;

/* tau_l calibrates the per-layer time weight; csv_out (optional) receives the
 * per-term allocation table with footer rows for the multiplier and totals. */
rk_status rk_allocate(const rk_hamiltonian* h, double target_rmse,
                      double lambda, double p_bar, double tau_l,
                      rk_allocation_summary* out, char** csv_out);

/* ---- Standard sampling baseline ---- */

typedef struct rk_standard_estimate {
  double runtime_constant;    /* K */
  double shots;               /* M */
  double mitigation_overhead; /* 1/f^2 */
  double shot_time_s;
  double total_runtime_s;
} rk_standard_estimate;

rk_status rk_standard_runtime(const rk_hamiltonian* h, double target_rmse,
                              const rk_circuit_costs* costs,
                              const rk_code_point* code,
                              rk_standard_estimate* out);

/* ---- Inference simulation ---- */

typedef struct rk_trial_config {
  double true_pi;
  double lambda;
  double p_bar;
  double prior_sd;
  double prior_mean_jitter_sd;
  int max_steps;
  int grid_nodes;
  uint64_t seed;
  int max_layers;     /* hard candidate cap; <= 0 means unlimited */
  double pi_sd_stop;  /* early stop threshold; 0 disables */
} rk_trial_config;

void rk_trial_config_default(rk_trial_config* out);

/* ensemble_csv: trimmed-MSE curve (one row per step). traces_csv (optional):
 * per-trial step records with a leading trial column. */
rk_status rk_simulate(const rk_trial_config* config, int trials, double trim,
                      char** ensemble_csv, char** traces_csv);

/* Runs the (pi, layer-fidelity) validation grid and reports, per setting and
 * checkpoint, the simulated layer cost against the model prediction. */
rk_status rk_validate_model(const double* pis, int num_pis,
                            const double* fidelities, int num_fidelities,
                            const rk_trial_config* base, int trials,
                            double trim, char** csv_out);

/* ---- Power-law fits ---- */

typedef struct rk_power_law_fit {
  double a, b, c;
  double residual_norm;
  int points_used;
  int c_pinned;
} rk_power_law_fit;

rk_status rk_fit_power_law(const double* n, const double* y, int count,
                           rk_power_law_fit* out);
double rk_power_law_eval(const rk_power_law_fit* fit, double n_target);

/* ---- Sweeps and reports ---- */

/* CSV columns: d, gate_error, gate_time_s, lambda, tau_l_s, rae_runtime_s,
 * vqe_runtime_s, rae_physical_qubits, vqe_physical_qubits. */
rk_status rk_sweep(const rk_hamiltonian* h, double target_rmse,
                   int connectivity, const rk_surface_code_params* params,
                   int d_min, int d_max, char** csv_out);

/* config_json schema:
 * {
 *   "target_rmse": 1e-3, "connectivity": "a2a" | "2d",
 *   "cycle_time": 1e-6, "d_min": 3, "d_max": 35,
 *   "series": [{"label": str, "target_qubits": int,
 *               "hamiltonians": [path, ...]        (files), or
 *               "synthetic": [{"num_qubits": int, "num_terms": int,
 *                              "law": str, "p0": x, "p1": y, "seed": s}]}]
 * }
 * json_out receives the prediction array. */
rk_status rk_report(const char* config_json, char** json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RAEKIT_RAEKIT_H_ */
