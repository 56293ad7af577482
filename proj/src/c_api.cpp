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

#include "raekit/raekit.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "raekit/cost_models.hpp"
#include "raekit/hamiltonian.hpp"
#include "raekit/inference.hpp"
#include "raekit/likelihood.hpp"
#include "raekit/pipeline.hpp"
#include "raekit/rng.hpp"
#include "raekit/runtime_model.hpp"
#include "raekit/standard_sampling.hpp"

using namespace raekit;

namespace {

thread_local std::string g_last_error;

rk_status fail(rk_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

/* Runs `fn`, translating exceptions into status codes. */
template <typename Fn>
rk_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RK_OK;
  } catch (const std::invalid_argument& e) {
    return fail(RK_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(RK_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(RK_ERR_NUMERIC, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

/* All floating-point output uses 9 significant digits. */
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/* Rounds through the 9-digit text form so JSON numbers match CSV output. */
double round9(double v) { return std::strtod(fmt(v).c_str(), nullptr); }

Connectivity to_connectivity(int value) {
  switch (value) {
    case RK_CONN_2D:
      return Connectivity::kTwoDimensional;
    case RK_CONN_A2A:
      return Connectivity::kAllToAll;
    default:
      throw std::invalid_argument("unknown connectivity value");
  }
}

SurfaceCodeParams to_params(const rk_surface_code_params* p) {
  SurfaceCodeParams params;
  if (p != nullptr) {
    params.cycle_time = p->cycle_time;
    params.cycles_per_gate_per_distance = p->cycles_per_gate_per_distance;
    params.physical_gate_error = p->physical_gate_error;
  }
  return params;
}

CircuitCosts to_costs(const rk_circuit_costs* c) {
  if (c == nullptr) throw std::invalid_argument("null circuit costs");
  return circuit_costs(c->num_qubits, to_connectivity(c->connectivity));
}

TrialConfig to_trial_config(const rk_trial_config* c) {
  if (c == nullptr) throw std::invalid_argument("null trial config");
  TrialConfig config;
  config.true_pi = c->true_pi;
  config.noise = {c->lambda, c->p_bar};
  config.prior_sd = c->prior_sd;
  config.prior_mean_jitter_sd = c->prior_mean_jitter_sd;
  config.max_steps = c->max_steps;
  config.grid_nodes = c->grid_nodes;
  config.seed = c->seed;
  if (c->max_layers > 0) config.layer_policy.max_layers = c->max_layers;
  config.pi_sd_stop = c->pi_sd_stop;
  return config;
}

}  // namespace

struct rk_hamiltonian {
  PauliHamiltonian value;
};

extern "C" {

const char* rk_last_error(void) { return g_last_error.c_str(); }

void rk_string_free(char* s) { std::free(s); }

rk_status rk_hamiltonian_from_string(const char* text, rk_hamiltonian** out) {
  if (text == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  try {
    *out = new rk_hamiltonian{parse_hamiltonian(text)};
    g_last_error.clear();
    return RK_OK;
  } catch (const std::invalid_argument& e) {
    return fail(RK_ERR_PARSE, e.what());
  } catch (const std::exception& e) {
    return fail(RK_ERR_NUMERIC, e.what());
  }
}

rk_status rk_hamiltonian_from_file(const char* path, rk_hamiltonian** out) {
  if (path == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  try {
    *out = new rk_hamiltonian{load_hamiltonian(path)};
    g_last_error.clear();
    return RK_OK;
  } catch (const std::invalid_argument& e) {
    return fail(RK_ERR_PARSE, e.what());
  } catch (const std::runtime_error& e) {
    return fail(RK_ERR_IO, e.what());
  }
}

rk_status rk_hamiltonian_synthesize(int num_qubits, int num_terms,
                                    const char* law, double p0, double p1,
                                    uint64_t seed, rk_hamiltonian** out) {
  if (law == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    SynthesisSpec spec;
    if (std::strcmp(law, "uniform") == 0) {
      spec.law = CoefficientLaw::kUniform;
      spec.uniform_halfwidth = p0;
    } else if (std::strcmp(law, "log-uniform") == 0) {
      spec.law = CoefficientLaw::kLogUniform;
      spec.log_lo = p0;
      spec.log_hi = p1;
    } else {
      throw std::invalid_argument("unknown coefficient law: " +
                                  std::string(law));
    }
    *out = new rk_hamiltonian{
        synthesize_hamiltonian(num_qubits, num_terms, spec, seed)};
  });
}

void rk_hamiltonian_free(rk_hamiltonian* h) { delete h; }

int rk_hamiltonian_num_qubits(const rk_hamiltonian* h) {
  return h == nullptr ? 0 : h->value.num_qubits();
}

int rk_hamiltonian_num_terms(const rk_hamiltonian* h) {
  return h == nullptr ? 0 : static_cast<int>(h->value.num_terms());
}

double rk_hamiltonian_one_norm(const rk_hamiltonian* h, int include_identity) {
  return h == nullptr ? 0.0 : h->value.one_norm(include_identity != 0);
}

rk_status rk_hamiltonian_to_text(const rk_hamiltonian* h, char** out) {
  if (h == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(h->value.to_text()); });
}

rk_status rk_hamiltonian_to_json(const rk_hamiltonian* h, char** out) {
  if (h == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] { *out = dup_string(h->value.to_json()); });
}

double rk_likelihood(int outcome, double theta, double lambda, double p_bar,
                     int layers) {
  return likelihood_noisy(outcome, theta, {lambda, p_bar}, layers);
}

double rk_fisher_information(double theta, double lambda, double p_bar,
                             int layers) {
  return fisher_information(theta, {lambda, p_bar}, layers);
}

rk_status rk_runtime_model_layers(double epsilon, double lambda, double p_bar,
                                  double* out) {
  if (out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    RuntimeModelParams params;
    params.lambda = lambda;
    params.p_bar = p_bar;
    *out = runtime_model_layers(epsilon, params);
  });
}

rk_status rk_circuit_costs_for(int num_qubits, int connectivity,
                               rk_circuit_costs* out) {
  if (out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const CircuitCosts costs =
        circuit_costs(num_qubits, to_connectivity(connectivity));
    out->num_qubits = costs.num_qubits;
    out->connectivity = connectivity;
    out->ansatz_depth = costs.ansatz_depth;
    out->phaseflip_depth = costs.phaseflip_depth;
    out->ansatz_gates = costs.ansatz_gates();
    out->phaseflip_gates = costs.phaseflip_gates();
    out->layer_depth = costs.layer_depth();
    out->layer_gates = costs.layer_gates();
  });
}

rk_status rk_layer_decay(const rk_circuit_costs* costs,
                         double logical_gate_error, double* lambda_out) {
  if (lambda_out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *lambda_out = layer_decay(to_costs(costs), logical_gate_error).lambda;
  });
}

rk_status rk_layer_time(const rk_circuit_costs* costs,
                        double logical_gate_time, double* tau_l_out) {
  if (tau_l_out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *tau_l_out = layer_time(to_costs(costs), logical_gate_time);
  });
}

void rk_surface_code_params_default(rk_surface_code_params* out) {
  if (out == nullptr) return;
  const SurfaceCodeParams defaults;
  out->cycle_time = defaults.cycle_time;
  out->cycles_per_gate_per_distance = defaults.cycles_per_gate_per_distance;
  out->physical_gate_error = defaults.physical_gate_error;
}

rk_status rk_code_point_at(int distance, const rk_surface_code_params* params,
                           rk_code_point* out) {
  if (out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const CodePoint point = code_point(distance, to_params(params));
    out->distance = point.distance;
    out->logical_gate_error = point.logical_gate_error;
    out->logical_gate_time = point.logical_gate_time;
    out->physical_qubits_per_logical = point.physical_qubits_per_logical;
  });
}

rk_status rk_distance_for_error(double target_gate_error,
                                const rk_surface_code_params* params,
                                int d_max, rk_code_point* out) {
  if (out == nullptr) return fail(RK_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    const CodePoint point =
        distance_for_error(target_gate_error, to_params(params), d_max);
    out->distance = point.distance;
    out->logical_gate_error = point.logical_gate_error;
    out->logical_gate_time = point.logical_gate_time;
    out->physical_qubits_per_logical = point.physical_qubits_per_logical;
  });
}

int64_t rk_physical_qubits(int n_logical, int distance) {
  try {
    return physical_qubits(n_logical, distance);
  } catch (const std::exception&) {
    return -1;
  }
}

rk_status rk_allocate(const rk_hamiltonian* h, double target_rmse,
                      double lambda, double p_bar, double tau_l,
                      rk_allocation_summary* out, char** csv_out) {
  if (h == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    RuntimeModelParams params;
    params.lambda = lambda;
    params.p_bar = p_bar;
    params.omega = omega_from_layer_time(tau_l, lambda, p_bar);
    const AllocationResult alloc = allocate(h->value, target_rmse, params);
    out->lagrange_multiplier = alloc.lagrange_multiplier;
    out->total_runtime_s = alloc.total_runtime;
    out->parallel_runtime_s = alloc.parallel_runtime;
    out->total_layers = alloc.total_runtime / tau_l;
    if (csv_out != nullptr) {
      std::ostringstream os;
      os << "term_index,mu,epsilon_i,T_i_seconds\n";
      for (std::size_t i = 0; i < alloc.epsilons.size(); ++i) {
        os << i << ',' << fmt(alloc.coefficients[i]) << ','
           << fmt(alloc.epsilons[i]) << ',' << fmt(alloc.term_runtimes[i])
           << '\n';
      }
      os << "lagrange_multiplier," << fmt(alloc.lagrange_multiplier) << ",,\n";
      os << "T_star_seconds," << fmt(alloc.total_runtime) << ",,\n";
      os << "T_parallel_seconds," << fmt(alloc.parallel_runtime) << ",,\n";
      *csv_out = dup_string(os.str());
    }
  });
}

rk_status rk_standard_runtime(const rk_hamiltonian* h, double target_rmse,
                              const rk_circuit_costs* costs,
                              const rk_code_point* code,
                              rk_standard_estimate* out) {
  if (h == nullptr || code == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    CodePoint cp;
    cp.distance = code->distance;
    cp.logical_gate_error = code->logical_gate_error;
    cp.logical_gate_time = code->logical_gate_time;
    cp.physical_qubits_per_logical = code->physical_qubits_per_logical;
    const StandardSamplingEstimate est =
        standard_runtime(h->value, target_rmse, to_costs(costs), cp);
    out->runtime_constant = est.runtime_constant;
    out->shots = est.shots;
    out->mitigation_overhead = est.mitigation_overhead;
    out->shot_time_s = est.shot_time;
    out->total_runtime_s = est.total_runtime;
  });
}

void rk_trial_config_default(rk_trial_config* out) {
  if (out == nullptr) return;
  out->true_pi = 0.0;
  out->lambda = 0.0;
  out->p_bar = 1.0;
  out->prior_sd = 0.01;
  out->prior_mean_jitter_sd = 0.01;
  out->max_steps = 300;
  out->grid_nodes = 2001;
  out->seed = 0;
  out->max_layers = 0;
  out->pi_sd_stop = 0.0;
}

rk_status rk_simulate(const rk_trial_config* config, int trials, double trim,
                      char** ensemble_csv, char** traces_csv) {
  if (ensemble_csv == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null ensemble output");
  }
  return guarded([&] {
    const TrialConfig cfg = to_trial_config(config);
    const std::vector<TrialTrace> traces = run_ensemble(cfg, trials);
    const std::vector<EnsemblePoint> curve = ensemble_stats(traces, trim);

    std::ostringstream ens;
    ens << "step,cum_layers,trimmed_mse_pi,trimmed_mse_theta,trim\n";
    for (std::size_t s = 0; s < curve.size(); ++s) {
      ens << s << ',' << fmt(curve[s].cum_layers) << ','
          << fmt(curve[s].trimmed_mse_pi) << ','
          << fmt(curve[s].trimmed_mse_theta) << ',' << fmt(trim) << '\n';
    }
    *ensemble_csv = dup_string(ens.str());

    if (traces_csv != nullptr) {
      std::ostringstream tr;
      tr << "trial,step,L,d,cum_layers,theta_hat,sd,pi_hat,sq_err_pi,"
            "sq_err_theta\n";
      for (std::size_t t = 0; t < traces.size(); ++t) {
        for (std::size_t s = 0; s < traces[t].steps.size(); ++s) {
          const TrialStep& rec = traces[t].steps[s];
          tr << t << ',' << s << ',' << rec.layers << ',' << rec.outcome << ','
             << fmt(rec.cum_layers) << ',' << fmt(rec.theta_hat) << ','
             << fmt(rec.sd) << ',' << fmt(rec.pi_hat) << ','
             << fmt(rec.sq_err_pi) << ',' << fmt(rec.sq_err_theta) << '\n';
        }
      }
      *traces_csv = dup_string(tr.str());
    }
  });
}

rk_status rk_validate_model(const double* pis, int num_pis,
                            const double* fidelities, int num_fidelities,
                            const rk_trial_config* base, int trials,
                            double trim, char** csv_out) {
  if (pis == nullptr || fidelities == nullptr || csv_out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (num_pis < 1 || num_fidelities < 1) {
    return fail(RK_ERR_INVALID_ARGUMENT, "empty setting grid");
  }
  return guarded([&] {
    std::ostringstream os;
    os << "pi,layer_fidelity,epsilon,simulated_layers,model_layers,ratio\n";
    for (int fi = 0; fi < num_fidelities; ++fi) {
      const double fidelity = fidelities[fi];
      if (fidelity <= 0.0 || fidelity > 1.0) {
        throw std::invalid_argument("layer fidelity must lie in (0, 1]");
      }
      for (int pi_i = 0; pi_i < num_pis; ++pi_i) {
        TrialConfig cfg = to_trial_config(base);
        cfg.true_pi = pis[pi_i];
        cfg.noise.lambda = -std::log(fidelity);
        cfg.seed = SplitMix64::mix(cfg.seed, 1000003ull * fi + pi_i);

        const double theta_true = std::acos(cfg.true_pi);
        const double spacing = std::numbers::pi / (cfg.grid_nodes - 1);
        // Stop once trials resolve below the mid-accuracy window.
        if (cfg.pi_sd_stop <= 0.0) {
          cfg.pi_sd_stop =
              3.0 * spacing * std::max(std::sin(theta_true), 0.1);
        }

        const std::vector<TrialTrace> traces = run_ensemble(cfg, trials);
        const std::vector<EnsemblePoint> curve = ensemble_stats(traces, trim);

        RuntimeModelParams model;
        model.lambda = cfg.noise.lambda;
        model.p_bar = cfg.noise.p_bar;

        // Checkpoints at geometrically thinning accuracy to keep the table
        // readable.
        // The model comparison runs in phase-angle space: the layer-count
        // model is a bound on the cost of resolving theta, and the Jacobian
        // sin(theta) between theta and the expectation value would otherwise
        // skew the ratio for true values near +-1.
        double last_eps = 1e300;
        for (std::size_t s = 0; s < curve.size(); ++s) {
          const double eps = std::sqrt(curve[s].trimmed_mse_theta);
          const bool last_row = s + 1 == curve.size();
          if (eps > 0.92 * last_eps && !last_row) continue;
          last_eps = eps;
          if (eps <= 0.0) continue;
          const double model_layers = runtime_model_layers(eps, model);
          const double simulated = curve[s].cum_layers;
          os << fmt(cfg.true_pi) << ',' << fmt(fidelity) << ',' << fmt(eps)
             << ',' << fmt(simulated) << ',' << fmt(model_layers) << ','
             << fmt(simulated / model_layers) << '\n';
        }
      }
    }
    *csv_out = dup_string(os.str());
  });
}

rk_status rk_fit_power_law(const double* n, const double* y, int count,
                           rk_power_law_fit* out) {
  if (n == nullptr || y == nullptr || out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const PowerLawFit fit = fit_power_law(std::vector<double>(n, n + count),
                                          std::vector<double>(y, y + count));
    out->a = fit.a;
    out->b = fit.b;
    out->c = fit.c;
    out->residual_norm = fit.residual_norm;
    out->points_used = fit.points_used;
    out->c_pinned = fit.c_pinned ? 1 : 0;
  });
}

double rk_power_law_eval(const rk_power_law_fit* fit, double n_target) {
  if (fit == nullptr) return 0.0;
  return fit->a * std::pow(n_target, fit->b) + fit->c;
}

rk_status rk_sweep(const rk_hamiltonian* h, double target_rmse,
                   int connectivity, const rk_surface_code_params* params,
                   int d_min, int d_max, char** csv_out) {
  if (h == nullptr || csv_out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const std::vector<SweepPoint> points =
        sweep(h->value, target_rmse, to_connectivity(connectivity),
              to_params(params), d_min, d_max);
    std::ostringstream os;
    os << "d,gate_error,gate_time_s,lambda,tau_l_s,rae_runtime_s,"
          "vqe_runtime_s,rae_physical_qubits,vqe_physical_qubits\n";
    for (const auto& pt : points) {
      os << pt.distance << ',' << fmt(pt.gate_error) << ',' << fmt(pt.gate_time)
         << ',' << fmt(pt.lambda) << ',' << fmt(pt.tau_l) << ','
         << fmt(pt.rae_runtime) << ',' << fmt(pt.vqe_runtime) << ','
         << pt.rae_physical_qubits << ',' << pt.vqe_physical_qubits << '\n';
    }
    *csv_out = dup_string(os.str());
  });
}

rk_status rk_report(const char* config_json, char** json_out) {
  if (config_json == nullptr || json_out == nullptr) {
    return fail(RK_ERR_INVALID_ARGUMENT, "null argument");
  }
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(config_json);
  } catch (const nlohmann::json::parse_error& e) {
    return fail(RK_ERR_PARSE, std::string("report config: ") + e.what());
  }
  return guarded([&] {
    ReportConfig config;
    config.target_rmse = cfg.value("target_rmse", 1e-3);
    const std::string conn = cfg.value("connectivity", std::string("a2a"));
    if (conn == "a2a") {
      config.connectivity = Connectivity::kAllToAll;
    } else if (conn == "2d") {
      config.connectivity = Connectivity::kTwoDimensional;
    } else {
      throw std::invalid_argument("connectivity must be 'a2a' or '2d'");
    }
    config.code_params.cycle_time = cfg.value("cycle_time", 1e-6);
    config.d_min = cfg.value("d_min", 3);
    config.d_max = cfg.value("d_max", 35);

    std::vector<ReportSeries> all_series;
    for (const auto& s : cfg.at("series")) {
      ReportSeries series;
      series.label = s.at("label").get<std::string>();
      series.target_qubits = s.value("target_qubits", 0);
      if (s.contains("hamiltonians")) {
        for (const auto& path : s.at("hamiltonians")) {
          series.hamiltonians.push_back(
              load_hamiltonian(path.get<std::string>()));
        }
      }
      if (s.contains("synthetic")) {
        for (const auto& spec : s.at("synthetic")) {
          SynthesisSpec synth;
          const std::string law = spec.value("law", std::string("log-uniform"));
          if (law == "uniform") {
            synth.law = CoefficientLaw::kUniform;
            synth.uniform_halfwidth = spec.value("p0", 1.0);
          } else if (law == "log-uniform") {
            synth.law = CoefficientLaw::kLogUniform;
            synth.log_lo = spec.value("p0", 1e-3);
            synth.log_hi = spec.value("p1", 1.0);
          } else {
            throw std::invalid_argument("unknown coefficient law: " + law);
          }
          series.hamiltonians.push_back(synthesize_hamiltonian(
              spec.at("num_qubits").get<int>(), spec.at("num_terms").get<int>(),
              synth, spec.value("seed", 0ull)));
        }
      }
      all_series.push_back(std::move(series));
    }

    const std::vector<RuntimePrediction> report =
        build_report(all_series, config);
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : report) {
      nlohmann::json j;
      j["label"] = row.label;
      j["logical_qubits"] = row.logical_qubits;
      j["rae_physical_qubits"] = row.rae_physical_qubits;
      j["vqe_physical_qubits"] = row.vqe_physical_qubits;
      j["rae_optimal_gate_error"] = round9(row.rae_optimal_gate_error);
      j["vqe_optimal_gate_error"] = round9(row.vqe_optimal_gate_error);
      j["rae_runtime_s"] = round9(row.rae_runtime);
      j["rae_parallel_runtime_s"] = round9(row.rae_parallel_runtime);
      j["vqe_runtime_s"] = round9(row.vqe_runtime);
      if (row.crossover_gate_error.has_value()) {
        j["crossover_gate_error"] = round9(*row.crossover_gate_error);
      } else {
        j["crossover_gate_error"] = nullptr;
      }
      j["runtime_ratio"] = round9(row.runtime_ratio);
      out.push_back(std::move(j));
    }
    *json_out = dup_string(out.dump(2));
  });
}

}  // extern "C"
