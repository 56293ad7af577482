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

// Command-line front end. Talks to the library exclusively through the C API
// in raekit/raekit.h.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "raekit/raekit.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) {
  throw CliError{code, message};
}

void check(rk_status status, int exit_code = kExitRuntime) {
  if (status != RK_OK) {
    die(status == RK_ERR_INVALID_ARGUMENT ? kExitUsage : exit_code,
        rk_last_error());
  }
}

struct StringGuard {
  char* value = nullptr;
  ~StringGuard() { rk_string_free(value); }
};

struct HamiltonianGuard {
  rk_hamiltonian* value = nullptr;
  ~HamiltonianGuard() { rk_hamiltonian_free(value); }
};

/// Writes via a temporary file and renames, so partial output is never left
/// behind. Empty path means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die(kExitRuntime, "cannot open output file: " + tmp);
    out << content;
    if (!out) die(kExitRuntime, "failed writing output file: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    die(kExitRuntime, "cannot rename output into place: " + path);
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

/// Rounds through the 9-digit text form so JSON output matches CSV output.
double round9(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

int parse_connectivity(const std::string& name) {
  if (name == "2d") return RK_CONN_2D;
  if (name == "a2a") return RK_CONN_A2A;
  die(kExitUsage, "connectivity must be '2d' or 'a2a'");
}

/// Expands `--config FILE` into option tokens inserted right after the
/// subcommand, so explicit command-line flags (parsed later) override the
/// file's values.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  if (args.empty()) return args;
  std::string config_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[i + 1];
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
      break;
    }
  }
  if (config_path.empty() || args[0] == "report") return args;

  std::ifstream in(config_path);
  if (!in) die(kExitUsage, "cannot open config file: " + config_path);
  nlohmann::json cfg;
  try {
    in >> cfg;
  } catch (const nlohmann::json::parse_error& e) {
    die(kExitUsage, std::string("config file: ") + e.what());
  }
  if (!cfg.is_object()) die(kExitUsage, "config file must be a JSON object");

  std::vector<std::string> expanded;
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    expanded.push_back("--" + it.key());
    if (it->is_string()) {
      expanded.push_back(it->get<std::string>());
    } else if (it->is_boolean()) {
      if (!it->get<bool>()) expanded.pop_back();
    } else if (it->is_array()) {
      expanded.pop_back();
      for (const auto& v : *it) {
        expanded.push_back("--" + it.key());
        expanded.push_back(v.dump());
      }
    } else {
      expanded.push_back(it->dump());
    }
  }
  args.insert(args.begin() + 1, expanded.begin(), expanded.end());
  return args;
}

rk_hamiltonian* load_hamiltonian_or_die(const std::string& path) {
  rk_hamiltonian* h = nullptr;
  const rk_status status = rk_hamiltonian_from_file(path.c_str(), &h);
  if (status != RK_OK) {
    die(status == RK_ERR_PARSE || status == RK_ERR_IO ? kExitUsage
                                                      : kExitRuntime,
        rk_last_error());
  }
  return h;
}

struct CommonOptions {
  std::string hamiltonian_path;
  double target_rmse = 1e-3;
  std::string connectivity = "a2a";
  double cycle_time = 1e-6;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  std::string config_path;  // consumed by expand_config
};

void add_common(CLI::App* cmd, CommonOptions* opts, bool needs_hamiltonian,
                bool with_config = true) {
  auto* ham = cmd->add_option("--hamiltonian", opts->hamiltonian_path,
                              "Hamiltonian file (text or JSON)");
  if (needs_hamiltonian) ham->required();
  cmd->add_option("--target-rmse", opts->target_rmse,
                  "Target energy RMSE in Hartree");
  cmd->add_option("--connectivity", opts->connectivity,
                  "Device connectivity: 2d or a2a")
      ->check(CLI::IsMember({"2d", "a2a"}));
  cmd->add_option("--cycle-time", opts->cycle_time,
                  "Surface code cycle time in seconds");
  cmd->add_option("--seed", opts->seed, "Master random seed");
  cmd->add_option("--out", opts->out_path, "Output path (default: stdout)");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  if (with_config) {
    cmd->add_option("--config", opts->config_path,
                    "JSON file supplying any flag; command line overrides");
  }
}

// ---- simulate ----

struct SimulateOptions {
  CommonOptions common;
  double pi = 0.0;
  double layer_fidelity = 1.0;
  double lambda = -1.0;  // overrides fidelity when >= 0
  double p_bar = 1.0;
  double prior_sd = 0.01;
  double jitter_sd = 0.01;
  int trials = 50;
  int steps = 300;
  int grid_nodes = 2001;
  double trim = 0.1;
  int max_layers = 0;
  double pi_sd_stop = 0.0;
  std::string traces_path;
};

int run_simulate(const SimulateOptions& opts) {
  if (opts.layer_fidelity <= 0.0 || opts.layer_fidelity > 1.0) {
    die(kExitUsage, "layer fidelity must lie in (0, 1]");
  }
  rk_trial_config cfg;
  rk_trial_config_default(&cfg);
  cfg.true_pi = opts.pi;
  cfg.lambda = opts.lambda >= 0.0 ? opts.lambda : -std::log(opts.layer_fidelity);
  cfg.p_bar = opts.p_bar;
  cfg.prior_sd = opts.prior_sd;
  cfg.prior_mean_jitter_sd = opts.jitter_sd;
  cfg.max_steps = opts.steps;
  cfg.grid_nodes = opts.grid_nodes;
  cfg.seed = opts.common.seed;
  cfg.max_layers = opts.max_layers;
  cfg.pi_sd_stop = opts.pi_sd_stop;

  StringGuard ensemble, traces;
  check(rk_simulate(&cfg, opts.trials, opts.trim, &ensemble.value,
                    opts.traces_path.empty() ? nullptr : &traces.value));
  write_output(opts.common.out_path, ensemble.value);
  if (!opts.traces_path.empty()) write_output(opts.traces_path, traces.value);
  return 0;
}

// ---- validate-model ----

struct ValidateOptions {
  CommonOptions common;
  std::vector<double> pi_grid = {0.0, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9};
  std::vector<double> fidelity_grid = {0.9, 0.99, 0.999};
  int trials = 50;
  int steps = 5000;
  int grid_nodes = 5001;
  double trim = 0.1;
};

int run_validate(const ValidateOptions& opts) {
  rk_trial_config cfg;
  rk_trial_config_default(&cfg);
  cfg.max_steps = opts.steps;
  cfg.grid_nodes = opts.grid_nodes;
  cfg.seed = opts.common.seed;
  StringGuard csv;
  check(rk_validate_model(opts.pi_grid.data(),
                          static_cast<int>(opts.pi_grid.size()),
                          opts.fidelity_grid.data(),
                          static_cast<int>(opts.fidelity_grid.size()), &cfg,
                          opts.trials, opts.trim, &csv.value));
  write_output(opts.common.out_path, csv.value);
  return 0;
}

// ---- allocate ----

struct AllocateOptions {
  CommonOptions common;
  double layer_fidelity = 1.0;
  double lambda = -1.0;
  double p_bar = 1.0;
  double tau_l = 1.0;
};

int run_allocate(const AllocateOptions& opts) {
  HamiltonianGuard h{load_hamiltonian_or_die(opts.common.hamiltonian_path)};
  const double lambda =
      opts.lambda >= 0.0 ? opts.lambda : -std::log(opts.layer_fidelity);
  rk_allocation_summary summary;
  StringGuard csv;
  check(rk_allocate(h.value, opts.common.target_rmse, lambda, opts.p_bar,
                    opts.tau_l, &summary, &csv.value));
  write_output(opts.common.out_path, csv.value);
  return 0;
}

// ---- estimate ----

struct EstimateOptions {
  CommonOptions common;
  int distance = 13;
};

int run_estimate(const EstimateOptions& opts) {
  HamiltonianGuard h{load_hamiltonian_or_die(opts.common.hamiltonian_path)};
  rk_surface_code_params params;
  rk_surface_code_params_default(&params);
  params.cycle_time = opts.common.cycle_time;
  rk_code_point code;
  check(rk_code_point_at(opts.distance, &params, &code));
  rk_circuit_costs costs;
  check(rk_circuit_costs_for(rk_hamiltonian_num_qubits(h.value),
                             parse_connectivity(opts.common.connectivity),
                             &costs));
  rk_standard_estimate est;
  check(rk_standard_runtime(h.value, opts.common.target_rmse, &costs, &code,
                            &est));
  std::ostringstream os;
  if (opts.common.format == "json") {
    nlohmann::json j;
    j["K"] = round9(est.runtime_constant);
    j["shots"] = round9(est.shots);
    j["mitigation_overhead"] = round9(est.mitigation_overhead);
    j["shot_time_s"] = round9(est.shot_time_s);
    j["total_runtime_s"] = round9(est.total_runtime_s);
    j["distance"] = code.distance;
    j["logical_gate_error"] = round9(code.logical_gate_error);
    os << j.dump(2) << '\n';
  } else {
    os << "K,shots,mitigation_overhead,shot_time_s,total_runtime_s,"
          "distance,logical_gate_error\n";
    os << format_double(est.runtime_constant) << ','
       << format_double(est.shots) << ','
       << format_double(est.mitigation_overhead) << ','
       << format_double(est.shot_time_s) << ','
       << format_double(est.total_runtime_s) << ',' << code.distance << ','
       << format_double(code.logical_gate_error) << '\n';
  }
  write_output(opts.common.out_path, os.str());
  return 0;
}

// ---- sweep ----

struct SweepOptions {
  CommonOptions common;
  int d_min = 3;
  int d_max = 25;
};

int run_sweep(const SweepOptions& opts) {
  HamiltonianGuard h{load_hamiltonian_or_die(opts.common.hamiltonian_path)};
  rk_surface_code_params params;
  rk_surface_code_params_default(&params);
  params.cycle_time = opts.common.cycle_time;
  StringGuard csv;
  check(rk_sweep(h.value, opts.common.target_rmse,
                 parse_connectivity(opts.common.connectivity), &params,
                 opts.d_min, opts.d_max, &csv.value));
  write_output(opts.common.out_path, csv.value);
  return 0;
}

// ---- fit ----

struct FitOptions {
  CommonOptions common;
  std::string in_path;
  double target_n = 0.0;
};

int run_fit(const FitOptions& opts) {
  std::ifstream in(opts.in_path);
  if (!in) die(kExitUsage, "cannot open fit input: " + opts.in_path);
  std::vector<double> ns, ys;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    for (auto& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    double n, y;
    if (!(fields >> n >> y)) {
      if (line_number == 1) continue;  // header row
      die(kExitUsage, "fit input line " + std::to_string(line_number) +
                          ": expected 'N,y'");
    }
    ns.push_back(n);
    ys.push_back(y);
  }
  rk_power_law_fit fit;
  check(rk_fit_power_law(ns.data(), ys.data(), static_cast<int>(ns.size()),
                         &fit));
  nlohmann::json j;
  j["a"] = round9(fit.a);
  j["b"] = round9(fit.b);
  j["c"] = round9(fit.c);
  j["residual_norm"] = round9(fit.residual_norm);
  j["points_used"] = fit.points_used;
  j["c_pinned"] = fit.c_pinned != 0;
  if (opts.target_n > 0.0) {
    j["target_n"] = round9(opts.target_n);
    j["extrapolated"] = round9(rk_power_law_eval(&fit, opts.target_n));
  }
  write_output(opts.common.out_path, j.dump(2) + "\n");
  return 0;
}

// ---- report ----

struct ReportOptions {
  CommonOptions common;
  std::string config_path;
};

int run_report(const ReportOptions& opts) {
  std::ifstream in(opts.config_path);
  if (!in) die(kExitUsage, "cannot open report config: " + opts.config_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  StringGuard json_out;
  check(rk_report(buffer.str().c_str(), &json_out.value));
  write_output(opts.common.out_path, std::string(json_out.value) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource estimation for amplitude-amplified energy "
               "estimation versus standard sampling"};
  app.require_subcommand(1);

  SimulateOptions simulate_opts;
  auto* simulate = app.add_subcommand(
      "simulate", "Simulate the adaptive estimation process for one amplitude");
  add_common(simulate, &simulate_opts.common, false);
  simulate->add_option("--pi", simulate_opts.pi, "True expectation value")
      ->check(CLI::Range(-1.0, 1.0));
  simulate->add_option("--layer-fidelity", simulate_opts.layer_fidelity,
                       "Per-layer fidelity e^-lambda");
  simulate->add_option("--lambda", simulate_opts.lambda,
                       "Per-layer decay (overrides --layer-fidelity)");
  simulate->add_option("--p-bar", simulate_opts.p_bar,
                       "Prep/measurement factor");
  simulate->add_option("--prior-sd", simulate_opts.prior_sd,
                       "Prior standard deviation (radians)");
  simulate->add_option("--jitter-sd", simulate_opts.jitter_sd,
                       "Prior mean jitter standard deviation (radians)");
  simulate->add_option("--trials", simulate_opts.trials, "Number of trials");
  simulate->add_option("--steps", simulate_opts.steps, "Steps per trial");
  simulate->add_option("--grid-nodes", simulate_opts.grid_nodes,
                       "Posterior grid nodes");
  simulate->add_option("--trim", simulate_opts.trim,
                       "Trimmed-MSE exclusion fraction");
  simulate->add_option("--max-layers", simulate_opts.max_layers,
                       "Hard cap on layer candidates (0 = adaptive only)");
  simulate->add_option("--pi-sd-stop", simulate_opts.pi_sd_stop,
                       "Early stop when posterior Pi sd falls below this");
  simulate->add_option("--traces", simulate_opts.traces_path,
                       "Also write per-trial traces to this CSV path");

  ValidateOptions validate_opts;
  auto* validate = app.add_subcommand(
      "validate-model",
      "Compare simulated layer costs against the closed-form runtime model");
  add_common(validate, &validate_opts.common, false);
  validate->add_option("--pi-grid", validate_opts.pi_grid,
                       "True expectation values to sweep");
  validate->add_option("--fidelity-grid", validate_opts.fidelity_grid,
                       "Layer fidelities to sweep");
  validate->add_option("--trials", validate_opts.trials, "Trials per setting");
  validate->add_option("--steps", validate_opts.steps, "Step cap per trial");
  validate->add_option("--grid-nodes", validate_opts.grid_nodes,
                       "Posterior grid nodes");
  validate->add_option("--trim", validate_opts.trim,
                       "Trimmed-MSE exclusion fraction");

  AllocateOptions allocate_opts;
  auto* allocate = app.add_subcommand(
      "allocate", "Optimal per-term accuracy allocation for a Hamiltonian");
  add_common(allocate, &allocate_opts.common, true);
  allocate->add_option("--layer-fidelity", allocate_opts.layer_fidelity,
                       "Per-layer fidelity e^-lambda");
  allocate->add_option("--lambda", allocate_opts.lambda,
                       "Per-layer decay (overrides --layer-fidelity)");
  allocate->add_option("--p-bar", allocate_opts.p_bar,
                       "Prep/measurement factor");
  allocate->add_option("--tau-l", allocate_opts.tau_l,
                       "Layer duration in seconds");

  EstimateOptions estimate_opts;
  auto* estimate = app.add_subcommand(
      "estimate", "Standard-sampling runtime estimate at a code distance");
  add_common(estimate, &estimate_opts.common, true);
  estimate->add_option("--distance", estimate_opts.distance, "Code distance");

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand(
      "sweep", "Sweep code distances and compare both methods");
  add_common(sweep, &sweep_opts.common, true);
  sweep->add_option("--d-min", sweep_opts.d_min, "Smallest code distance");
  sweep->add_option("--d-max", sweep_opts.d_max, "Largest code distance");

  FitOptions fit_opts;
  auto* fit = app.add_subcommand("fit", "Fit y = a N^b + c to (N, y) points");
  add_common(fit, &fit_opts.common, false);
  fit->add_option("--in", fit_opts.in_path, "CSV of N,y points")->required();
  fit->add_option("--target", fit_opts.target_n,
                  "Also evaluate the fit at this N");

  ReportOptions report_opts;
  auto* report = app.add_subcommand(
      "report", "Full runtime prediction report for labeled series");
  add_common(report, &report_opts.common, false, /*with_config=*/false);
  report->add_option("--config", report_opts.config_path,
                     "Report configuration JSON")
      ->required();

  try {
    const std::vector<std::string> raw(argv + 1, argv + argc);
    std::vector<std::string> args = expand_config(raw);
    // CLI11 consumes tokens back-to-front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }

  try {
    if (simulate->parsed()) return run_simulate(simulate_opts);
    if (validate->parsed()) return run_validate(validate_opts);
    if (allocate->parsed()) return run_allocate(allocate_opts);
    if (estimate->parsed()) return run_estimate(estimate_opts);
    if (sweep->parsed()) return run_sweep(sweep_opts);
    if (fit->parsed()) return run_fit(fit_opts);
    if (report->parsed()) return run_report(report_opts);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}
