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

// End-to-end acceptance checks. Each criterion prints a single PASS/FAIL
// line; the exit status is the number of failures. argv[1] (optional) is the
// path to the CLI binary, needed by the determinism criterion.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "raekit/cost_models.hpp"
#include "raekit/hamiltonian.hpp"
#include "raekit/likelihood.hpp"
#include "raekit/pipeline.hpp"
#include "raekit/raekit.h"
#include "raekit/rng.hpp"
#include "raekit/runtime_model.hpp"

using namespace raekit;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

// ---- 1: simulated layer cost vs the closed-form runtime model ----

void criterion_runtime_model_validation() {
  const std::vector<double> pis = {0.0, 0.15, 0.3, 0.45, 0.6, 0.75, 0.9};
  const std::vector<double> fids = {0.9, 0.99, 0.999};
  rk_trial_config base;
  rk_trial_config_default(&base);
  base.max_steps = 5000;
  base.grid_nodes = 5001;
  base.seed = 20260826;
  char* csv = nullptr;
  if (rk_validate_model(pis.data(), static_cast<int>(pis.size()), fids.data(),
                        static_cast<int>(fids.size()), &base, 50, 0.1,
                        &csv) != RK_OK) {
    report(1, false, std::string("validation run failed: ") + rk_last_error());
    return;
  }
  // The ensemble starts from an informative prior, so the first checkpoints
  // cost almost nothing; the model assumes estimation from scratch. Per
  // setting we therefore compare the *incremental* simulated cost against the
  // model increment t(eps) - t(eps_start), inside a window that excludes both
  // the prior-dominated head (eps > eps_start / 2) and the grid-resolution
  // floor (phase-angle error below 3x the node spacing). A setting passes
  // when the majority of its window rows land within a factor of 4.
  struct Row {
    double eps, simulated, model;
  };
  std::map<std::pair<double, double>, std::vector<Row>> settings;
  std::istringstream in(csv);
  rk_string_free(csv);
  std::string line;
  std::getline(in, line);  // header
  const double spacing = kPi / (base.grid_nodes - 1);
  while (std::getline(in, line)) {
    for (auto& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    double pi_v, fid, eps, simulated, model, ratio;
    if (!(fields >> pi_v >> fid >> eps >> simulated >> model >> ratio)) break;
    settings[{pi_v, fid}].push_back({eps, simulated, model});
  }
  int passed = 0;
  const int total = static_cast<int>(pis.size() * fids.size());
  for (const auto& [key, rows] : settings) {
    if (rows.empty()) continue;
    const double eps_start = rows.front().eps;
    const double model_start = rows.front().model;
    const double lo = 3.0 * spacing;
    const double hi = eps_start / 2.0;
    int in_window = 0, ok = 0;
    for (const Row& r : rows) {
      if (r.eps < lo || r.eps > hi) continue;
      if (r.model <= model_start) continue;
      ++in_window;
      const double ratio = r.simulated / (r.model - model_start);
      if (ratio >= 0.25 && ratio <= 4.0) ++ok;
    }
    if (in_window > 0 && 2 * ok > in_window) ++passed;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d of %d (pi, fidelity) settings within factor 4 at "
                "mid-range accuracy (need >= 70%%)",
                passed, total);
  report(1, passed * 10 >= total * 7, detail);
}

// ---- 2: allocation vs a brute-force oracle ----

void criterion_allocation_optimality() {
  int checked = 0, ok = 0, never_worse = 0;
  SplitMix64 rng(314159);
  for (double lambda : {0.0, 1e-4, 1e-2}) {
    for (int seed = 0; seed < 20; ++seed) {
      const double mu1 = 0.05 + 2.0 * rng.next_double();
      const double mu2 = 0.05 + 2.0 * rng.next_double();
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.17g ZI\n%.17g IX\n", mu1, mu2);
      const auto h = parse_hamiltonian(buf);
      RuntimeModelParams params{lambda, 1.0, 1.0};
      const auto result = allocate(h, 1e-3, params);
      const auto uniform = uniform_allocation(h, 1e-3, params);
      double best = uniform.total_runtime;
      const int n = 40000;
      const double budget = 1e-6;
      for (int i = 1; i < n; ++i) {
        const double share = budget * i / n;
        const double e1 = std::sqrt(share) / mu1;
        const double e2 = std::sqrt(budget - share) / mu2;
        best = std::min(best, per_term_runtime(e1, params) +
                                  per_term_runtime(e2, params));
      }
      ++checked;
      if (result.total_runtime <= 1.02 * best) ++ok;
      if (result.total_runtime <= uniform.total_runtime * (1.0 + 1e-12)) {
        ++never_worse;
      }
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d/%d two-term instances within 2%% of brute force; %d/%d "
                "never exceed uniform allocation",
                ok, checked, never_worse, checked);
  report(2, ok == checked && never_worse == checked, detail);
}

// ---- 3: accuracy budget constraint exactness ----

void criterion_constraint_exactness() {
  SplitMix64 rng(271828);
  int ok = 0;
  const int total = 100;
  for (int i = 0; i < total; ++i) {
    const int terms = 2 + static_cast<int>(rng.next_u64() % 199);
    SynthesisSpec spec;
    spec.law = (i % 2 == 0) ? CoefficientLaw::kUniform
                            : CoefficientLaw::kLogUniform;
    const auto h = synthesize_hamiltonian(10, terms, spec, rng.next_u64());
    RuntimeModelParams params{i % 3 == 0 ? 0.0 : 1e-3, 1.0, 1.0};
    const double eps = 1e-3;
    const auto result = allocate(h, eps, params);
    double lhs = 0.0;
    for (std::size_t t = 0; t < result.epsilons.size(); ++t) {
      lhs += result.coefficients[t] * result.coefficients[t] *
             result.epsilons[t] * result.epsilons[t];
    }
    if (std::abs(lhs - eps * eps) <= 1e-9 * eps * eps) ++ok;
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%d/%d random Hamiltonians satisfy the budget to 1e-9 "
                "relative",
                ok, total);
  report(3, ok == total, detail);
}

// ---- 4: fault-tolerance qubit counts ----

void criterion_fault_tolerance() {
  SurfaceCodeParams params;
  const auto low = distance_for_error(1.3e-5, params);
  const bool d_ok = low.distance == 13;
  const bool q_low = physical_qubits(104, 13) == 35152;
  const bool q_high = physical_qubits(104, 24) == 119808;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "gate-error 1.3e-5 -> d=%d (want 13); 104 logical qubits -> "
                "%lld at d=13 (want 35152), %lld at d=24 (want 119808)",
                low.distance,
                static_cast<long long>(physical_qubits(104, 13)),
                static_cast<long long>(physical_qubits(104, 24)));
  report(4, d_ok && q_low && q_high, detail);
}

// ---- 5: qualitative sweep structure ----

void criterion_sweep_structure() {
  const auto h = synthesize_hamiltonian(8, 30, SynthesisSpec{}, 2026);
  SurfaceCodeParams params;
  const auto points = sweep(h, 1e-3, Connectivity::kAllToAll, params, 3, 25);
  std::size_t rae_idx = 0, vqe_idx = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].rae_runtime < points[rae_idx].rae_runtime) rae_idx = i;
    if (points[i].vqe_runtime < points[vqe_idx].vqe_runtime) vqe_idx = i;
  }
  const bool interior_rae = rae_idx > 0 && rae_idx + 1 < points.size();
  const bool vqe_noisier =
      points[vqe_idx].gate_error > points[rae_idx].gate_error;
  const auto cross = crossover_error_rate(points);
  const bool rae_wins =
      points[rae_idx].rae_runtime < points[vqe_idx].vqe_runtime;
  bool cross_between = false;
  if (cross.has_value()) {
    cross_between = *cross >= points[rae_idx].gate_error &&
                    *cross <= points[vqe_idx].gate_error;
  }
  char detail[240];
  std::snprintf(detail, sizeof detail,
                "interior amplified minimum: %s (d=%d); sampling optimum at "
                "larger gate error: %s (d=%d); crossover between optima: %s",
                interior_rae ? "yes" : "no", points[rae_idx].distance,
                vqe_noisier ? "yes" : "no", points[vqe_idx].distance,
                cross_between ? "yes" : (rae_wins ? "no" : "n/a"));
  report(5, interior_rae && vqe_noisier && (!rae_wins || cross_between),
         detail);
}

// ---- 6: amplified-vs-sampling advantage on scaled synthetic instances ----

void criterion_runtime_advantage() {
  // Wider coefficient spread (smaller log-uniform floor) should not shrink
  // the advantage at each method's own optimum. The one-norm is pinned so
  // that only the shape of the coefficient distribution varies across the
  // series; otherwise widening the spread downward also shrinks the norm
  // and both costs move together.
  const std::vector<double> floors = {0.3, 3e-2, 3e-3, 3e-4};
  const double target_one_norm = 20.0;  // Hartree, molecular-scale
  std::vector<double> ratios;
  SurfaceCodeParams params;
  for (double lo : floors) {
    SynthesisSpec spec;
    spec.law = CoefficientLaw::kLogUniform;
    spec.log_lo = lo;
    spec.log_hi = 1.0;
    const auto raw = synthesize_hamiltonian(12, 150, spec, 404);
    const double scale = target_one_norm / raw.one_norm();
    std::vector<PauliTerm> terms = raw.terms();
    for (auto& t : terms) t.coefficient *= scale;
    const PauliHamiltonian h(std::move(terms), raw.num_qubits());
    const auto points =
        sweep(h, 1e-3, Connectivity::kAllToAll, params, 3, 29);
    const auto rae = optimal_point(points, Method::kRae);
    const auto vqe = optimal_point(points, Method::kVqe);
    ratios.push_back(vqe.vqe_runtime / rae.rae_runtime);
  }
  bool all_above_one = true, monotone = true;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (ratios[i] <= 1.0) all_above_one = false;
    if (i > 0 && ratios[i] < ratios[i - 1] * 0.999) monotone = false;
  }
  std::ostringstream os;
  os << "advantage ratios by increasing spread:";
  for (double r : ratios) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3g", r);
    os << buf;
  }
  os << " (need all > 1, non-decreasing)";
  report(6, all_above_one && monotone, os.str());
}

// ---- 7: analytic Fisher information vs finite differences ----

void criterion_fisher_information() {
  SplitMix64 rng(161803);
  int tested = 0, ok = 0;
  double worst = 0.0;
  while (tested < 1000) {
    const double theta = 0.02 + (kPi - 0.04) * rng.next_double();
    const double lambda =
        std::vector<double>{0.0, 1e-3, 1e-2, 0.1, 0.3}[rng.next_u64() % 5];
    const double p_bar = (rng.next_u64() % 2 == 0) ? 1.0 : 0.9;
    const int layers = static_cast<int>(rng.next_u64() % 10);
    const NoiseModel noise{lambda, p_bar};
    const double amp = 2.0 * layers + 1.0;
    if (std::abs(std::sin(amp * theta)) < 1e-2) continue;  // near a node
    ++tested;
    // Fourth-order central differences of ln P, averaged into the score
    // variance; step scaled to the oscillation frequency.
    const double h = 1e-3 / amp;
    double fd = 0.0;
    for (int d = 0; d < 2; ++d) {
      auto lp = [&](double x) {
        return std::log(likelihood_noisy(d, x, noise, layers));
      };
      const double score =
          (8.0 * (lp(theta + h) - lp(theta - h)) -
           (lp(theta + 2.0 * h) - lp(theta - 2.0 * h))) /
          (12.0 * h);
      fd += likelihood_noisy(d, theta, noise, layers) * score * score;
    }
    const double analytic = fisher_information(theta, noise, layers);
    const double rel = std::abs(analytic - fd) / std::max(fd, 1e-300);
    worst = std::max(worst, rel);
    if (rel <= 1e-6) ++ok;
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%d/1000 grid points within 1e-6 relative (worst %.2e)", ok,
                worst);
  report(7, ok == 1000, detail);
}

// ---- 8: power-law fit recovery ----

void criterion_power_law() {
  std::vector<double> n, y;
  for (double v : {4.0, 8.0, 16.0, 32.0, 64.0}) {
    n.push_back(v);
    y.push_back(3.0 * v * v + 5.0);
  }
  const auto fit = fit_power_law(n, y);
  const bool recover = std::abs(fit.a - 3.0) < 3e-6 &&
                       std::abs(fit.b - 2.0) < 2e-6 &&
                       std::abs(fit.c - 5.0) < 5e-6;
  const auto two = fit_power_law({2.0, 4.0}, {8.0, 64.0});
  const bool pinned = two.c_pinned && two.c == 0.0 &&
                      std::abs(two.b - 3.0) < 1e-9 &&
                      std::abs(two.a - 1.0) < 1e-9;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "3N^2+5 recovered as a=%.8g b=%.8g c=%.8g; two-point fit "
                "pins c=0 with a=%.8g b=%.8g",
                fit.a, fit.b, fit.c, two.a, two.b);
  report(8, recover && pinned, detail);
}

// ---- 9: CLI determinism ----

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion_cli_determinism(const char* cli) {
  if (cli == nullptr) {
    report(9, false, "CLI binary path not supplied to the acceptance runner");
    return;
  }
  const std::string dir = "acceptance_cli_tmp";
  if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
    report(9, false, "could not prepare scratch directory " + dir);
    return;
  }
  {
    const auto h = synthesize_hamiltonian(8, 24, SynthesisSpec{}, 31);
    std::ofstream out(dir + "/h.txt");
    out << h.to_text();
    std::ofstream fit_in(dir + "/fit.csv");
    fit_in << "N,y\n4,53\n8,197\n16,773\n32,3077\n";
    std::ofstream cfg(dir + "/report.json");
    cfg << R"({"target_rmse": 1e-3, "connectivity": "a2a",
               "d_min": 3, "d_max": 15,
               "series": [{"label": "toy", "target_qubits": 8,
                 "synthetic": [{"num_qubits": 8, "num_terms": 24,
                   "law": "uniform", "p0": 1.0, "p1": 0.0, "seed": 9}]}]})";
  }
  const std::string q = std::string("\"") + cli + "\"";
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"simulate",
       " simulate --pi 0.3 --layer-fidelity 0.99 --trials 6 --steps 60"
       " --grid-nodes 501 --seed 7 --traces " + dir + "/traces_OUT.csv"},
      {"validate",
       " validate-model --pi-grid 0.3 --fidelity-grid 0.99 --trials 4"
       " --steps 300 --grid-nodes 1001 --seed 7"},
      {"allocate",
       " allocate --hamiltonian " + dir + "/h.txt --lambda 1e-3"},
      {"estimate",
       " estimate --hamiltonian " + dir + "/h.txt --distance 13"
       " --connectivity a2a --format json"},
      {"sweep",
       " sweep --hamiltonian " + dir + "/h.txt --d-min 3 --d-max 15"},
      {"fit", " fit --in " + dir + "/fit.csv --target 100"},
      {"report", " report --config " + dir + "/report.json"},
  };
  bool all_ok = true;
  std::string first_bad;
  for (const auto& [name, args] : commands) {
    bool same = true;
    std::string run1, run2;
    for (int run = 1; run <= 2 && same; ++run) {
      const std::string tag = name + "_" + std::to_string(run);
      std::string cmdline = args;
      // Route the auxiliary output (traces) per run as well.
      const auto pos = cmdline.find("_OUT");
      if (pos != std::string::npos) {
        cmdline.replace(pos, 4, "_" + std::to_string(run));
      }
      const std::string out = dir + "/" + tag + ".out";
      const int rc = std::system((q + cmdline + " --out " + out).c_str());
      if (rc != 0) {
        same = false;
        break;
      }
    }
    const auto a = slurp(dir + "/" + name + "_1.out");
    const auto b = slurp(dir + "/" + name + "_2.out");
    same = same && a.has_value() && b.has_value() && *a == *b;
    if (same && name == "simulate") {
      const auto ta = slurp(dir + "/traces_1.csv");
      const auto tb = slurp(dir + "/traces_2.csv");
      same = ta.has_value() && tb.has_value() && *ta == *tb;
    }
    if (!same) {
      all_ok = false;
      if (first_bad.empty()) first_bad = name;
    }
  }
  report(9, all_ok,
         all_ok ? "all 7 subcommands byte-identical across repeated runs"
                : "non-deterministic or failing subcommand: " + first_bad);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_runtime_model_validation();
  criterion_allocation_optimality();
  criterion_constraint_exactness();
  criterion_fault_tolerance();
  criterion_sweep_structure();
  criterion_runtime_advantage();
  criterion_fisher_information();
  criterion_power_law();
  criterion_cli_determinism(argc > 1 ? argv[1] : nullptr);
  std::printf("%s\n", g_failures == 0 ? "all criteria passed"
                                      : "some criteria failed");
  return g_failures;
}
