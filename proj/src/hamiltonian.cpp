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

#include "raekit/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "raekit/rng.hpp"

namespace raekit {

namespace {

bool valid_axis(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

PauliHamiltonian from_raw_terms(std::vector<PauliTerm> raw, int num_qubits) {
  return PauliHamiltonian(std::move(raw), num_qubits);
}

}  // namespace

PauliString::PauliString(std::string axes) : axes_(std::move(axes)) {
  if (axes_.empty()) {
    throw std::invalid_argument("Pauli string must have length >= 1");
  }
  for (char c : axes_) {
    if (!valid_axis(c)) {
      throw std::invalid_argument("invalid Pauli axis character '" +
                                  std::string(1, c) + "'");
    }
  }
}

bool PauliString::is_identity() const {
  return axes_.find_first_not_of('I') == std::string::npos;
}

PauliHamiltonian::PauliHamiltonian(std::vector<PauliTerm> terms, int num_qubits)
    : num_qubits_(num_qubits) {
  if (num_qubits <= 0) {
    throw std::invalid_argument("num_qubits must be positive");
  }
  // Merge duplicates in first-seen order; exact-zero merged coefficients drop.
  std::map<PauliString, std::size_t> index;
  for (auto& term : terms) {
    if (!std::isfinite(term.coefficient)) {
      throw std::invalid_argument("non-finite coefficient");
    }
    if (static_cast<int>(term.pauli.size()) != num_qubits) {
      throw std::invalid_argument("inconsistent Pauli string lengths");
    }
    auto [it, inserted] = index.try_emplace(term.pauli, terms_.size());
    if (inserted) {
      terms_.push_back(std::move(term));
    } else {
      terms_[it->second].coefficient += term.coefficient;
    }
  }
  std::erase_if(terms_, [](const PauliTerm& t) { return t.coefficient == 0.0; });
}

double PauliHamiltonian::one_norm(bool include_identity) const {
  double total = 0.0;
  for (const auto& term : terms_) {
    if (!include_identity && term.pauli.is_identity()) continue;
    total += std::abs(term.coefficient);
  }
  return total;
}

std::vector<double> PauliHamiltonian::non_identity_coefficients() const {
  std::vector<double> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) {
    if (!term.pauli.is_identity()) out.push_back(term.coefficient);
  }
  return out;
}

std::string PauliHamiltonian::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& term : terms_) {
    os << term.coefficient << ' ' << term.pauli.str() << '\n';
  }
  return os.str();
}

std::string PauliHamiltonian::to_json() const {
  nlohmann::json j;
  j["num_qubits"] = num_qubits_;
  j["terms"] = nlohmann::json::array();
  for (const auto& term : terms_) {
    j["terms"].push_back({{"coeff", term.coefficient},
                          {"pauli", term.pauli.str()}});
  }
  return j.dump(2);
}

namespace {

PauliHamiltonian parse_json_hamiltonian(std::string_view source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
  }
  if (!j.contains("num_qubits") || !j.contains("terms")) {
    throw std::invalid_argument(
        "JSON Hamiltonian requires fields 'num_qubits' and 'terms'");
  }
  const int nq = j.at("num_qubits").get<int>();
  std::vector<PauliTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back(
        {t.at("coeff").get<double>(), PauliString(t.at("pauli").get<std::string>())});
  }
  return from_raw_terms(std::move(terms), nq);
}

}  // namespace

PauliHamiltonian parse_hamiltonian(std::string_view source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && source[first] == '{') {
    return parse_json_hamiltonian(source);
  }

  std::vector<PauliTerm> terms;
  int num_qubits = -1;
  std::istringstream in{std::string(source)};
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double coeff;
    std::string pauli;
    if (!(fields >> coeff)) {
      // Blank or comment-only line.
      std::string leftover;
      if (fields.clear(), fields.str(line), (fields >> leftover)) {
        throw std::invalid_argument("line " + std::to_string(line_number) +
                                    ": malformed coefficient");
      }
      continue;
    }
    if (!std::isfinite(coeff)) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": non-finite coefficient");
    }
    std::string extra;
    if (!(fields >> pauli) || (fields >> extra)) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": expected '<coefficient> <pauli-string>'");
    }
    PauliString ps;
    try {
      ps = PauliString(pauli);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_number) + ": " +
                                  e.what());
    }
    if (num_qubits < 0) {
      num_qubits = static_cast<int>(ps.size());
    } else if (static_cast<int>(ps.size()) != num_qubits) {
      throw std::invalid_argument("line " + std::to_string(line_number) +
                                  ": inconsistent Pauli string lengths");
    }
    terms.push_back({coeff, std::move(ps)});
  }
  if (terms.empty()) {
    throw std::invalid_argument("document contains no Hamiltonian terms");
  }
  return from_raw_terms(std::move(terms), num_qubits);
}

PauliHamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open Hamiltonian file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hamiltonian(buffer.str());
}

PauliHamiltonian synthesize_hamiltonian(int num_qubits, int num_terms,
                                        const SynthesisSpec& spec,
                                        std::uint64_t seed) {
  if (num_qubits <= 0 || num_terms <= 0) {
    throw std::invalid_argument("num_qubits and num_terms must be positive");
  }
  const double capacity = std::pow(4.0, num_qubits) - 1.0;
  if (static_cast<double>(num_terms) > capacity) {
    throw std::invalid_argument("num_terms exceeds 4^num_qubits - 1 distinct "
                                "non-identity Pauli strings");
  }
  SplitMix64 rng(SplitMix64::mix(seed, 0x48414d));
  static constexpr char kAxes[] = "IXYZ";
  std::set<std::string> seen;
  std::vector<PauliTerm> terms;
  while (static_cast<int>(terms.size()) < num_terms) {
    std::string axes(num_qubits, 'I');
    for (auto& c : axes) c = kAxes[rng.next_u64() & 3];
    if (axes.find_first_not_of('I') == std::string::npos) continue;
    if (!seen.insert(axes).second) continue;
    double coeff;
    switch (spec.law) {
      case CoefficientLaw::kUniform:
        coeff = spec.uniform_halfwidth * (2.0 * rng.next_double() - 1.0);
        break;
      case CoefficientLaw::kLogUniform: {
        if (spec.log_lo <= 0.0 || spec.log_hi < spec.log_lo) {
          throw std::invalid_argument("log-uniform bounds require 0 < lo <= hi");
        }
        const double lo = std::log(spec.log_lo);
        const double hi = std::log(spec.log_hi);
        coeff = std::exp(lo + (hi - lo) * rng.next_double());
        if (rng.next_u64() & 1) coeff = -coeff;
        break;
      }
      default:
        throw std::invalid_argument("unknown coefficient law");
    }
    if (coeff == 0.0) continue;
    terms.push_back({coeff, PauliString(std::move(axes))});
  }
  return from_raw_terms(std::move(terms), num_qubits);
}

}  // namespace raekit
