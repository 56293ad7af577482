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
#include <string>
#include <string_view>
#include <vector>

namespace raekit {

/// A Pauli string stored as one character per qubit from {I, X, Y, Z}.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::string axes);

  std::size_t size() const { return axes_.size(); }
  bool is_identity() const;
  const std::string& str() const { return axes_; }

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::string axes_;
};

struct PauliTerm {
  double coefficient = 0.0;  // Hartree
  PauliString pauli;
};

/// A weighted sum of Pauli strings over a fixed number of qubits.
///
/// Construction merges duplicate strings by coefficient addition and drops
/// terms whose merged coefficient is exactly zero. At most one all-identity
/// term survives; it is kept but excluded from estimation cost math.
class PauliHamiltonian {
 public:
  PauliHamiltonian(std::vector<PauliTerm> terms, int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  double one_norm(bool include_identity = false) const;

  /// Coefficients of the non-identity terms, in stored order.
  std::vector<double> non_identity_coefficients() const;

  /// Canonical line-oriented text form: "<coefficient> <pauli>" per line.
  std::string to_text() const;

  std::string to_json() const;

 private:
  std::vector<PauliTerm> terms_;
  int num_qubits_ = 0;
};

/// Parses the line-oriented text format ("<coefficient> <pauli-string>" per
/// line, '#' comments and blank lines ignored) or, when the document starts
/// with '{', the JSON form {"num_qubits": n, "terms": [{"coeff","pauli"}]}.
///
/// Throws std::invalid_argument with a line number on malformed input.
PauliHamiltonian parse_hamiltonian(std::string_view source);

PauliHamiltonian load_hamiltonian(const std::string& path);

enum class CoefficientLaw {
  kUniform,       // uniform in [-c, c]
  kLogUniform,    // log-uniform magnitudes in [lo, hi], random signs
};

struct SynthesisSpec {
  CoefficientLaw law = CoefficientLaw::kUniform;
  double uniform_halfwidth = 1.0;
  double log_lo = 1e-3;
  double log_hi = 1.0;
};

/// Deterministically generates a Hamiltonian with `num_terms` distinct
/// non-identity Pauli strings on `num_qubits` qubits.
PauliHamiltonian synthesize_hamiltonian(int num_qubits, int num_terms,
                                        const SynthesisSpec& spec,
                                        std::uint64_t seed);

}  // namespace raekit
