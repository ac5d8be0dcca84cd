// Copyright 2026 The ionzne Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ionzne/qcore/linalg.hpp"
#include "ionzne/qcore/pauli.hpp"

namespace ionzne::qcore {

struct HamiltonianTerm {
  double coefficient = 0.0;  // Hartree
  PauliString pauli;
};

/// Real linear combination of Pauli strings on a fixed number of qubits.
/// At most one term per distinct string; coefficients must be finite.
class Hamiltonian {
 public:
  Hamiltonian(std::size_t num_qubits, std::vector<HamiltonianTerm> terms);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

  /// Coefficient of the all-identity term (0 if absent).
  double identity_offset() const;
  /// Terms other than the identity, in file order.
  std::vector<HamiltonianTerm> non_identity_terms() const;

  ComplexMatrix matrix() const;

 private:
  std::size_t num_qubits_;
  std::vector<HamiltonianTerm> terms_;
};

/// Header fields of a coefficient file.
struct HamiltonianFileInfo {
  std::string molecule;
  double bond_length_angstrom = 0.0;
  std::string source;
};

struct LoadedHamiltonian {
  HamiltonianFileInfo info;
  Hamiltonian hamiltonian;
};

/// Parses the coefficient file format:
///
///   # comment
///   molecule: HeH+
///   bond_length_angstrom: 0.8
///   source: free text
///   II  -1.8329767377665478
///   ZI   0.5558307315873772
///
/// Errors carry the offending line number.
LoadedHamiltonian parse_hamiltonian(std::istream& in, const std::string& origin = "<stream>");
LoadedHamiltonian load_hamiltonian(const std::filesystem::path& path);

/// Minimum eigenvalue of the dense Hamiltonian (num_qubits <= 10).
double exact_ground_energy(const Hamiltonian& h);

}  // namespace ionzne::qcore
