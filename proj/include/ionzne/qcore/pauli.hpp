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

#include <string>
#include <string_view>
#include <vector>

#include "ionzne/qcore/linalg.hpp"

namespace ionzne::qcore {

enum class Pauli : char { I = 'I', X = 'X', Y = 'Y', Z = 'Z' };

/// Tensor product of single-qubit Paulis. Qubit 0 is the leftmost factor,
/// i.e. the most significant bit of the computational-basis index.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> ops);

  /// Parses labels like "XZ"; throws ValidationError on other characters.
  static PauliString from_label(std::string_view label);
  static PauliString identity(std::size_t num_qubits);

  std::size_t num_qubits() const { return ops_.size(); }
  Pauli operator[](std::size_t q) const { return ops_[q]; }
  const std::vector<Pauli>& ops() const { return ops_; }
  bool is_identity() const;
  std::string label() const;

  auto operator<=>(const PauliString&) const = default;

 private:
  std::vector<Pauli> ops_;
};

const ComplexMatrix& single_qubit_pauli(Pauli p);

/// 2^n x 2^n matrix of the string, qubit 0 leftmost.
ComplexMatrix pauli_matrix(const PauliString& p);

}  // namespace ionzne::qcore
