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

#include "ionzne/qcore/pauli.hpp"

#include <algorithm>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::qcore {

PauliString::PauliString(std::vector<Pauli> ops) : ops_(std::move(ops)) {
  if (ops_.empty()) throw ValidationError("Pauli string must act on at least one qubit");
}

PauliString PauliString::from_label(std::string_view label) {
  std::vector<Pauli> ops;
  ops.reserve(label.size());
  for (char c : label) {
    switch (c) {
      case 'I': ops.push_back(Pauli::I); break;
      case 'X': ops.push_back(Pauli::X); break;
      case 'Y': ops.push_back(Pauli::Y); break;
      case 'Z': ops.push_back(Pauli::Z); break;
      default:
        throw ValidationError("invalid Pauli label '" + std::string(label) + "'");
    }
  }
  return PauliString(std::move(ops));
}

PauliString PauliString::identity(std::size_t num_qubits) {
  return PauliString(std::vector<Pauli>(num_qubits, Pauli::I));
}

bool PauliString::is_identity() const {
  return std::all_of(ops_.begin(), ops_.end(), [](Pauli p) { return p == Pauli::I; });
}

std::string PauliString::label() const {
  std::string s;
  for (Pauli p : ops_) s.push_back(static_cast<char>(p));
  return s;
}

const ComplexMatrix& single_qubit_pauli(Pauli p) {
  static const ComplexMatrix kI = ComplexMatrix::Identity(2, 2);
  static const ComplexMatrix kX = (ComplexMatrix(2, 2) << 0, 1, 1, 0).finished();
  static const ComplexMatrix kY =
      (ComplexMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const ComplexMatrix kZ = (ComplexMatrix(2, 2) << 1, 0, 0, -1).finished();
  switch (p) {
    case Pauli::X: return kX;
    case Pauli::Y: return kY;
    case Pauli::Z: return kZ;
    case Pauli::I: break;
  }
  return kI;
}

ComplexMatrix pauli_matrix(const PauliString& p) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (Pauli op : p.ops()) out = kron(out, single_qubit_pauli(op));
  return out;
}

}  // namespace ionzne::qcore
