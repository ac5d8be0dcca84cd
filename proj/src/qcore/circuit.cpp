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

#include "ionzne/qcore/circuit.hpp"

#include <cmath>
#include <numbers>

#include "ionzne/qcore/errors.hpp"
#include "ionzne/qcore/pauli.hpp"

namespace ionzne::qcore {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::X: return "X";
    case GateKind::RzVirtual: return "Rz";
    case GateKind::R: return "R";
    case GateKind::MS: return "MS";
    case GateKind::MSInverse: return "MSdg";
  }
  return "?";
}

GateOp GateOp::x(int q) { return {GateKind::X, {q}, std::numbers::pi, 0.0, 1.0}; }
GateOp GateOp::rz(double angle, int q) { return {GateKind::RzVirtual, {q}, angle, 0.0, 1.0}; }
GateOp GateOp::r(double angle, double axis, int q) { return {GateKind::R, {q}, angle, axis, 1.0}; }
GateOp GateOp::ms(int q0, int q1, double axis) {
  return {GateKind::MS, {q0, q1}, std::numbers::pi / 2, axis, 1.0};
}
GateOp GateOp::ms_inverse(int q0, int q1, double axis) {
  return {GateKind::MSInverse, {q0, q1}, -std::numbers::pi / 2, axis, 1.0};
}

namespace {

void validate_gate(const GateOp& g, int num_qubits) {
  const std::size_t want = g.is_two_qubit() ? 2 : 1;
  if (g.targets.size() != want) {
    throw ValidationError(to_string(g.kind) + " takes exactly " + std::to_string(want) +
                          " target(s)");
  }
  for (int t : g.targets) {
    if (t < 0 || t >= num_qubits) {
      throw ValidationError(to_string(g.kind) + " target " + std::to_string(t) +
                            " out of range for " + std::to_string(num_qubits) + " qubits");
    }
  }
  if (g.is_two_qubit() && g.targets[0] == g.targets[1]) {
    throw ValidationError(to_string(g.kind) + " needs two distinct targets");
  }
  if (!(g.stretch > 0.0) || !std::isfinite(g.stretch)) {
    throw ValidationError("gate stretch must be positive");
  }
  if (!std::isfinite(g.angle) || !std::isfinite(g.axis)) {
    throw ValidationError("gate angles must be finite");
  }
}

ComplexMatrix axis_pauli(double axis) {
  return std::cos(axis) * single_qubit_pauli(Pauli::X) +
         std::sin(axis) * single_qubit_pauli(Pauli::Y);
}

}  // namespace

Circuit::Circuit(int num_qubits, std::vector<GateOp> gates) : num_qubits_(num_qubits) {
  if (num_qubits_ <= 0) throw ValidationError("circuit needs at least one qubit");
  gates_.reserve(gates.size());
  for (auto& g : gates) append(g);
}

void Circuit::append(const GateOp& g) {
  validate_gate(g, num_qubits_);
  gates_.push_back(g);
}

int Circuit::two_qubit_gate_count() const {
  int n = 0;
  for (const auto& g : gates_) n += g.is_two_qubit() ? 1 : 0;
  return n;
}

ComplexMatrix gate_unitary(const GateOp& g) {
  switch (g.kind) {
    case GateKind::X:
      return single_qubit_pauli(Pauli::X);
    case GateKind::RzVirtual:
      return pauli_rotation(single_qubit_pauli(Pauli::Z), g.angle);
    case GateKind::R:
      return pauli_rotation(axis_pauli(g.axis), g.angle);
    case GateKind::MS:
    case GateKind::MSInverse: {
      const ComplexMatrix s = axis_pauli(g.axis);
      return pauli_rotation(kron(s, s), g.angle);
    }
  }
  throw ValidationError("unknown gate kind");
}

ComplexMatrix embed_gate(const GateOp& g, int num_qubits) {
  validate_gate(g, num_qubits);
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  const ComplexMatrix u = gate_unitary(g);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  const int k = static_cast<int>(g.targets.size());
  // Bit position of qubit q inside a basis index.
  auto bit = [num_qubits](int q) { return num_qubits - 1 - q; };
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index sub_in = 0;
    for (int j = 0; j < k; ++j) sub_in = (sub_in << 1) | ((col >> bit(g.targets[j])) & 1);
    Eigen::Index rest = col;
    for (int j = 0; j < k; ++j) rest &= ~(Eigen::Index{1} << bit(g.targets[j]));
    for (Eigen::Index sub_out = 0; sub_out < u.rows(); ++sub_out) {
      Eigen::Index row = rest;
      for (int j = 0; j < k; ++j) {
        const Eigen::Index b = (sub_out >> (k - 1 - j)) & 1;
        row |= b << bit(g.targets[j]);
      }
      out(row, col) += u(sub_out, sub_in);
    }
  }
  return out;
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.num_qubits();
  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : c.gates()) u = embed_gate(g, c.num_qubits()) * u;
  return u;
}

Circuit build_uccsd_ansatz(double theta) {
  if (!std::isfinite(theta)) throw ValidationError("ansatz angle must be finite");
  return Circuit(2, {GateOp::x(0), GateOp::x(1), GateOp::ms(0, 1), GateOp::rz(theta, 1),
                     GateOp::ms_inverse(0, 1)});
}

}  // namespace ionzne::qcore
