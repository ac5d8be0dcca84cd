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
#include <vector>

#include "ionzne/qcore/linalg.hpp"

namespace ionzne::qcore {

enum class GateKind { X, RzVirtual, R, MS, MSInverse };

std::string to_string(GateKind k);

/// One gate of a circuit.
///
/// - X: pi rotation about x on one qubit, driven by a square pulse.
/// - RzVirtual(angle): exp(-i angle/2 Z), a frame update; always noiseless.
/// - R(angle, axis): exp(-i angle/2 (cos(axis) X + sin(axis) Y)).
/// - MS(axis): exp(-i pi/4 s(axis) (x) s(axis)) with s(axis) = cos(axis) X + sin(axis) Y.
/// - MSInverse(axis): the same pulse with a pi phase on the second ion, which
///   realizes exp(+i pi/4 s(axis) (x) s(axis)), the inverse of MS(axis).
///
/// `stretch` scales the duration of MS-family pulses (1.0 = nominal).
struct GateOp {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  double angle = 0.0;
  double axis = 0.0;
  double stretch = 1.0;

  static GateOp x(int q);
  static GateOp rz(double angle, int q);
  static GateOp r(double angle, double axis, int q);
  static GateOp ms(int q0, int q1, double axis = 0.0);
  static GateOp ms_inverse(int q0, int q1, double axis = 0.0);

  bool is_two_qubit() const { return kind == GateKind::MS || kind == GateKind::MSInverse; }
  bool operator==(const GateOp&) const = default;
};

class Circuit {
 public:
  explicit Circuit(int num_qubits, std::vector<GateOp> gates = {});

  int num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& gates() const { return gates_; }
  void append(const GateOp& g);
  int two_qubit_gate_count() const;

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  std::vector<GateOp> gates_;
};

/// Noiseless unitary of a single gate on its own targets (2x2 or 4x4).
ComplexMatrix gate_unitary(const GateOp& g);

/// Gate unitary embedded into the full 2^n register, qubit 0 leftmost.
ComplexMatrix embed_gate(const GateOp& g, int num_qubits);

/// Product of all gate unitaries, last gate leftmost.
ComplexMatrix circuit_unitary(const Circuit& c);

/// The single-parameter two-qubit UCCSD circuit:
/// X(q0), X(q1), MS(q0,q1), Rz(theta, q1), MSInverse(q0,q1).
Circuit build_uccsd_ansatz(double theta);

}  // namespace ionzne::qcore
