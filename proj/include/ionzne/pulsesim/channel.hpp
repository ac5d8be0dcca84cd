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

#include <iosfwd>

#include "ionzne/qcore/density_matrix.hpp"
#include "ionzne/qcore/linalg.hpp"

namespace ionzne::pulsesim {

using qcore::ComplexMatrix;

/// Linear map on d x d operators stored as a d^2 x d^2 superoperator.
///
/// Column-stacking convention: vec(rho)[i + d*j] = rho(i, j), so that
/// vec(A rho B) = (B^T (x) A) vec(rho) and a unitary U has superoperator conj(U) (x) U.
class QuantumChannel {
 public:
  explicit QuantumChannel(ComplexMatrix superop);

  static QuantumChannel identity(Eigen::Index dim);
  static QuantumChannel unitary(const ComplexMatrix& u);
  /// rho -> Tr(rho) I/d.
  static QuantumChannel depolarizing(Eigen::Index dim);

  Eigen::Index dim() const { return dim_; }
  const ComplexMatrix& superop() const { return superop_; }

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  qcore::DensityMatrix apply(const qcore::DensityMatrix& rho) const;
  /// `next` after `*this`.
  QuantumChannel then(const QuantumChannel& next) const;

  /// Choi matrix sum_ij |i><j| (x) Lambda(|i><j|), unnormalized.
  ComplexMatrix choi() const;
  double min_choi_eigenvalue() const;
  /// Largest |Tr(Lambda(|i><j|)) - delta_ij| over basis inputs.
  double trace_preservation_error() const;

  /// Single-qubit channel acting on `qubit` of a register of `num_qubits`.
  QuantumChannel embed(int qubit, int num_qubits) const;

  /// Plain-text dump: "dim d" then d^2 rows of "re im" pairs, row-major.
  void dump(std::ostream& os) const;

 private:
  Eigen::Index dim_;
  ComplexMatrix superop_;
};

/// Vectorization helpers matching the channel convention.
qcore::ComplexVector vectorize(const ComplexMatrix& m);
ComplexMatrix unvectorize(const qcore::ComplexVector& v, Eigen::Index dim);

/// Entanglement fidelity <Phi| (Lambda o U^dagger (x) id)(|Phi><Phi|) |Phi>, clamped to [0, 1].
double entanglement_fidelity(const QuantumChannel& ch, const qcore::UnitaryMatrix& ideal);

/// Frobenius distance between two superoperators.
double frobenius_distance(const QuantumChannel& a, const QuantumChannel& b);

}  // namespace ionzne::pulsesim
