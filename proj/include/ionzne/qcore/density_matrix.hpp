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

#include "ionzne/qcore/hamiltonian.hpp"
#include "ionzne/qcore/linalg.hpp"

namespace ionzne::qcore {

/// Physical state: Hermitian to 1e-10, unit trace to 1e-9, eigenvalues >= -1e-8.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix rho);

  /// |b><b| for computational-basis index b.
  static DensityMatrix basis_state(Eigen::Index dim, Eigen::Index b);
  static DensityMatrix maximally_mixed(Eigen::Index dim);
  static DensityMatrix pure(const ComplexVector& psi);

  Eigen::Index dim() const { return rho_.rows(); }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  ComplexMatrix rho_;
};

/// Tr(rho P) for each term, weighted and summed. Throws NumericalError when a
/// trace has imaginary residue above 1e-9.
double expectation(const DensityMatrix& rho, const Hamiltonian& h);

/// Real part of Tr(rho P), with the same imaginary-residue check.
double pauli_expectation(const DensityMatrix& rho, const PauliString& p);

}  // namespace ionzne::qcore
