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

#include "ionzne/qcore/density_matrix.hpp"

#include <sstream>

#include <Eigen/Eigenvalues>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::qcore {

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
    throw ValidationError("density matrix must be square and non-empty");
  }
  std::ostringstream os;
  if (const double h = max_abs(rho_ - rho_.adjoint()); h > 1e-10) {
    os << "density matrix not Hermitian (deviation " << h << ")";
    throw NumericalError(os.str());
  }
  if (const double t = std::abs(rho_.trace() - 1.0); t > 1e-9) {
    os << "density matrix trace deviates from 1 by " << t;
    throw NumericalError(os.str());
  }
  const ComplexMatrix herm = 0.5 * (rho_ + rho_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
  if (const double lo = es.eigenvalues()(0); lo < -1e-8) {
    os << "density matrix has negative eigenvalue " << lo;
    throw NumericalError(os.str());
  }
}

DensityMatrix DensityMatrix::basis_state(Eigen::Index dim, Eigen::Index b) {
  if (b < 0 || b >= dim) throw ValidationError("basis index out of range");
  ComplexMatrix rho = ComplexMatrix::Zero(dim, dim);
  rho(b, b) = 1.0;
  return DensityMatrix(std::move(rho));
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const ComplexVector n = psi / psi.norm();
  return DensityMatrix(n * n.adjoint());
}

double pauli_expectation(const DensityMatrix& rho, const PauliString& p) {
  const ComplexMatrix pm = pauli_matrix(p);
  if (pm.rows() != rho.dim()) {
    throw ValidationError("Pauli string " + p.label() + " does not match state dimension");
  }
  const Complex tr = (rho.matrix() * pm).trace();
  if (std::abs(tr.imag()) > 1e-9) {
    throw NumericalError("imaginary residue in Tr(rho P) for " + p.label());
  }
  return tr.real();
}

double expectation(const DensityMatrix& rho, const Hamiltonian& h) {
  if ((Eigen::Index{1} << h.num_qubits()) != rho.dim()) {
    throw ValidationError("Hamiltonian and state dimensions differ");
  }
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coefficient * pauli_expectation(rho, t.pauli);
  return e;
}

}  // namespace ionzne::qcore
