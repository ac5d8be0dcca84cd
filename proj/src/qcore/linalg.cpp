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

#include "ionzne/qcore/linalg.hpp"

#include <sstream>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::qcore {

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw ValidationError("Hermitian matrix must be square and non-empty");
  }
  const double dev = max_abs(m_ - m_.adjoint());
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian: max |M - M^dagger| = " << dev;
    throw NumericalError(os.str());
  }
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() == 0) {
    throw ValidationError("unitary matrix must be square and non-empty");
  }
  const auto n = u_.rows();
  const double dev = max_abs(u_.adjoint() * u_ - ComplexMatrix::Identity(n, n));
  if (dev > kUnitaryTol) {
    std::ostringstream os;
    os << "matrix is not unitary: max |U^dagger U - I| = " << dev;
    throw NumericalError(os.str());
  }
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix pauli_rotation(const ComplexMatrix& generator, double angle) {
  const auto n = generator.rows();
  return std::cos(angle / 2) * ComplexMatrix::Identity(n, n) -
         Complex(0.0, std::sin(angle / 2)) * generator;
}

}  // namespace ionzne::qcore
