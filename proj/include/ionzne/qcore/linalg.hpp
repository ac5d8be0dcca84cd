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

#include <complex>

#include <Eigen/Dense>

namespace ionzne::qcore {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

/// Largest absolute entry of a matrix; 0 for an empty matrix.
double max_abs(const ComplexMatrix& m);

/// Validated Hermitian matrix: ||M - M^dagger||_max <= 1e-12.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix m);
  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Validated unitary matrix: ||U^dagger U - I||_max <= 1e-10.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix u);
  const ComplexMatrix& matrix() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

 private:
  ComplexMatrix u_;
};

/// Kronecker product, `a` as the left (most significant) factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// exp(-i * angle/2 * G) for a generator G with G*G = I (Pauli products).
ComplexMatrix pauli_rotation(const ComplexMatrix& generator, double angle);

}  // namespace ionzne::qcore
