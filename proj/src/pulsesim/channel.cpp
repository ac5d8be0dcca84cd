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

#include "ionzne/pulsesim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

#include <Eigen/Eigenvalues>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::pulsesim {

using qcore::Complex;
using qcore::ComplexVector;

namespace {

Eigen::Index root_dim(Eigen::Index n) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (d * d != n || d == 0) throw ValidationError("superoperator size is not a square dimension");
  return d;
}

}  // namespace

QuantumChannel::QuantumChannel(ComplexMatrix superop)
    : dim_(root_dim(superop.rows())), superop_(std::move(superop)) {
  if (superop_.rows() != superop_.cols()) throw ValidationError("superoperator must be square");
}

QuantumChannel QuantumChannel::identity(Eigen::Index dim) {
  return QuantumChannel(ComplexMatrix::Identity(dim * dim, dim * dim));
}

QuantumChannel QuantumChannel::unitary(const ComplexMatrix& u) {
  return QuantumChannel(qcore::kron(u.conjugate(), u));
}

QuantumChannel QuantumChannel::depolarizing(Eigen::Index dim) {
  const ComplexVector id = vectorize(ComplexMatrix::Identity(dim, dim));
  return QuantumChannel(id * id.adjoint() / static_cast<double>(dim));
}

ComplexVector vectorize(const ComplexMatrix& m) {
  return Eigen::Map<const ComplexVector>(m.data(), m.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index dim) {
  return Eigen::Map<const ComplexMatrix>(v.data(), dim, dim);
}

ComplexMatrix QuantumChannel::apply(const ComplexMatrix& rho) const {
  if (rho.rows() != dim_ || rho.cols() != dim_) {
    throw ValidationError("operator dimension does not match channel");
  }
  return unvectorize(superop_ * vectorize(rho), dim_);
}

qcore::DensityMatrix QuantumChannel::apply(const qcore::DensityMatrix& rho) const {
  ComplexMatrix out = apply(rho.matrix());
  // Strip round-off anti-Hermitian parts so the result re-validates cleanly.
  out = 0.5 * (out + out.adjoint()).eval();
  return qcore::DensityMatrix(std::move(out));
}

QuantumChannel QuantumChannel::then(const QuantumChannel& next) const {
  if (next.dim_ != dim_) throw ValidationError("cannot compose channels of different dimension");
  return QuantumChannel(next.superop_ * superop_);
}

ComplexMatrix QuantumChannel::choi() const {
  const Eigen::Index d = dim_;
  ComplexMatrix c = ComplexMatrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      // Column i + d*j of the superoperator is vec(Lambda(|i><j|)).
      const ComplexMatrix out = unvectorize(superop_.col(i + d * j), d);
      c.block(i * d, j * d, d, d) = out;
    }
  }
  return c;
}

double QuantumChannel::min_choi_eigenvalue() const {
  const ComplexMatrix c = choi();
  const ComplexMatrix h = 0.5 * (c + c.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double QuantumChannel::trace_preservation_error() const {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < dim_; ++i) {
    for (Eigen::Index j = 0; j < dim_; ++j) {
      const Complex tr = unvectorize(superop_.col(i + dim_ * j), dim_).trace();
      const Complex want = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(tr - want));
    }
  }
  return worst;
}

QuantumChannel QuantumChannel::embed(int qubit, int num_qubits) const {
  if (dim_ != 2) throw ValidationError("only single-qubit channels can be embedded");
  if (qubit < 0 || qubit >= num_qubits) throw ValidationError("embed target out of range");
  const Eigen::Index full = Eigen::Index{1} << num_qubits;
  const int bit = num_qubits - 1 - qubit;
  const Eigen::Index mask = Eigen::Index{1} << bit;
  ComplexMatrix s = ComplexMatrix::Zero(full * full, full * full);
  for (Eigen::Index r = 0; r < full; ++r) {
    for (Eigen::Index c = 0; c < full; ++c) {
      // Input |r><c| = |a><b| on the target times |rest_r><rest_c| elsewhere.
      const Eigen::Index a = (r >> bit) & 1;
      const Eigen::Index b = (c >> bit) & 1;
      const auto col_in = r + full * c;
      for (Eigen::Index a2 = 0; a2 < 2; ++a2) {
        for (Eigen::Index b2 = 0; b2 < 2; ++b2) {
          const Complex v = superop_(a2 + 2 * b2, a + 2 * b);
          if (v == Complex(0.0)) continue;
          const Eigen::Index r2 = (r & ~mask) | (a2 << bit);
          const Eigen::Index c2 = (c & ~mask) | (b2 << bit);
          s(r2 + full * c2, col_in) += v;
        }
      }
    }
  }
  return QuantumChannel(std::move(s));
}

void QuantumChannel::dump(std::ostream& os) const {
  os << "dim " << dim_ << "\n" << std::setprecision(17);
  for (Eigen::Index r = 0; r < superop_.rows(); ++r) {
    for (Eigen::Index c = 0; c < superop_.cols(); ++c) {
      if (c) os << ' ';
      os << superop_(r, c).real() << ' ' << superop_(r, c).imag();
    }
    os << '\n';
  }
}

double entanglement_fidelity(const QuantumChannel& ch, const qcore::UnitaryMatrix& ideal) {
  if (ideal.dim() != ch.dim()) throw ValidationError("ideal gate dimension does not match channel");
  const ComplexMatrix su = qcore::kron(ideal.matrix().conjugate(), ideal.matrix());
  const double d2 = static_cast<double>(ch.dim() * ch.dim());
  const double f = (su.adjoint() * ch.superop()).trace().real() / d2;
  return std::clamp(f, 0.0, 1.0);
}

double frobenius_distance(const QuantumChannel& a, const QuantumChannel& b) {
  if (a.dim() != b.dim()) throw ValidationError("channel dimensions differ");
  return (a.superop() - b.superop()).norm();
}

}  // namespace ionzne::pulsesim
