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

#include "ionzne/qcore/hamiltonian.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::qcore {

Hamiltonian::Hamiltonian(std::size_t num_qubits, std::vector<HamiltonianTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
  if (num_qubits_ == 0) throw ValidationError("Hamiltonian needs at least one qubit");
  std::set<PauliString> seen;
  for (const auto& t : terms_) {
    if (!std::isfinite(t.coefficient)) {
      throw ValidationError("non-finite coefficient for term " + t.pauli.label());
    }
    if (t.pauli.num_qubits() != num_qubits_) {
      throw ValidationError("term " + t.pauli.label() + " does not act on " +
                            std::to_string(num_qubits_) + " qubits");
    }
    if (!seen.insert(t.pauli).second) {
      throw ValidationError("duplicate Hamiltonian term " + t.pauli.label());
    }
  }
}

double Hamiltonian::identity_offset() const {
  for (const auto& t : terms_) {
    if (t.pauli.is_identity()) return t.coefficient;
  }
  return 0.0;
}

std::vector<HamiltonianTerm> Hamiltonian::non_identity_terms() const {
  std::vector<HamiltonianTerm> out;
  for (const auto& t : terms_) {
    if (!t.pauli.is_identity()) out.push_back(t);
  }
  return out;
}

ComplexMatrix Hamiltonian::matrix() const {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits_;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (const auto& t : terms_) m += t.coefficient * pauli_matrix(t.pauli);
  return m;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

LoadedHamiltonian parse_hamiltonian(std::istream& in, const std::string& origin) {
  HamiltonianFileInfo info;
  bool have_bond = false;
  std::vector<HamiltonianTerm> terms;
  std::size_t num_qubits = 0;
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw ValidationError(origin + ":" + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (const auto colon = line.find(':'); colon != std::string::npos) {
      const std::string key = trim(line.substr(0, colon));
      const std::string value = trim(line.substr(colon + 1));
      if (key == "molecule") {
        info.molecule = value;
      } else if (key == "bond_length_angstrom") {
        try {
          std::size_t used = 0;
          info.bond_length_angstrom = std::stod(value, &used);
          if (used != value.size()) fail("bond_length_angstrom is not a number");
        } catch (const std::logic_error&) {
          fail("bond_length_angstrom is not a number");
        }
        have_bond = true;
      } else if (key == "source") {
        info.source = value;
      } else {
        fail("unknown header field '" + key + "'");
      }
      continue;
    }
    std::istringstream fields(line);
    std::string label, coeff_text, extra;
    fields >> label >> coeff_text;
    if (coeff_text.empty()) fail("expected '<pauli label> <coefficient>'");
    if (fields >> extra) fail("unexpected trailing field '" + extra + "'");
    double coeff = 0.0;
    try {
      std::size_t used = 0;
      coeff = std::stod(coeff_text, &used);
      if (used != coeff_text.size()) fail("malformed coefficient '" + coeff_text + "'");
    } catch (const std::logic_error&) {
      fail("malformed coefficient '" + coeff_text + "'");
    }
    PauliString p;
    try {
      p = PauliString::from_label(label);
    } catch (const ValidationError& e) {
      fail(e.what());
    }
    if (num_qubits == 0) num_qubits = p.num_qubits();
    if (p.num_qubits() != num_qubits) fail("term " + label + " has inconsistent qubit count");
    for (const auto& t : terms) {
      if (t.pauli == p) fail("duplicate term " + label);
    }
    terms.push_back({coeff, std::move(p)});
  }
  line_no = 0;
  if (info.molecule.empty()) fail("missing header field 'molecule'");
  if (!have_bond) fail("missing header field 'bond_length_angstrom'");
  if (info.source.empty()) fail("missing header field 'source'");
  if (terms.empty()) fail("no Hamiltonian terms");
  return {std::move(info), Hamiltonian(num_qubits, std::move(terms))};
}

LoadedHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open Hamiltonian file " + path.string());
  return parse_hamiltonian(in, path.string());
}

double exact_ground_energy(const Hamiltonian& h) {
  if (h.num_qubits() > 10) {
    throw ValidationError("dense diagonalization limited to 10 qubits");
  }
  // The Hermitian wrapper rejects corrupted (non-Hermitian) assemblies.
  const HermitianMatrix m(h.matrix());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolve failed");
  return solver.eigenvalues()(0);
}

}  // namespace ionzne::qcore
