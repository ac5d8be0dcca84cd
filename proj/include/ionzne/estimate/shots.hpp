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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ionzne/estimate/rng.hpp"
#include "ionzne/pulsesim/circuit_sim.hpp"
#include "ionzne/qcore/density_matrix.hpp"
#include "ionzne/qcore/hamiltonian.hpp"

namespace ionzne::estimate {

/// Draws `shots` eigenvalues (+1 or -1) of a non-identity Pauli string measured on rho.
std::vector<std::int8_t> sample_term(const qcore::DensityMatrix& rho, const qcore::PauliString& p, int shots,
                                     const StreamKey& stream);

/// M terms (rows) by s samples (columns), plus the Hamiltonian weights.
class ShotTable {
 public:
  ShotTable(std::vector<qcore::PauliString> terms, std::vector<double> coefficients, double identity_offset,
            std::vector<std::vector<std::int8_t>> samples);

  const std::vector<qcore::PauliString>& terms() const { return terms_; }
  const std::vector<double>& coefficients() const { return coefficients_; }
  double identity_offset() const { return identity_offset_; }
  const std::vector<std::vector<std::int8_t>>& samples() const { return samples_; }
  std::size_t num_terms() const { return terms_.size(); }
  std::size_t shots() const { return samples_.empty() ? 0 : samples_.front().size(); }

  /// One row per term: label, coefficient, then the samples, tab-separated.
  void write_tsv(std::ostream& os) const;

 private:
  std::vector<qcore::PauliString> terms_;
  std::vector<double> coefficients_;
  double identity_offset_;
  std::vector<std::vector<std::int8_t>> samples_;
};

struct EnergyEstimate {
  double mean = 0.0;  // Hartree
  double sem = 0.0;   // Hartree
  long shots_used = 0;
};

/// Column-wise estimator: one energy per shot index, then their mean and standard error.
/// A single column has no spread estimate and reports sem 0.
EnergyEstimate estimate_energy(const ShotTable& t);

struct RelativeError {
  double epsilon = 0.0;  // percent
  double sigma = 0.0;    // percent
};

/// epsilon = 100 |mean - theory| / |theory|; sigma is half the distance between the
/// same expression evaluated at mean + sem and at mean - sem.
RelativeError relative_error(const EnergyEstimate& measured, double theory);

/// Simulates `c` once and samples every non-identity term `shots_per_term` times, term j
/// drawing from stream.child(j). Without shots the exact expectation is returned with sem 0.
EnergyEstimate measure_circuit_energy(const qcore::Circuit& c, const qcore::Hamiltonian& h,
                                      pulsesim::GateChannelCache& cache, std::optional<int> shots_per_term,
                                      const StreamKey& stream, std::optional<ShotTable>* table_out = nullptr);

/// Same as above, sampling from a state that is already simulated.
EnergyEstimate measure_state_energy(const qcore::DensityMatrix& rho, const qcore::Hamiltonian& h,
                                    std::optional<int> shots_per_term, const StreamKey& stream,
                                    std::optional<ShotTable>* table_out = nullptr);

}  // namespace ionzne::estimate
