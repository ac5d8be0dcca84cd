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

#include "ionzne/estimate/shots.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::estimate {

using qcore::ComplexMatrix;

std::vector<std::int8_t> sample_term(const qcore::DensityMatrix& rho, const qcore::PauliString& p, int shots,
                                     const StreamKey& stream) {
  if (p.is_identity()) throw ValidationError("the identity term is not sampled");
  if (shots < 1) throw ValidationError("shots must be at least 1");
  const ComplexMatrix pm = qcore::pauli_matrix(p);
  if (pm.rows() != rho.dim()) throw ValidationError("Pauli string does not match state dimension");
  // Outcome probabilities from the projectors onto the +1 and -1 eigenspaces.
  const ComplexMatrix id = ComplexMatrix::Identity(pm.rows(), pm.cols());
  const double p_plus = (rho.matrix() * (id + pm)).trace().real() / 2.0;
  const double p_minus = (rho.matrix() * (id - pm)).trace().real() / 2.0;
  if (std::abs(p_plus + p_minus - 1.0) > 1e-8 || p_plus < -1e-8 || p_minus < -1e-8) {
    std::ostringstream os;
    os << "outcome probabilities for " << p.label() << " not normalized (" << p_plus << ", " << p_minus << ")";
    throw NumericalError(os.str());
  }
  const double threshold = std::clamp(p_plus, 0.0, 1.0);
  std::mt19937_64 g = stream.engine();
  std::vector<std::int8_t> out(static_cast<std::size_t>(shots));
  for (auto& v : out) v = uniform01(g) < threshold ? 1 : -1;
  return out;
}

ShotTable::ShotTable(std::vector<qcore::PauliString> terms, std::vector<double> coefficients, double identity_offset,
                     std::vector<std::vector<std::int8_t>> samples)
    : terms_(std::move(terms)),
      coefficients_(std::move(coefficients)),
      identity_offset_(identity_offset),
      samples_(std::move(samples)) {
  if (terms_.size() != coefficients_.size() || terms_.size() != samples_.size()) {
    throw ValidationError("shot table needs one coefficient and one sample row per term");
  }
  if (terms_.empty()) throw ValidationError("shot table has no terms");
  const std::size_t s = samples_.front().size();
  if (s == 0) throw ValidationError("shot table has no samples");
  for (const auto& row : samples_) {
    if (row.size() != s) throw ValidationError("shot table rows have different lengths");
    for (auto v : row) {
      if (v != 1 && v != -1) throw ValidationError("shot table entries must be +1 or -1");
    }
  }
}

void ShotTable::write_tsv(std::ostream& os) const {
  os << std::setprecision(17);
  os << "# identity_offset\t" << identity_offset_ << "\n";
  for (std::size_t j = 0; j < terms_.size(); ++j) {
    os << terms_[j].label() << '\t' << coefficients_[j];
    for (auto v : samples_[j]) os << '\t' << static_cast<int>(v);
    os << '\n';
  }
}

EnergyEstimate estimate_energy(const ShotTable& t) {
  const std::size_t s = t.shots();
  std::vector<double> column(s, t.identity_offset());
  for (std::size_t j = 0; j < t.num_terms(); ++j) {
    const double cj = t.coefficients()[j];
    const auto& row = t.samples()[j];
    for (std::size_t k = 0; k < s; ++k) column[k] += cj * row[k];
  }
  double mean = 0.0;
  for (double e : column) mean += e;
  mean /= static_cast<double>(s);
  double ss = 0.0;
  for (double e : column) ss += (e - mean) * (e - mean);
  const double sem = s > 1 ? std::sqrt(ss / static_cast<double>(s - 1)) / std::sqrt(static_cast<double>(s)) : 0.0;
  return {mean, sem, static_cast<long>(s)};
}

RelativeError relative_error(const EnergyEstimate& measured, double theory) {
  if (theory == 0.0 || !std::isfinite(theory)) throw ValidationError("reference energy must be finite and non-zero");
  auto eps = [&](double e) { return 100.0 * std::abs(e - theory) / std::abs(theory); };
  return {eps(measured.mean), std::abs(eps(measured.mean + measured.sem) - eps(measured.mean - measured.sem)) / 2.0};
}

EnergyEstimate measure_state_energy(const qcore::DensityMatrix& rho, const qcore::Hamiltonian& h,
                                    std::optional<int> shots_per_term, const StreamKey& stream,
                                    std::optional<ShotTable>* table_out) {
  if (!shots_per_term) return {qcore::expectation(rho, h), 0.0, 0};
  std::vector<qcore::PauliString> terms;
  std::vector<double> coefficients;
  std::vector<std::vector<std::int8_t>> samples;
  std::uint64_t j = 0;
  for (const auto& term : h.non_identity_terms()) {
    terms.push_back(term.pauli);
    coefficients.push_back(term.coefficient);
    samples.push_back(sample_term(rho, term.pauli, *shots_per_term, stream.child(j++)));
  }
  ShotTable table(std::move(terms), std::move(coefficients), h.identity_offset(), std::move(samples));
  const EnergyEstimate e = estimate_energy(table);
  if (table_out) *table_out = std::move(table);
  return e;
}

EnergyEstimate measure_circuit_energy(const qcore::Circuit& c, const qcore::Hamiltonian& h,
                                      pulsesim::GateChannelCache& cache, std::optional<int> shots_per_term,
                                      const StreamKey& stream, std::optional<ShotTable>* table_out) {
  if (shots_per_term && *shots_per_term < 1) throw ValidationError("shots per term must be at least 1");
  return measure_state_energy(pulsesim::apply_circuit(c, cache), h, shots_per_term, stream, table_out);
}

}  // namespace ionzne::estimate
