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

#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "ionzne/estimate/rng.hpp"
#include "ionzne/estimate/shots.hpp"
#include "ionzne/qcore/errors.hpp"

namespace ionzne::estimate {
namespace {

using qcore::PauliString;

const std::string kHamiltonianPath = std::string(IONZNE_TEST_DATA_DIR) + "/hamiltonians/heh+_0.8A.txt";

ShotTable random_table(std::mt19937_64& g, int terms, int shots) {
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::bernoulli_distribution bit(0.3);
  const char* labels[] = {"ZI", "IZ", "ZZ", "XX", "YY", "XY", "ZX", "XI"};
  std::vector<PauliString> t;
  std::vector<double> c;
  std::vector<std::vector<std::int8_t>> s(terms, std::vector<std::int8_t>(shots));
  for (int j = 0; j < terms; ++j) {
    t.push_back(PauliString::from_label(labels[j]));
    c.push_back(coeff(g));
    for (auto& v : s[j]) v = bit(g) ? -1 : 1;
  }
  return ShotTable(t, c, coeff(g), s);
}

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  const StreamKey a(7, {1, 2, 3});
  auto g1 = a.engine();
  auto g2 = StreamKey(7, {1, 2}).child(3).engine();
  for (int k = 0; k < 10; ++k) EXPECT_EQ(g1(), g2());
  EXPECT_NE(StreamKey(7, {1, 2, 3}).engine()(), StreamKey(7, {1, 2, 4}).engine()());
  EXPECT_NE(StreamKey(7, {1, 2, 3}).engine()(), StreamKey(8, {1, 2, 3}).engine()());
  // A trailing zero label is a different path, not a no-op.
  EXPECT_NE(StreamKey(7, {1}).engine()(), StreamKey(7, {1, 0}).engine()());
}

TEST(Rng, Uniform01StaysInUnitInterval) {
  auto g = StreamKey(3).engine();
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const double u = uniform01(g);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_GE(lo, 0.0);
  EXPECT_LT(hi, 1.0);
  EXPECT_NEAR(sum / n, 0.5, 5 * std::sqrt(1.0 / 12 / n));
}

// Column-wise mean against the row-wise (per-term average) estimator.
TEST(Estimator, ColumnWiseMeanEqualsRowWiseMean) {
  std::mt19937_64 g(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int terms = 1 + trial % 8;
    const int shots = 1 + (trial * 37) % 300;
    const ShotTable t = random_table(g, terms, shots);
    double row_wise = t.identity_offset();
    for (int j = 0; j < terms; ++j) {
      double m = 0.0;
      for (auto v : t.samples()[j]) m += v;
      row_wise += t.coefficients()[j] * m / shots;
    }
    const auto e = estimate_energy(t);
    EXPECT_NEAR(e.mean, row_wise, 1e-12);
    EXPECT_EQ(e.shots_used, shots);
  }
}

TEST(Estimator, SemIsStandardErrorOfColumnEnergies) {
  const ShotTable t({PauliString::from_label("Z")}, {2.0}, 1.0, {{1, -1, 1, 1}});
  // Column energies 3, -1, 3, 3: mean 2, sample sd 2, sem 1.
  const auto e = estimate_energy(t);
  EXPECT_DOUBLE_EQ(e.mean, 2.0);
  EXPECT_DOUBLE_EQ(e.sem, 1.0);
  const ShotTable one({PauliString::from_label("Z")}, {2.0}, 1.0, {{1}});
  EXPECT_EQ(estimate_energy(one).sem, 0.0);
}

TEST(Estimator, ShotTableValidation) {
  EXPECT_THROW(ShotTable({PauliString::from_label("Z")}, {1.0}, 0.0, {{1, 0}}), ValidationError);
  EXPECT_THROW(ShotTable({PauliString::from_label("Z"), PauliString::from_label("X")}, {1.0, 1.0}, 0.0,
                         {{1, 1}, {1}}),
               ValidationError);
  EXPECT_THROW(ShotTable({PauliString::from_label("Z")}, {1.0, 2.0}, 0.0, {{1}}), ValidationError);
}

TEST(Estimator, TsvHasOffsetThenOneRowPerTerm) {
  const ShotTable t({PauliString::from_label("ZZ"), PauliString::from_label("XX")}, {0.5, -0.25}, 1.0,
                    {{1, -1}, {-1, -1}});
  std::ostringstream os;
  t.write_tsv(os);
  EXPECT_EQ(os.str(), "# identity_offset\t1\nZZ\t0.5\t1\t-1\nXX\t-0.25\t-1\t-1\n");
}

TEST(Estimator, RelativeErrorDefinition) {
  const auto r = relative_error({-2.9, 0.05, 100}, -2.0);
  EXPECT_NEAR(r.epsilon, 45.0, 1e-12);
  EXPECT_NEAR(r.sigma, 2.5, 1e-12);
  EXPECT_THROW(relative_error({1.0, 0.0, 1}, 0.0), ValidationError);
}

TEST(Sampling, FrequenciesMatchBornProbabilities) {
  const auto h = qcore::load_hamiltonian(kHamiltonianPath).hamiltonian;
  auto cache = pulsesim::GateChannelCache::ideal();
  const auto rho = pulsesim::apply_circuit(qcore::build_uccsd_ansatz(0.7), cache);
  const int n = 200000;
  for (const char* label : {"ZI", "ZZ", "XX"}) {
    const auto p = PauliString::from_label(label);
    const auto s = sample_term(rho, p, n, StreamKey(1, {9}));
    double m = 0.0;
    for (auto v : s) m += v;
    EXPECT_NEAR(m / n, qcore::pauli_expectation(rho, p), 5.0 / std::sqrt(n)) << label;
  }
  EXPECT_THROW(sample_term(rho, PauliString::from_label("II"), 10, StreamKey(1)), ValidationError);
  EXPECT_THROW(sample_term(rho, PauliString::from_label("ZZ"), 0, StreamKey(1)), ValidationError);
}

TEST(Sampling, InfiniteShotsGiveExactEnergyAndFixedStreamsRepeat) {
  const auto h = qcore::load_hamiltonian(kHamiltonianPath).hamiltonian;
  auto cache = pulsesim::GateChannelCache::ideal();
  const auto c = qcore::build_uccsd_ansatz(0.2);
  const auto exact = measure_circuit_energy(c, h, cache, std::nullopt, StreamKey(0));
  EXPECT_NEAR(exact.mean, qcore::expectation(pulsesim::apply_circuit(c, cache), h), 1e-15);
  EXPECT_EQ(exact.sem, 0.0);
  std::optional<ShotTable> table;
  const auto a = measure_circuit_energy(c, h, cache, 500, StreamKey(4, {1}), &table);
  const auto b = measure_circuit_energy(c, h, cache, 500, StreamKey(4, {1}));
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.sem, b.sem);
  ASSERT_TRUE(table.has_value());
  EXPECT_EQ(table->num_terms(), 4u);
  EXPECT_EQ(table->shots(), 500u);
  EXPECT_EQ(estimate_energy(*table).mean, a.mean);
  EXPECT_NE(measure_circuit_energy(c, h, cache, 500, StreamKey(5, {1})).mean, a.mean);
}

TEST(Sampling, SemHalvesWhenShotsQuadruple) {
  const auto h = qcore::load_hamiltonian(kHamiltonianPath).hamiltonian;
  pulsesim::GateChannelCache cache(pulsesim::MsPulseParams::discrete(), pulsesim::NoiseConfig::full());
  const auto rho = pulsesim::apply_circuit(qcore::build_uccsd_ansatz(0.26), cache);
  for (int shots : {500, 2000, 8000}) {
    const double s1 = measure_state_energy(rho, h, shots, StreamKey(1, {2})).sem;
    const double s4 = measure_state_energy(rho, h, 4 * shots, StreamKey(1, {3})).sem;
    EXPECT_NEAR(s4 / s1, 0.5, 0.1) << shots;
  }
}

}  // namespace
}  // namespace ionzne::estimate
