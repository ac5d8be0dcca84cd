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
#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "ionzne/pulsesim/calibration.hpp"
#include "ionzne/pulsesim/channel.hpp"
#include "ionzne/pulsesim/circuit_sim.hpp"
#include "ionzne/pulsesim/ms_gate.hpp"
#include "ionzne/pulsesim/ode.hpp"
#include "ionzne/pulsesim/sq_gate.hpp"
#include "ionzne/qcore/errors.hpp"
#include "ionzne/qcore/pauli.hpp"

namespace ionzne::pulsesim {
namespace {

using qcore::Complex;
using qcore::ComplexVector;
using qcore::kron;
using qcore::max_abs;
constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

const ComplexMatrix& pauli(qcore::Pauli p) { return qcore::single_qubit_pauli(p); }

// Classic fixed-step RK4, independent of the adaptive integrator under test.
template <typename Rhs>
ComplexMatrix rk4(Rhs f, ComplexMatrix y, double t0, double t1, int steps) {
  const double h = (t1 - t0) / steps;
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + k * h;
    const ComplexMatrix k1 = f(t, y);
    const ComplexMatrix k2 = f(t + h / 2, y + (h / 2) * k1);
    const ComplexMatrix k3 = f(t + h / 2, y + (h / 2) * k2);
    const ComplexMatrix k4 = f(t + h, y + h * k3);
    y += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return y;
}

ComplexVector random_state(std::mt19937_64& g, int dim) {
  std::normal_distribution<double> n;
  ComplexVector v(dim);
  for (int k = 0; k < dim; ++k) v(k) = Complex(n(g), n(g));
  return v / v.norm();
}

TEST(Ode, RabiOscillationMatchesClosedForm) {
  const double w = 0.7;
  const ComplexMatrix x = pauli(qcore::Pauli::X);
  auto rhs = [&](double, const ComplexMatrix& y, ComplexMatrix& dy) { dy = (-kI * w / 2.0) * (x * y); };
  ComplexMatrix psi0 = ComplexMatrix::Zero(2, 1);
  psi0(0, 0) = 1.0;
  OdeStats stats;
  const double t = 13.0;
  const ComplexMatrix out = integrate_dopri5(rhs, psi0, 0.0, t, {}, &stats);
  EXPECT_NEAR(std::abs(out(0, 0) - std::cos(w * t / 2)), 0.0, 1e-7);
  EXPECT_NEAR(std::abs(out(1, 0) - (-kI * std::sin(w * t / 2))), 0.0, 1e-7);
  EXPECT_GT(stats.accepted, 0);
}

TEST(Ode, ExponentialDecayAndStepLimit) {
  auto rhs = [](double, const ComplexMatrix& y, ComplexMatrix& dy) { dy = -2.0 * y; };
  ComplexMatrix y0 = ComplexMatrix::Constant(1, 1, 1.0);
  EXPECT_NEAR(integrate_dopri5(rhs, y0, 0.0, 3.0)(0, 0).real(), std::exp(-6.0), 1e-9);
  OdeOptions tight;
  tight.max_steps = 3;
  EXPECT_THROW(integrate_dopri5(rhs, y0, 0.0, 3.0, tight), NumericalError);
}

TEST(Channel, UnitaryCompositionAndVectorization) {
  std::mt19937_64 g(5);
  const ComplexMatrix u = qcore::pauli_rotation(kron(pauli(qcore::Pauli::X), pauli(qcore::Pauli::Y)), 0.4);
  const ComplexMatrix v = qcore::pauli_rotation(kron(pauli(qcore::Pauli::Z), pauli(qcore::Pauli::I)), 1.1);
  const ComplexVector psi = random_state(g, 4);
  const ComplexMatrix rho = psi * psi.adjoint();
  const auto cu = QuantumChannel::unitary(u);
  const auto cv = QuantumChannel::unitary(v);
  EXPECT_LT(max_abs(cu.apply(rho) - u * rho * u.adjoint()), 1e-14);
  EXPECT_LT(max_abs(cu.then(cv).apply(rho) - v * u * rho * u.adjoint() * v.adjoint()), 1e-14);
  EXPECT_LT(max_abs(unvectorize(vectorize(rho), 4) - rho), 0.0 + 1e-300);
  EXPECT_NEAR(entanglement_fidelity(cu, qcore::UnitaryMatrix(u)), 1.0, 1e-14);
}

TEST(Channel, ChoiOfCanonicalChannels) {
  const auto id = QuantumChannel::identity(2);
  EXPECT_NEAR(id.min_choi_eigenvalue(), 0.0, 1e-14);
  EXPECT_LT(id.trace_preservation_error(), 1e-15);
  const auto dep = QuantumChannel::depolarizing(2);
  // The completely depolarizing Choi matrix is I/2 (unnormalized convention).
  EXPECT_NEAR(dep.min_choi_eigenvalue(), 0.5, 1e-14);
  EXPECT_NEAR(entanglement_fidelity(dep, qcore::UnitaryMatrix(ComplexMatrix::Identity(2, 2))), 0.25, 1e-14);
}

TEST(Channel, EmbedMatchesTensorProduct) {
  const ComplexMatrix r = qcore::pauli_rotation(pauli(qcore::Pauli::Y), 0.9);
  const auto on1 = QuantumChannel::unitary(r).embed(1, 2);
  const auto on0 = QuantumChannel::unitary(r).embed(0, 2);
  EXPECT_LT(frobenius_distance(on1, QuantumChannel::unitary(kron(ComplexMatrix::Identity(2, 2), r))), 1e-14);
  EXPECT_LT(frobenius_distance(on0, QuantumChannel::unitary(kron(r, ComplexMatrix::Identity(2, 2)))), 1e-14);
  EXPECT_THROW(QuantumChannel::identity(4).embed(0, 2), ValidationError);
}

TEST(Channel, DumpFormat) {
  std::ostringstream os;
  QuantumChannel::identity(2).dump(os);
  std::istringstream in(os.str());
  std::string word;
  int dim = 0;
  in >> word >> dim;
  EXPECT_EQ(word, "dim");
  EXPECT_EQ(dim, 2);
  double re, im, trace = 0.0;
  for (int k = 0; k < 16; ++k) {
    ASSERT_TRUE(in >> re >> im);
    if (k % 5 == 0) trace += re;
  }
  EXPECT_DOUBLE_EQ(trace, 4.0);
}

// Schroedinger oracle for the square single-qubit pulse with an amplitude offset.
TEST(SqGate, MatchesIntegratedSquarePulse) {
  NoiseConfig noise;
  noise.amplitude_offset_frac = 0.05;
  for (double rot : {kPi / 2, kPi, 0.3}) {
    for (double axis : {0.0, 1.2}) {
      const SqPulseParams p(rot, axis);
      const double rabi = kPi / 22.8 * 1.05;
      const ComplexMatrix h =
          (rabi / 2) * (std::cos(axis) * pauli(qcore::Pauli::X) + std::sin(axis) * pauli(qcore::Pauli::Y));
      auto f = [&](double, const ComplexMatrix& u) -> ComplexMatrix { return -kI * (h * u); };
      const ComplexMatrix u = rk4(f, ComplexMatrix::Identity(2, 2), 0.0, rot / kPi * 22.8, 4000);
      EXPECT_LT(frobenius_distance(simulate_sq_channel(p, noise), QuantumChannel::unitary(u)), 1e-9);
    }
  }
}

TEST(SqGate, OffsetFidelityIsCosineSquared) {
  for (double eps : {0.0, 0.05, 0.1}) {
    NoiseConfig n;
    n.amplitude_offset_frac = eps;
    for (double rot : {kPi / 2, kPi}) {
      const SqPulseParams p(rot, 0.4);
      const double f = entanglement_fidelity(simulate_sq_channel(p, n), ideal_sq_unitary(p));
      EXPECT_NEAR(f, std::pow(std::cos(rot * eps / 2), 2), 1e-12);
    }
  }
  EXPECT_THROW(SqPulseParams(0.0, 0.0), ValidationError);
  EXPECT_THROW(SqPulseParams(7.0, 0.0), ValidationError);
}

// Full spin (x) mode master equation in the computational basis, then a partial trace.
ComplexMatrix lindblad_oracle(const MsPulseParams& p, const NoiseConfig& n, double kappa, int levels,
                              const ComplexMatrix& rho_spin) {
  ComplexMatrix a = ComplexMatrix::Zero(levels, levels);
  for (int k = 1; k < levels; ++k) a(k - 1, k) = std::sqrt(double(k));
  const ComplexMatrix id4 = ComplexMatrix::Identity(4, 4);
  const ComplexMatrix idm = ComplexMatrix::Identity(levels, levels);
  const ComplexMatrix s = std::cos(p.phase) * pauli(qcore::Pauli::X) + std::sin(p.phase) * pauli(qcore::Pauli::Y);
  const double sign = p.sign == MsSign::PlusXX ? 1.0 : -1.0;
  const ComplexMatrix spin = kron(s, ComplexMatrix::Identity(2, 2)) + sign * kron(ComplexMatrix::Identity(2, 2), s);
  const ComplexMatrix big_a = kron(id4, a);
  const ComplexMatrix big_ad = big_a.adjoint();
  const ComplexMatrix spin_full = kron(spin, idm);

  ComplexMatrix thermal = ComplexMatrix::Zero(levels, levels);
  const double q = n.initial_nbar / (1 + n.initial_nbar);
  double z = 0;
  for (int k = 0; k < levels; ++k) z += std::pow(q, k);
  for (int k = 0; k < levels; ++k) thermal(k, k) = std::pow(q, k) / z;

  const double omega0 = 2 * kPi * p.peak_rabi_khz * 1e-3;
  const double delta = 2 * kPi * p.detuning_khz * 1e-3 - 2 * kPi * n.motional_freq_error_hz * 1e-6;
  const double gamma = n.heating_rate * 1e-6;
  auto dissipate = [&](const ComplexMatrix& l, const ComplexMatrix& r) -> ComplexMatrix {
    const ComplexMatrix ldl = l.adjoint() * l;
    return l * r * l.adjoint() - 0.5 * (ldl * r + r * ldl);
  };
  auto f = [&](double t, const ComplexMatrix& r) -> ComplexMatrix {
    const double x = (t - p.duration_us / 2) / p.gaussian_std_us;
    const double g = kappa * (omega0 * std::exp(-0.5 * x * x) + n.amplitude_offset_frac * omega0) / 2;
    const Complex e = std::exp(kI * delta * t);
    const ComplexMatrix h = g * spin_full * (big_ad * e + big_a * std::conj(e));
    ComplexMatrix d = -kI * (h * r - r * h);
    if (gamma > 0) d += gamma * (dissipate(big_a, r) + dissipate(big_ad, r));
    return d;
  };
  const ComplexMatrix out = rk4(f, kron(rho_spin, thermal), 0.0, p.duration_us, 2500);
  ComplexMatrix reduced = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) reduced(i, j) = out.block(i * levels, j * levels, levels, levels).trace();
  }
  return reduced;
}

struct OracleCase {
  MsSign sign;
  double phase;
  NoiseConfig noise;
};

TEST(MsGate, SectorSolutionMatchesFullMasterEquation) {
  MsPulseParams p;
  p.duration_us = 40.0;
  p.gaussian_std_us = 8.0;
  p.detuning_khz = -60.0;
  p.peak_rabi_khz = 100.0;
  const double kappa = 0.12;
  const int levels = 8;
  const OracleCase cases[] = {
      {MsSign::PlusXX, 0.0, {0.05, 2000.0, 0.4, 2e4, 0.0}},
      {MsSign::MinusXX, 0.7, {0.05, 2000.0, 0.0, 0.0, 0.0}},  // pure-ket path
      {MsSign::MinusXX, 2.1, {0.0, 0.0, 0.3, 0.0, 0.0}},
  };
  std::mt19937_64 g(11);
  for (const auto& c : cases) {
    p.sign = c.sign;
    p.phase = c.phase;
    const QuantumChannel ch = simulate_ms_channel_with_coupling(p, c.noise, kappa, levels);
    for (int trial = 0; trial < 2; ++trial) {
      const ComplexVector psi = random_state(g, 4);
      const ComplexMatrix rho = psi * psi.adjoint();
      const ComplexMatrix want = lindblad_oracle(p, c.noise, kappa, levels, rho);
      EXPECT_LT(max_abs(ch.apply(rho) - want), 2e-7) << "phase " << c.phase;
    }
  }
}

TEST(MsGate, NoisyChannelIsCompletelyPositiveAndTracePreserving) {
  const auto ch = simulate_ms_channel(MsPulseParams::discrete(), NoiseConfig::full());
  EXPECT_GT(ch.min_choi_eigenvalue(), -1e-8);
  EXPECT_LT(ch.trace_preservation_error(), 1e-8);
}

TEST(MsGate, CoherenceFactorFidelityAgreesWithSuperoperatorRoute) {
  const MsPulseParams p = MsPulseParams::discrete();
  const auto cal = calibrate_ms(p);
  MsPulseParams run = p;
  run.detuning_khz = cal.detuning_khz;
  const Eigen::Matrix4cd f = ms_coherence_factors(run, NoiseConfig::full(), cal.coupling_scale, 16);
  const double direct = coherence_factor_fidelity(f, ideal_ms_phases(p.sign));
  const double via_channel = entanglement_fidelity(channel_from_coherence_factors(f, p.phase), ideal_ms_unitary(p));
  EXPECT_NEAR(direct, via_channel, 1e-12);
}

TEST(MsGate, NoiselessCalibrationReachesTheIdealGate) {
  for (MsSign sign : {MsSign::PlusXX, MsSign::MinusXX}) {
    MsPulseParams p = MsPulseParams::discrete();
    p.sign = sign;
    p.phase = 0.3;
    const double f = entanglement_fidelity(simulate_ms_channel(p, NoiseConfig::none()), ideal_ms_unitary(p));
    EXPECT_GT(f, 1.0 - 1e-4);
  }
}

TEST(MsGate, OverRotationOfTheInverseLowersFidelityByCosineSquared) {
  NoiseConfig n;
  n.ms_dagger_overrotation = kPi / 20;
  MsPulseParams p = MsPulseParams::discrete();
  const double f_plus = entanglement_fidelity(simulate_ms_channel(p, n), ideal_ms_unitary(p));
  p.sign = MsSign::MinusXX;
  const double f_minus = entanglement_fidelity(simulate_ms_channel(p, n), ideal_ms_unitary(p));
  EXPECT_GT(f_plus, 1.0 - 1e-4);
  EXPECT_NEAR(f_minus, std::pow(std::cos(kPi / 40), 2), 1e-4);
}

TEST(MsGate, ThermalStateNearTruncationFailsConvergence) {
  NoiseConfig n;
  n.initial_nbar = 5.5;
  EXPECT_THROW(simulate_ms_channel(MsPulseParams::discrete(), n, 8), NumericalError);
  n.initial_nbar = 7.0;
  EXPECT_THROW(simulate_ms_channel(MsPulseParams::discrete(), n, 8), ValidationError);
}

TEST(MsGate, RejectsInvalidParameters) {
  MsPulseParams p = MsPulseParams::discrete();
  p.detuning_khz = 0.0;
  EXPECT_THROW(simulate_ms_channel(p, NoiseConfig::none()), ValidationError);
  NoiseConfig n;
  n.heating_rate = -1.0;
  EXPECT_THROW(simulate_ms_channel(MsPulseParams::discrete(), n), ValidationError);
  EXPECT_THROW(simulate_ms_channel(MsPulseParams::discrete(), NoiseConfig::none(), 6), ValidationError);
}

TEST(Calibration, SeedEstimateIsCloseAndSearchMeetsThreshold) {
  const MsPulseParams p = MsPulseParams::discrete();
  const auto cal = calibrate_ms(p);
  EXPECT_LE(cal.residual_infidelity, kCalibrationThreshold);
  EXPECT_FALSE(cal.detuning_adjusted);
  EXPECT_NEAR(cal.coupling_scale / coupling_scale_estimate(p), 1.0, 0.2);
  EXPECT_NEAR(noiseless_ms_infidelity(p, cal.coupling_scale, 16), cal.residual_infidelity, 1e-12);
}

TEST(Calibration, CompressedPulseNeedsWiderDetuning) {
  const MsPulseParams p = MsPulseParams::time_stretch_base().stretched(0.6);
  const auto cal = calibrate_ms(p);
  EXPECT_LE(cal.residual_infidelity, kCalibrationThreshold);
  EXPECT_TRUE(cal.detuning_adjusted);
  EXPECT_GT(std::abs(cal.detuning_khz), std::abs(p.detuning_khz));
  CalibrationOptions strict;
  strict.allow_detuning_adjustment = false;
  EXPECT_THROW(calibrate_ms(p, 16, strict), NumericalError);
}

TEST(CircuitSim, CacheSharesIdenticalGates) {
  GateChannelCache cache(MsPulseParams::discrete(), NoiseConfig::full());
  const auto a = cache.channel(qcore::GateOp::ms(0, 1));
  const auto b = cache.channel(qcore::GateOp::ms(1, 0));
  EXPECT_EQ(frobenius_distance(a, b), 0.0);
  EXPECT_EQ(cache.size(), 1u);
  (void)cache.channel(qcore::GateOp::rz(0.3, 1));
  EXPECT_EQ(cache.size(), 1u);
  qcore::GateOp stretched = qcore::GateOp::ms(0, 1);
  stretched.stretch = 1.2;
  (void)cache.channel(stretched);
  EXPECT_EQ(cache.size(), 2u);
}

TEST(CircuitSim, SingleQubitGatesUseSquarePulseChannels) {
  GateChannelCache cache(MsPulseParams::discrete(), NoiseConfig::full());
  const auto x = cache.channel(qcore::GateOp::x(0));
  const ComplexMatrix want = kron(pauli(qcore::Pauli::X), ComplexMatrix::Identity(2, 2));
  EXPECT_NEAR(entanglement_fidelity(x, qcore::UnitaryMatrix(want)), std::pow(std::cos(kPi * 0.05 / 2), 2), 1e-12);
  const auto neg = cache.channel(qcore::GateOp::r(-kPi / 2, 0.0, 1));
  const ComplexMatrix rneg = kron(ComplexMatrix::Identity(2, 2), qcore::gate_unitary(qcore::GateOp::r(-kPi / 2, 0.0, 0)));
  EXPECT_NEAR(entanglement_fidelity(neg, qcore::UnitaryMatrix(rneg)), std::pow(std::cos(kPi / 2 * 0.05 / 2), 2),
              1e-12);
}

TEST(CircuitSim, IdealCacheReproducesCircuitUnitary) {
  auto cache = GateChannelCache::ideal();
  const qcore::Circuit c = qcore::build_uccsd_ansatz(0.4);
  ComplexVector psi0 = ComplexVector::Zero(4);
  psi0(0) = 1.0;
  const ComplexVector psi = qcore::circuit_unitary(c) * psi0;
  EXPECT_LT(max_abs(apply_circuit(c, cache).matrix() - psi * psi.adjoint()), 1e-14);
}

TEST(CircuitSim, PulseForGateFollowsKindAxisAndStretch) {
  qcore::GateOp g = qcore::GateOp::ms_inverse(0, 1, 0.5);
  g.stretch = 2.0;
  const MsPulseParams p = ms_pulse_for(MsPulseParams::discrete(), g);
  EXPECT_EQ(p.sign, MsSign::MinusXX);
  EXPECT_DOUBLE_EQ(p.phase, 0.5);
  EXPECT_DOUBLE_EQ(p.duration_us, 600.0);
  EXPECT_DOUBLE_EQ(p.gaussian_std_us, 79.6);
  EXPECT_DOUBLE_EQ(p.detuning_khz, -39.2);
  EXPECT_DOUBLE_EQ(p.peak_rabi_khz, 80.2);
  EXPECT_THROW(ms_pulse_for(MsPulseParams::discrete(), qcore::GateOp::x(0)), ValidationError);
}

}  // namespace
}  // namespace ionzne::pulsesim
