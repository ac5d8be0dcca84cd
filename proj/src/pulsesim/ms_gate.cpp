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

#include "ionzne/pulsesim/ms_gate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "ionzne/pulsesim/calibration.hpp"
#include "ionzne/pulsesim/ode.hpp"
#include "ionzne/qcore/errors.hpp"

namespace ionzne::pulsesim {

using qcore::Complex;
using qcore::ComplexVector;

namespace {

constexpr Complex kI{0.0, 1.0};

struct ModeOperators {
  ComplexMatrix a, ad, n, nn;  // a, a^dagger, a^dagger a, a a^dagger
  explicit ModeOperators(int levels) {
    a = ComplexMatrix::Zero(levels, levels);
    for (int k = 1; k < levels; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    ad = a.adjoint();
    n = ad * a;
    nn = a * ad;
  }
};

ComplexMatrix thermal_state(int levels, double nbar) {
  ComplexMatrix rho = ComplexMatrix::Zero(levels, levels);
  if (nbar == 0.0) {
    rho(0, 0) = 1.0;
    return rho;
  }
  const double q = nbar / (1.0 + nbar);
  double norm = 0.0;
  for (int k = 0; k < levels; ++k) norm += std::pow(q, k);
  for (int k = 0; k < levels; ++k) rho(k, k) = std::pow(q, k) / norm;
  return rho;
}

struct Drive {
  double coupling;     // kappa
  double omega0;       // peak Rabi, rad/us
  double offset;       // amplitude offset, rad/us
  double delta;        // effective detuning, rad/us
  const MsPulseParams* p;
  double g(double t) const { return coupling * (p->rabi_rad_per_us(t) + offset) / 2.0; }
};

Drive make_drive(const MsPulseParams& p, const NoiseConfig& noise, double coupling_scale) {
  const double omega0 = khz_to_rad_per_us(p.peak_rabi_khz);
  // A mode sitting above its calibrated frequency moves both sidebands up, so the
  // drive (below the blue sideband for negative detuning) ends up further from it.
  const double delta = khz_to_rad_per_us(p.detuning_khz) - 2.0 * std::numbers::pi * noise.motional_freq_error_hz * 1e-6;
  return {coupling_scale, omega0, noise.amplitude_offset_frac * omega0, delta, &p};
}

// Tr_mode of |a><b| (x) rho_m evolved with collective spin values (sa, sb).
Complex sector_factor_mixed(double sa, double sb, const Drive& d, const ModeOperators& m, const ComplexMatrix& rho0,
                            double heating_per_us, double duration) {
  const int levels = static_cast<int>(m.a.rows());
  ComplexMatrix f_rho(levels, levels), rho_f(levels, levels);
  auto rhs = [&](double t, const ComplexMatrix& r, ComplexMatrix& dr) {
    const Complex e = std::exp(kI * d.delta * t);
    const ComplexMatrix fop = m.ad * e + m.a * std::conj(e);
    f_rho.noalias() = fop * r;
    rho_f.noalias() = r * fop;
    dr = (-kI * d.g(t)) * (sa * f_rho - sb * rho_f);
    if (heating_per_us > 0.0) {
      dr.noalias() += heating_per_us * (m.a * r * m.ad + m.ad * r * m.a);
      dr.noalias() -= (0.5 * heating_per_us) * ((m.n + m.nn) * r + r * (m.n + m.nn));
    }
  };
  const ComplexMatrix out = integrate_dopri5(rhs, rho0, 0.0, duration);
  return out.trace();
}

// Pure motional ground state, no dissipation: evolve kets instead of operators.
ComplexVector evolve_ground_ket(double s, const Drive& d, const ModeOperators& m, double duration) {
  const int levels = static_cast<int>(m.a.rows());
  ComplexMatrix psi0 = ComplexMatrix::Zero(levels, 1);
  psi0(0, 0) = 1.0;
  if (s == 0.0) return psi0;
  auto rhs = [&](double t, const ComplexMatrix& psi, ComplexMatrix& dpsi) {
    const Complex e = std::exp(kI * d.delta * t);
    dpsi.noalias() = m.ad * psi * ((-kI * d.g(t) * s) * e);
    dpsi.noalias() += m.a * psi * ((-kI * d.g(t) * s) * std::conj(e));
  };
  return integrate_dopri5(rhs, psi0, 0.0, duration);
}

}  // namespace

ComplexMatrix ms_eigenbasis(double phase) {
  const Complex e = std::exp(kI * phase);
  const double r = 1.0 / std::sqrt(2.0);
  qcore::ComplexVector plus(2), minus(2);
  plus << r, r * e;
  minus << r, -r * e;
  const qcore::ComplexVector v[2] = {plus, minus};
  ComplexMatrix b(4, 4);
  for (int x1 = 0; x1 < 2; ++x1) {
    for (int x2 = 0; x2 < 2; ++x2) b.col(2 * x1 + x2) = qcore::kron(v[x1], v[x2]);
  }
  return b;
}

Eigen::Vector4d ms_spin_eigenvalues(MsSign sign) {
  const double x1[4] = {1, 1, -1, -1};
  const double x2[4] = {1, -1, 1, -1};
  Eigen::Vector4d s;
  for (int k = 0; k < 4; ++k) s(k) = x1[k] + (sign == MsSign::PlusXX ? 1.0 : -1.0) * x2[k];
  return s;
}

Eigen::Vector4cd ideal_ms_phases(MsSign sign) {
  const double parity[4] = {1, -1, -1, 1};
  const double angle = sign == MsSign::PlusXX ? std::numbers::pi / 2 : -std::numbers::pi / 2;
  Eigen::Vector4cd u;
  for (int k = 0; k < 4; ++k) u(k) = std::exp(-kI * (angle / 2) * parity[k]);
  return u;
}

qcore::UnitaryMatrix ideal_ms_unitary(const MsPulseParams& p) {
  const ComplexMatrix b = ms_eigenbasis(p.phase);
  const Eigen::Vector4cd u = ideal_ms_phases(p.sign);
  return qcore::UnitaryMatrix(b * u.asDiagonal() * b.adjoint());
}

double coherence_factor_fidelity(const Eigen::Matrix4cd& f, const Eigen::Vector4cd& u) {
  Complex acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) acc += f(a, b) * std::conj(u(a)) * u(b);
  }
  return std::clamp(acc.real() / 16.0, 0.0, 1.0);
}

Eigen::Matrix4cd ms_coherence_factors(const MsPulseParams& p, const NoiseConfig& noise, double coupling_scale,
                                      int fock_levels) {
  p.validate();
  noise.validate(fock_levels);
  if (fock_levels < 8) throw ValidationError("MS simulation needs at least 8 Fock levels");
  if (!(coupling_scale > 0.0) || !std::isfinite(coupling_scale)) {
    throw ValidationError("coupling scale must be positive");
  }
  const ModeOperators m(fock_levels);
  const Drive d = make_drive(p, noise, coupling_scale);
  const Eigen::Vector4d s = ms_spin_eigenvalues(p.sign);
  const double heating = noise.heating_rate * 1e-6;

  std::map<std::pair<double, double>, Complex> memo;
  std::map<double, ComplexVector> kets;
  const bool pure = heating == 0.0 && noise.initial_nbar == 0.0;
  const ComplexMatrix rho0 = thermal_state(fock_levels, noise.initial_nbar);

  auto factor = [&](double sa, double sb) -> Complex {
    if (sa == sb) return 1.0;
    if (auto it = memo.find({sa, sb}); it != memo.end()) return it->second;
    if (auto it = memo.find({sb, sa}); it != memo.end()) return std::conj(it->second);
    Complex v;
    if (pure) {
      for (double sv : {sa, sb}) {
        if (!kets.contains(sv)) kets.emplace(sv, evolve_ground_ket(sv, d, m, p.duration_us));
      }
      v = kets.at(sb).dot(kets.at(sa));  // <psi_b|psi_a>
    } else {
      v = sector_factor_mixed(sa, sb, d, m, rho0, heating, p.duration_us);
    }
    memo.emplace(std::pair{sa, sb}, v);
    return v;
  };

  Eigen::Matrix4cd f;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) f(a, b) = factor(s(a), s(b));
  }
  return f;
}

QuantumChannel channel_from_coherence_factors(const Eigen::Matrix4cd& f, double phase) {
  const ComplexMatrix b = ms_eigenbasis(phase);
  // In the eigenbasis the superoperator is diag(vec(f)); conjugate by the basis change.
  const ComplexMatrix fv = f;
  const ComplexVector diag = vectorize(fv);
  const ComplexMatrix w = qcore::kron(b.conjugate(), b);
  return QuantumChannel(w * diag.asDiagonal() * w.adjoint());
}

QuantumChannel simulate_ms_channel_with_coupling(const MsPulseParams& p, const NoiseConfig& noise,
                                                 double coupling_scale, int fock_levels) {
  return channel_from_coherence_factors(ms_coherence_factors(p, noise, coupling_scale, fock_levels), p.phase);
}

QuantumChannel simulate_ms_channel(const MsPulseParams& p, const NoiseConfig& noise, int fock_levels) {
  const CalibrationResult cal = calibrate_ms(p, fock_levels);
  MsPulseParams run = p;
  run.detuning_khz = cal.detuning_khz;
  Eigen::Matrix4cd f = ms_coherence_factors(run, noise, cal.coupling_scale, fock_levels);
  const Eigen::Matrix4cd wider = ms_coherence_factors(run, noise, cal.coupling_scale, fock_levels + 4);
  if (const double diff = (f - wider).cwiseAbs().maxCoeff(); diff > kFockConvergenceTol) {
    std::ostringstream os;
    os << "MS simulation not converged in Fock truncation " << fock_levels << " (change " << diff
       << " with 4 more levels)";
    throw NumericalError(os.str());
  }
  if (p.sign == MsSign::MinusXX && noise.ms_dagger_overrotation > 0.0) {
    // Extra exp(+i (ov/2) s s): the inverse turns further than -pi/2.
    const double parity[4] = {1, -1, -1, 1};
    Eigen::Vector4cd u;
    for (int k = 0; k < 4; ++k) u(k) = std::exp(kI * (noise.ms_dagger_overrotation / 2) * parity[k]);
    f = (u * u.adjoint()).cwiseProduct(f);
  }
  return channel_from_coherence_factors(f, p.phase);
}

}  // namespace ionzne::pulsesim
