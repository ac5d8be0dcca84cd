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

#include <Eigen/Core>

#include "ionzne/pulsesim/channel.hpp"
#include "ionzne/pulsesim/params.hpp"

namespace ionzne::pulsesim {

inline constexpr int kDefaultFockLevels = 16;
/// Largest change in any coherence factor tolerated between N and N+4 Fock levels.
inline constexpr double kFockConvergenceTol = 1e-4;

/// Columns are the product eigenvectors of s(phi) (x) s(phi), s(phi) = cos(phi) X + sin(phi) Y,
/// ordered (+,+), (+,-), (-,+), (-,-).
ComplexMatrix ms_eigenbasis(double phase);

/// Ideal gate exp(-i pi/4 s s) for PlusXX and exp(+i pi/4 s s) for MinusXX.
qcore::UnitaryMatrix ideal_ms_unitary(const MsPulseParams& p);

/// Collective spin eigenvalue of each eigenbasis column for the given drive sign.
Eigen::Vector4d ms_spin_eigenvalues(MsSign sign);

/// Diagonal of the ideal gate in the ms_eigenbasis.
Eigen::Vector4cd ideal_ms_phases(MsSign sign);

/// Entanglement fidelity of a coherence-factor channel against a gate with eigenbasis phases u.
double coherence_factor_fidelity(const Eigen::Matrix4cd& f, const Eigen::Vector4cd& u);

/// The MS channel is diagonal in the ms_eigenbasis: rho_ab -> f_ab rho_ab.
/// Returns f after tracing out the mode. `p.detuning_khz` is used as given.
Eigen::Matrix4cd ms_coherence_factors(const MsPulseParams& p, const NoiseConfig& noise, double coupling_scale,
                                      int fock_levels);

/// Builds the superoperator of rho -> B (f o (B^dagger rho B)) B^dagger.
QuantumChannel channel_from_coherence_factors(const Eigen::Matrix4cd& f, double phase);

/// Channel for an explicit coupling scale. No calibration and no Fock convergence check.
QuantumChannel simulate_ms_channel_with_coupling(const MsPulseParams& p, const NoiseConfig& noise,
                                                 double coupling_scale, int fock_levels = kDefaultFockLevels);

/// Calibrated MS channel (calibration is cached per pulse), with the Fock convergence check
/// and the configured over-rotation of MinusXX gates.
QuantumChannel simulate_ms_channel(const MsPulseParams& p, const NoiseConfig& noise,
                                   int fock_levels = kDefaultFockLevels);

}  // namespace ionzne::pulsesim
