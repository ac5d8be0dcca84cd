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

#include "ionzne/pulsesim/sq_gate.hpp"

#include <cmath>

#include "ionzne/qcore/errors.hpp"
#include "ionzne/qcore/pauli.hpp"

namespace ionzne::pulsesim {

namespace {

ComplexMatrix rotation(double theta, double phi) {
  const ComplexMatrix g = std::cos(phi) * qcore::single_qubit_pauli(qcore::Pauli::X) +
                          std::sin(phi) * qcore::single_qubit_pauli(qcore::Pauli::Y);
  return qcore::pauli_rotation(g, theta);
}

}  // namespace

qcore::UnitaryMatrix ideal_sq_unitary(const SqPulseParams& p) {
  return qcore::UnitaryMatrix(rotation(p.rotation(), p.axis()));
}

QuantumChannel simulate_sq_channel(const SqPulseParams& p, const NoiseConfig& noise) {
  if (!(noise.amplitude_offset_frac >= 0.0) || !std::isfinite(noise.amplitude_offset_frac)) {
    throw ValidationError("amplitude offset must be finite and non-negative");
  }
  const double area = p.rabi_rad_per_us() * (1.0 + noise.amplitude_offset_frac) * p.duration_us();
  return QuantumChannel::unitary(rotation(area, p.axis()));
}

}  // namespace ionzne::pulsesim
