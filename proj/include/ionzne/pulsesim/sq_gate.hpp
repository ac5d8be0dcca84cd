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

#include "ionzne/pulsesim/channel.hpp"
#include "ionzne/pulsesim/params.hpp"

namespace ionzne::pulsesim {

/// exp(-i theta/2 (cos(phi) X + sin(phi) Y)).
qcore::UnitaryMatrix ideal_sq_unitary(const SqPulseParams& p);

/// Resonant square pulse. The amplitude offset scales the Rabi rate for the whole pulse,
/// so the evolution is a rotation by theta (1 + offset) about the same axis.
QuantumChannel simulate_sq_channel(const SqPulseParams& p, const NoiseConfig& noise);

}  // namespace ionzne::pulsesim
