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

#include "ionzne/pulsesim/params.hpp"

namespace ionzne::pulsesim {

/// Accepted calibrations reach at most this noiseless infidelity.
inline constexpr double kCalibrationThreshold = 1e-4;

struct CalibrationResult {
  double coupling_scale = 0.0;       // effective Lamb-Dicke factor multiplying Omega(t)/2
  double residual_infidelity = 1.0;  // noiseless infidelity against the ideal MS at the optimum
  double detuning_khz = 0.0;         // detuning the gate is run at (differs from the request if adjusted)
  bool detuning_adjusted = false;
};

struct CalibrationOptions {
  /// When coupling alone cannot close the phase-space loop, widen |detuning| until it can.
  bool allow_detuning_adjustment = true;
  double max_detuning_factor = 3.0;
};

/// Noiseless infidelity of the MS pulse at a given coupling scale, against ideal_ms_unitary.
double noiseless_ms_infidelity(const MsPulseParams& p, double coupling_scale, int fock_levels);

/// Adiabatic closed-loop estimate of the coupling scale, used to seed the search.
double coupling_scale_estimate(const MsPulseParams& p);

/// Scalar search over the coupling scale. Cached per (pulse shape, fock_levels, options);
/// phase and sign do not affect the result. Throws NumericalError when the threshold is not met.
CalibrationResult calibrate_ms(const MsPulseParams& p, int fock_levels = 16, const CalibrationOptions& opts = {});

/// Same search without the cache and without throwing on a missed threshold.
CalibrationResult search_coupling(const MsPulseParams& p, int fock_levels);

}  // namespace ionzne::pulsesim
