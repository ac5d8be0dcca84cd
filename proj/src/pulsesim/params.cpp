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

#include "ionzne/pulsesim/params.hpp"

#include <cmath>
#include <numbers>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::pulsesim {

MsPulseParams MsPulseParams::discrete() { return {300.0, 39.8, -19.6, 80.2, 1.75, 0.0, MsSign::PlusXX}; }

MsPulseParams MsPulseParams::time_stretch_base() {
  return {200.0, 26.5, -34.5, 107.0, 1.75, 0.0, MsSign::PlusXX};
}

MsPulseParams MsPulseParams::stretched(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw ValidationError("stretch factor must be positive");
  MsPulseParams q = *this;
  q.duration_us *= c;
  q.gaussian_std_us *= c;
  q.detuning_khz *= c;
  return q;
}

void MsPulseParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(duration_us)) throw ValidationError("MS duration must be positive");
  if (!positive(gaussian_std_us)) throw ValidationError("MS gaussian std must be positive");
  if (!positive(peak_rabi_khz)) throw ValidationError("MS peak Rabi rate must be positive");
  if (!std::isfinite(detuning_khz) || detuning_khz == 0.0) {
    throw ValidationError("MS sideband detuning must be finite and non-zero");
  }
  if (!std::isfinite(phase)) throw ValidationError("MS phase must be finite");
}

double MsPulseParams::rabi_rad_per_us(double t_us) const {
  const double x = (t_us - duration_us / 2) / gaussian_std_us;
  return khz_to_rad_per_us(peak_rabi_khz) * std::exp(-0.5 * x * x);
}

SqPulseParams::SqPulseParams(double rotation, double axis)
    : rotation_(rotation), axis_(axis), duration_us_(rotation / std::numbers::pi * kPiTimeUs) {
  if (!(rotation > 0.0 && rotation <= 2 * std::numbers::pi)) {
    throw ValidationError("single-qubit rotation must lie in (0, 2pi]");
  }
  if (!std::isfinite(axis)) throw ValidationError("single-qubit axis must be finite");
}

double SqPulseParams::rabi_rad_per_us() const { return std::numbers::pi / kPiTimeUs; }

NoiseConfig NoiseConfig::none() { return {}; }

NoiseConfig NoiseConfig::full() { return {0.05, 500.0, 0.5, 600.0, 0.0}; }

NoiseConfig NoiseConfig::with_msdg_overrotation() {
  NoiseConfig n = full();
  n.ms_dagger_overrotation = std::numbers::pi / 20;
  return n;
}

bool NoiseConfig::is_noiseless() const { return *this == NoiseConfig{}; }

void NoiseConfig::validate(int fock_levels) const {
  auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!non_negative(amplitude_offset_frac) || !non_negative(motional_freq_error_hz) ||
      !non_negative(initial_nbar) || !non_negative(heating_rate) ||
      !non_negative(ms_dagger_overrotation)) {
    throw ValidationError("noise parameters must be finite and non-negative");
  }
  if (initial_nbar >= fock_levels - 2) {
    throw ValidationError("initial_nbar must be below the Fock truncation minus 2");
  }
}

}  // namespace ionzne::pulsesim
