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

#include <compare>
#include <numbers>
#include <string>

namespace ionzne::pulsesim {

/// Which collective spin operator the bichromatic drive couples to the mode:
/// PlusXX drives s(phi) on both ions (the MS gate); MinusXX shifts the second
/// ion's phase by pi, which reverses the sign of the XX interaction (MS inverse).
enum class MsSign { PlusXX, MinusXX };

/// Gaussian-envelope Moelmer-Soerensen pulse.
/// Times in microseconds, detuning and Rabi rate in kHz (cycles, not radians).
struct MsPulseParams {
  double duration_us = 300.0;
  double gaussian_std_us = 39.8;
  double detuning_khz = -19.6;
  double peak_rabi_khz = 80.2;
  double motional_freq_mhz = 1.75;
  double phase = 0.0;
  MsSign sign = MsSign::PlusXX;

  /// Pulse used for gate-insertion noise scaling.
  static MsPulseParams discrete();
  /// Unstretched pulse of the time-stretch family.
  static MsPulseParams time_stretch_base();

  /// Duration, width and detuning multiplied by c; peak Rabi rate unchanged.
  MsPulseParams stretched(double c) const;

  void validate() const;
  /// Carrier Rabi rate at time t (rad/us), without amplitude errors.
  double rabi_rad_per_us(double t_us) const;

  auto operator<=>(const MsPulseParams&) const = default;
};

/// Square single-qubit pulse; duration (rotation/pi) * 22.8 us is fixed at construction.
class SqPulseParams {
 public:
  static constexpr double kPiTimeUs = 22.8;

  SqPulseParams(double rotation, double axis);

  double rotation() const { return rotation_; }
  double axis() const { return axis_; }
  double duration_us() const { return duration_us_; }
  /// Nominal Rabi rate in rad/us (pi / 22.8 us).
  double rabi_rad_per_us() const;

 private:
  double rotation_;
  double axis_;
  double duration_us_;
};

/// Control-error magnitudes injected into the pulse simulations.
struct NoiseConfig {
  double amplitude_offset_frac = 0.0;   // fraction of peak Rabi rate, added at all times
  double motional_freq_error_hz = 0.0;  // mode frequency above its calibrated value
  double initial_nbar = 0.0;            // thermal occupation at the start of every gate
  double heating_rate = 0.0;            // quanta per second
  double ms_dagger_overrotation = 0.0;  // extra rotation (rad) of the MS inverse

  static NoiseConfig none();
  /// 5% amplitude offset, 500 Hz mode error, nbar 0.5, 600 q/s heating.
  static NoiseConfig full();
  /// `full()` plus a pi/20 over-rotation of the MS inverse.
  static NoiseConfig with_msdg_overrotation();

  bool is_noiseless() const;
  void validate(int fock_levels) const;

  auto operator<=>(const NoiseConfig&) const = default;
};

/// kHz (cycles) to rad/us.
constexpr double khz_to_rad_per_us(double khz) { return 2.0 * std::numbers::pi * khz * 1e-3; }

}  // namespace ionzne::pulsesim
