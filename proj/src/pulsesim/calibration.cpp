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

#include "ionzne/pulsesim/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include <boost/math/tools/minima.hpp>

#include "ionzne/pulsesim/ms_gate.hpp"
#include "ionzne/qcore/errors.hpp"

namespace ionzne::pulsesim {

namespace {

MsPulseParams canonical(const MsPulseParams& p) {
  MsPulseParams q = p;
  q.phase = 0.0;
  q.sign = MsSign::PlusXX;
  return q;
}

using CacheKey = std::tuple<double, double, double, double, int, bool, double>;

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<CacheKey, CalibrationResult>& cache() {
  static std::map<CacheKey, CalibrationResult> c;
  return c;
}

}  // namespace

double noiseless_ms_infidelity(const MsPulseParams& p, double coupling_scale, int fock_levels) {
  const Eigen::Matrix4cd f = ms_coherence_factors(p, NoiseConfig::none(), coupling_scale, fock_levels);
  return 1.0 - coherence_factor_fidelity(f, ideal_ms_phases(p.sign));
}

double coupling_scale_estimate(const MsPulseParams& p) {
  // Adiabatic limit: the two-spin phase of a slow Gaussian force, set equal to the MS angle.
  const double delta = std::abs(khz_to_rad_per_us(p.detuning_khz));
  const double g0 = std::sqrt(std::sqrt(std::numbers::pi) * delta / (8.0 * p.gaussian_std_us));
  return 2.0 * g0 / khz_to_rad_per_us(p.peak_rabi_khz);
}

CalibrationResult search_coupling(const MsPulseParams& p, int fock_levels) {
  const MsPulseParams q = canonical(p);
  q.validate();
  auto infidelity = [&](double k) { return noiseless_ms_infidelity(q, k, fock_levels); };
  const double k0 = coupling_scale_estimate(q);
  constexpr int kCoarse = 41;
  const double lo = 0.5 * k0, hi = 1.5 * k0;
  double best_k = lo, best_v = 2.0;
  int best_i = 0;
  for (int i = 0; i < kCoarse; ++i) {
    const double k = lo + (hi - lo) * i / (kCoarse - 1);
    if (const double v = infidelity(k); v < best_v) {
      best_v = v;
      best_k = k;
      best_i = i;
    }
  }
  const double step = (hi - lo) / (kCoarse - 1);
  const double a = best_i == 0 ? lo : best_k - step;
  const double b = best_i == kCoarse - 1 ? hi : best_k + step;
  const auto [k, v] = boost::math::tools::brent_find_minima(infidelity, a, b, 40);
  CalibrationResult r;
  r.coupling_scale = v < best_v ? k : best_k;
  r.residual_infidelity = std::max(0.0, std::min(v, best_v));
  r.detuning_khz = p.detuning_khz;
  return r;
}

CalibrationResult calibrate_ms(const MsPulseParams& p, int fock_levels, const CalibrationOptions& opts) {
  const MsPulseParams q = canonical(p);
  const CacheKey key{q.duration_us,  q.gaussian_std_us,           q.detuning_khz,          q.peak_rabi_khz,
                     fock_levels,    opts.allow_detuning_adjustment, opts.max_detuning_factor};
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(key); it != cache().end()) return it->second;
  }

  CalibrationResult r = search_coupling(q, fock_levels);
  if (r.residual_infidelity > kCalibrationThreshold && opts.allow_detuning_adjustment) {
    // Scan |detuning| upward for the first factor that closes the loop, then bisect the edge.
    auto at = [&](double factor) {
      MsPulseParams s = q;
      s.detuning_khz = q.detuning_khz * factor;
      return search_coupling(s, fock_levels);
    };
    constexpr double kScanStep = 0.05;
    constexpr double kTarget = 0.5 * kCalibrationThreshold;
    double fail = 1.0;
    for (double m = 1.0 + kScanStep; m <= opts.max_detuning_factor + 1e-12; m += kScanStep) {
      CalibrationResult c = at(m);
      if (c.residual_infidelity <= kTarget) {
        double pass = m;
        CalibrationResult best = c;
        for (int it = 0; it < 20; ++it) {
          const double mid = 0.5 * (fail + pass);
          CalibrationResult cm = at(mid);
          if (cm.residual_infidelity <= kTarget) {
            pass = mid;
            best = cm;
          } else {
            fail = mid;
          }
        }
        r = best;
        r.detuning_adjusted = true;
        break;
      }
      fail = m;
    }
  }
  if (r.residual_infidelity > kCalibrationThreshold) {
    std::ostringstream os;
    os << "MS calibration failed for tau=" << q.duration_us << " us, z=" << q.gaussian_std_us
       << " us, delta=" << q.detuning_khz << " kHz: residual infidelity " << r.residual_infidelity;
    throw NumericalError(os.str());
  }
  std::lock_guard lock(cache_mutex());
  cache().emplace(key, r);
  return r;
}

}  // namespace ionzne::pulsesim
