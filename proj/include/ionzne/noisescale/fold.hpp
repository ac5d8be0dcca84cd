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

#include <string>
#include <vector>

#include "ionzne/pulsesim/params.hpp"
#include "ionzne/qcore/circuit.hpp"

namespace ionzne::noisescale {

enum class FoldMethod { TimeStretch, MsBefore, MsAfter, MsBeforeAndAfter, MsFour };

std::string to_string(FoldMethod m);
/// Accepts the names produced by to_string ("time_stretch", "ms_before", ...).
FoldMethod parse_fold_method(const std::string& name);

/// Two-qubit gates added per fold index (X): 2, 2, 4, 8. Throws for TimeStretch.
int gates_per_fold(FoldMethod m);

/// (X/2) i + 1. Throws for TimeStretch, whose factor is the continuous duration multiplier.
double scale_factor(FoldMethod m, int i);

/// Inserts identities into the two-MS ansatz shape (MS ... Rz ... MS inverse):
///   MsBefore          (MSdg MS)^i just before Rz
///   MsAfter           (MSdg MS)^i just after Rz
///   MsBeforeAndAfter  both of the above
///   MsFour            MS^(4i) after the first MS and MSdg^(4i) after the final MSdg
/// Inserted gates copy the axis and stretch of the circuit's own MS and MSdg.
qcore::Circuit fold_circuit(const qcore::Circuit& c, FoldMethod m, int i);

inline constexpr double kMinStretch = 0.1;
inline constexpr double kMaxStretch = 20.0;

/// Stretches duration, width and detuning by c, keeping the peak Rabi rate.
pulsesim::MsPulseParams stretch_pulse(const pulsesim::MsPulseParams& base, double c);

/// Returns `c` with every MS-family gate stretched by `factor`.
qcore::Circuit stretch_circuit(const qcore::Circuit& c, double factor);

/// A set of noise-scaled versions of one circuit, ordered by increasing scale factor.
class ScaleSchedule {
 public:
  /// Gate-insertion schedule over fold indices; indices must be strictly increasing and start at 0.
  static ScaleSchedule folds(FoldMethod m, std::vector<int> indices);
  /// Time-stretch schedule over duration multipliers in [0.1, 20], strictly increasing.
  static ScaleSchedule time_stretch(std::vector<double> factors);
  /// Default stretch grid 0.6, 0.8, ..., 1.6.
  static ScaleSchedule default_time_stretch();

  FoldMethod method() const { return method_; }
  const std::vector<int>& indices() const { return indices_; }
  const std::vector<double>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }

  /// The k-th scaled version of `base`.
  qcore::Circuit circuit_at(const qcore::Circuit& base, std::size_t k) const;
  /// Schedule restricted to its first n points.
  ScaleSchedule prefix(std::size_t n) const;

 private:
  ScaleSchedule(FoldMethod m, std::vector<int> indices, std::vector<double> factors);
  FoldMethod method_;
  std::vector<int> indices_;
  std::vector<double> factors_;
};

}  // namespace ionzne::noisescale
