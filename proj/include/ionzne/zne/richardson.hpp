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

#include <vector>

namespace ionzne::zne {

struct ScaledPoint {
  double factor;    // noise scale factor c_i
  double estimate;  // Hartree
  double sem;       // Hartree
};

struct ExtrapolationProblem {
  std::vector<ScaledPoint> points;  // distinct positive factors, ascending
  int order = 1;                    // polynomial degree m
};

struct ExtrapolationResult {
  std::vector<ScaledPoint> used;  // the m+1 lowest-factor points
  std::vector<double> gammas;
  double estimate = 0.0;
  double sem = 0.0;
  int order = 0;
};

/// Weights of the degree-m interpolant through (c_i, E_i) evaluated at c = 0:
/// gamma_i = prod_{j != i} c_j / (c_j - c_i). They satisfy sum gamma_i = 1 and
/// sum gamma_i c_i^k = 0 for k = 1..m. Needs exactly m+1 distinct factors.
std::vector<double> richardson_gammas(const std::vector<double>& factors, int order);

/// Zero-noise estimate from the m+1 lowest-factor points. Not clamped to any variational bound.
ExtrapolationResult extrapolate(const ExtrapolationProblem& p);

/// sum gamma_i^2.
double variance_amplification(const std::vector<double>& gammas);

}  // namespace ionzne::zne
