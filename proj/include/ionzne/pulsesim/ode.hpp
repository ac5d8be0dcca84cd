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

#include <functional>

#include "ionzne/qcore/linalg.hpp"

namespace ionzne::pulsesim {

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double initial_step = 0.0;  // 0 picks a step from the interval length
  long max_steps = 2'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
};

/// dy/dt = f(t, y) written into `dy`.
using MatrixRhs = std::function<void(double t, const qcore::ComplexMatrix& y, qcore::ComplexMatrix& dy)>;

/// Integrates from t0 to t1 with adaptive Dormand-Prince 5(4) steps.
/// Throws NumericalError when the step size underflows or max_steps is exceeded.
qcore::ComplexMatrix integrate_dopri5(const MatrixRhs& f, qcore::ComplexMatrix y0, double t0, double t1,
                                      const OdeOptions& opts = {}, OdeStats* stats = nullptr);

}  // namespace ionzne::pulsesim
