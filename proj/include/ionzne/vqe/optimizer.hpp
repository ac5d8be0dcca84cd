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
#include <vector>

namespace ionzne::vqe {

struct Minimize1dOptions {
  double theta_tol = 0.01;          // stop when the golden-section bracket is narrower (rad)
  double f_tol = 1e-4;              // stop when all four bracket values agree this closely (Hartree)
  double bracket_half_width = 0.8;  // coarse scan covers theta0 +- this
  int coarse_points = 9;
  int max_evaluations = 40;
};

struct Evaluation {
  double theta;
  double value;
};

struct Minimize1dResult {
  double theta = 0.0;       // midpoint of the final bracket
  double value = 0.0;       // objective re-evaluated at theta
  int evaluations = 0;
  bool converged = false;
  bool budget_exhausted = false;  // the objective threw BudgetExhausted; fields hold the best so far
  std::vector<Evaluation> trace;
};

/// Coarse scan followed by golden-section refinement around the best scan point, then one
/// re-evaluation at the final bracket midpoint. Derivative-free and tolerant of a noisy objective
/// in the sense that it never assumes a sufficient decrease.
Minimize1dResult minimize_1d(const std::function<double(double)>& objective, double theta0,
                             const Minimize1dOptions& opts = {});

/// Upper bound on the objective calls minimize_1d makes for these options.
int max_evaluations_1d(const Minimize1dOptions& opts);

struct NelderMeadOptions {
  double initial_step = 0.2;
  double x_tol = 1e-3;
  double f_tol = 1e-6;
  int max_evaluations = 400;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Standard Nelder-Mead simplex for multi-parameter objectives.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace ionzne::vqe
