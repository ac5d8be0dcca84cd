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

#include "ionzne/zne/richardson.hpp"

#include <cmath>
#include <string>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::zne {

std::vector<double> richardson_gammas(const std::vector<double>& factors, int order) {
  if (order < 0) throw ValidationError("extrapolation order must be non-negative");
  if (factors.size() != static_cast<std::size_t>(order) + 1) {
    throw ValidationError("order " + std::to_string(order) + " needs exactly " + std::to_string(order + 1) +
                          " scale factors");
  }
  std::vector<double> gammas(factors.size(), 1.0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!std::isfinite(factors[i])) throw ValidationError("scale factors must be finite");
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j == i) continue;
      if (factors[j] == factors[i]) throw ValidationError("scale factors must be distinct");
      gammas[i] *= factors[j] / (factors[j] - factors[i]);
    }
  }
  return gammas;
}

ExtrapolationResult extrapolate(const ExtrapolationProblem& p) {
  const auto need = static_cast<std::size_t>(p.order) + 1;
  if (p.order < 0) throw ValidationError("extrapolation order must be non-negative");
  if (p.points.size() < need) {
    throw ValidationError("order " + std::to_string(p.order) + " needs at least " + std::to_string(need) +
                          " points, got " + std::to_string(p.points.size()));
  }
  for (std::size_t k = 0; k < p.points.size(); ++k) {
    const auto& pt = p.points[k];
    if (!(pt.factor > 0.0) || !std::isfinite(pt.estimate) || !(pt.sem >= 0.0)) {
      throw ValidationError("extrapolation points need positive factors, finite estimates and sem >= 0");
    }
    if (k > 0 && !(pt.factor > p.points[k - 1].factor)) {
      throw ValidationError("extrapolation factors must be strictly ascending");
    }
  }
  ExtrapolationResult r;
  r.order = p.order;
  r.used.assign(p.points.begin(), p.points.begin() + static_cast<long>(need));
  std::vector<double> factors;
  for (const auto& pt : r.used) factors.push_back(pt.factor);
  r.gammas = richardson_gammas(factors, p.order);
  double var = 0.0;
  for (std::size_t i = 0; i < need; ++i) {
    r.estimate += r.gammas[i] * r.used[i].estimate;
    var += r.gammas[i] * r.gammas[i] * r.used[i].sem * r.used[i].sem;
  }
  r.sem = std::sqrt(var);
  return r;
}

double variance_amplification(const std::vector<double>& gammas) {
  double s = 0.0;
  for (double g : gammas) s += g * g;
  return s;
}

}  // namespace ionzne::zne
