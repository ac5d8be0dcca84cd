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

#include "ionzne/vqe/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::vqe {

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1/golden ratio

struct OutOfEvaluations {};

}  // namespace

int max_evaluations_1d(const Minimize1dOptions& opts) {
  const double step = 2 * opts.bracket_half_width / std::max(1, opts.coarse_points - 1);
  const double width = 2 * step;
  const int golden = width > opts.theta_tol
                         ? static_cast<int>(std::ceil(std::log(width / opts.theta_tol) / std::log(1 / kInvPhi)))
                         : 0;
  return std::min(opts.max_evaluations, opts.coarse_points + 2 + golden + 1);
}

Minimize1dResult minimize_1d(const std::function<double(double)>& objective, double theta0,
                             const Minimize1dOptions& opts) {
  if (opts.coarse_points < 2 || !(opts.bracket_half_width > 0.0) || !(opts.theta_tol > 0.0) ||
      opts.max_evaluations < 1) {
    throw ValidationError("invalid 1-D optimizer options");
  }
  Minimize1dResult r;
  double best_theta = theta0;
  double best_value = INFINITY;
  auto eval = [&](double theta) {
    if (r.evaluations >= opts.max_evaluations) throw OutOfEvaluations{};
    const double v = objective(theta);
    ++r.evaluations;
    r.trace.push_back({theta, v});
    if (v < best_value) {
      best_value = v;
      best_theta = theta;
    }
    return v;
  };

  try {
    const double step = 2 * opts.bracket_half_width / (opts.coarse_points - 1);
    auto grid = [&](int k) { return theta0 - opts.bracket_half_width + k * step; };
    std::vector<double> coarse;
    for (int k = 0; k < opts.coarse_points; ++k) coarse.push_back(eval(grid(k)));
    const int kb = static_cast<int>(std::min_element(coarse.begin(), coarse.end()) - coarse.begin());

    // Bracket one grid step either side of the best scan point; edges beyond the scan are unknown.
    double a = grid(kb - 1);
    double b = grid(kb + 1);
    double fa = kb > 0 ? coarse[kb - 1] : INFINITY;
    double fb = kb + 1 < opts.coarse_points ? coarse[kb + 1] : INFINITY;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = eval(c);
    double fd = eval(d);
    while (true) {
      if (b - a < opts.theta_tol) {
        r.converged = true;
        break;
      }
      const double hi = std::max({fa, fb, fc, fd});
      const double lo = std::min({fa, fb, fc, fd});
      if (std::isfinite(hi) && hi - lo < opts.f_tol) {
        r.converged = true;
        break;
      }
      if (fc < fd) {
        b = d;
        fb = fd;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = eval(c);
      } else {
        a = c;
        fa = fc;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = eval(d);
      }
    }
    r.theta = 0.5 * (a + b);
    r.value = eval(r.theta);
  } catch (const OutOfEvaluations&) {
    r.theta = best_theta;
    r.value = best_value;
  } catch (const BudgetExhausted&) {
    r.budget_exhausted = true;
    r.theta = best_theta;
    r.value = best_value;
  }
  return r;
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0) throw ValidationError("Nelder-Mead needs at least one parameter");
  NelderMeadResult r;
  auto f = [&](const std::vector<double>& x) {
    ++r.evaluations;
    return objective(x);
  };
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto point = [n](const std::vector<double>& base, const std::vector<double>& dir, double t) {
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = base[k] + t * (dir[k] - base[k]);
    return p;
  };
  while (r.evaluations < opts.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return values[i] < values[j]; });
    const auto best = order.front(), worst = order.back(), second = order[n - 1];
    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(simplex[i][k] - simplex[best][k]));
    }
    if (size < opts.x_tol || values[worst] - values[best] < opts.f_tol) {
      r.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    const auto xr = point(centroid, simplex[worst], -1.0);
    const double fr = f(xr);
    if (fr < values[best]) {
      const auto xe = point(centroid, simplex[worst], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = xr;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const auto xc = point(centroid, outside ? xr : simplex[worst], 0.5);
      const double fc = f(xc);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = xc;
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          simplex[i] = point(simplex[best], simplex[i], 0.5);
          values[i] = f(simplex[i]);
        }
      }
    }
  }
  const auto best = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  r.x = simplex[best];
  r.value = values[best];
  return r;
}

}  // namespace ionzne::vqe
