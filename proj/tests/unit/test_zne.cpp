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

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "ionzne/qcore/errors.hpp"
#include "ionzne/zne/richardson.hpp"

namespace ionzne::zne {
namespace {

// Constant term of the interpolating polynomial, from a Vandermonde solve.
double vandermonde_intercept(const std::vector<double>& c, const std::vector<double>& e) {
  const int n = static_cast<int>(c.size());
  Eigen::MatrixXd v(n, n);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) v(i, k) = std::pow(c[i], k);
    y(i) = e[i];
  }
  return v.fullPivLu().solve(y)(0);
}

std::vector<double> distinct_factors(std::mt19937_64& g, int n) {
  std::uniform_real_distribution<double> u(1.0, 9.0);
  for (;;) {
    std::vector<double> c(n);
    for (auto& x : c) x = u(g);
    std::sort(c.begin(), c.end());
    bool ok = true;
    for (int i = 1; i < n; ++i) ok = ok && c[i] - c[i - 1] > 0.4;
    if (ok) return c;
  }
}

TEST(Richardson, TwoAndThreePointFixtures) {
  const auto g2 = richardson_gammas({1.0, 2.0}, 1);
  EXPECT_EQ(g2, (std::vector<double>{2.0, -1.0}));
  const auto g3 = richardson_gammas({1.0, 3.0, 5.0}, 2);
  EXPECT_NEAR(g3[0], 15.0 / 8, 1e-15);
  EXPECT_NEAR(g3[1], -5.0 / 4, 1e-15);
  EXPECT_NEAR(g3[2], 3.0 / 8, 1e-15);
}

TEST(Richardson, RandomPolynomialsAgreeWithVandermondeSolve) {
  std::mt19937_64 g(77);
  std::uniform_real_distribution<double> coeff(-3.0, 3.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int m = 1 + trial % 4;
    const int degree = trial % (m + 1);
    const auto c = distinct_factors(g, m + 1);
    // Term k is scaled so that a_k c^k stays O(1) over the factor range, as for energy data.
    std::vector<double> a(degree + 1);
    for (int k = 0; k <= degree; ++k) a[k] = coeff(g) / std::pow(9.0, k);
    std::vector<ScaledPoint> pts;
    std::vector<double> e;
    for (double ci : c) {
      double v = 0.0;
      for (int k = degree; k >= 0; --k) v = v * ci + a[k];
      pts.push_back({ci, v, 0.01});
      e.push_back(v);
    }
    const auto r = extrapolate({pts, m});
    EXPECT_NEAR(r.estimate, a[0], 1e-9);
    EXPECT_NEAR(r.estimate, vandermonde_intercept(c, e), 1e-9);
    double sum = 0.0;
    for (double gi : r.gammas) sum += gi;
    EXPECT_NEAR(sum, 1.0, 1e-10);
    for (int k = 1; k <= m; ++k) {
      double moment = 0.0;
      for (int i = 0; i <= m; ++i) moment += r.gammas[i] * std::pow(c[i], k);
      EXPECT_NEAR(moment, 0.0, 1e-8 * std::pow(9.0, k));
    }
  }
}

TEST(Richardson, UsesTheLowestPointsAndPropagatesSem) {
  const std::vector<ScaledPoint> pts{{1, -2.8, 0.01}, {2, -2.7, 0.02}, {3, -2.65, 0.02}, {5, 0.0, 1.0}};
  const auto r = extrapolate({pts, 1});
  ASSERT_EQ(r.used.size(), 2u);
  EXPECT_NEAR(r.estimate, 2 * -2.8 + 2.7, 1e-15);
  EXPECT_NEAR(r.sem, std::sqrt(4 * 1e-4 + 4e-4), 1e-15);
  EXPECT_EQ(r.order, 1);
  const auto r0 = extrapolate({pts, 0});
  EXPECT_EQ(r0.estimate, -2.8);
  EXPECT_EQ(r0.sem, 0.01);
  EXPECT_NEAR(variance_amplification(richardson_gammas({1, 2, 3, 5}, 3)), 3.75 * 3.75 + 25 + 6.25 + 0.0625, 1e-12);
}

TEST(Richardson, NotClampedToAVariationalBound) {
  const auto r = extrapolate({{{1.0, -2.80, 0.0}, {2.0, -2.70, 0.0}}, 1});
  EXPECT_NEAR(r.estimate, -2.90, 1e-12);
}

TEST(Richardson, RejectsDegenerateProblems) {
  EXPECT_THROW(richardson_gammas({1.0, 1.0}, 1), ValidationError);
  EXPECT_THROW(richardson_gammas({1.0, 2.0}, 2), ValidationError);
  EXPECT_THROW(extrapolate({{{1.0, 0.0, 0.0}}, 1}), ValidationError);
  EXPECT_THROW(extrapolate({{{2.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}, 1}), ValidationError);
  EXPECT_THROW(extrapolate({{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}, 1}), ValidationError);
  EXPECT_THROW(extrapolate({{{1.0, 0.0, -1.0}, {2.0, 0.0, 0.0}}, 1}), ValidationError);
}

}  // namespace
}  // namespace ionzne::zne
