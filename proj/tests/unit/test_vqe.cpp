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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "ionzne/qcore/errors.hpp"
#include "ionzne/vqe/optimizer.hpp"
#include "ionzne/vqe/strategy.hpp"

namespace ionzne::vqe {
namespace {

const std::string kHamiltonianPath = std::string(IONZNE_TEST_DATA_DIR) + "/hamiltonians/heh+_0.8A.txt";

qcore::Hamiltonian heh() { return qcore::load_hamiltonian(kHamiltonianPath).hamiltonian; }

TEST(Minimize1d, QuadraticBowl) {
  const auto r = minimize_1d([](double t) { return (t - 0.26) * (t - 0.26); }, 0.0);
  EXPECT_NEAR(r.theta, 0.26, 0.01);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.evaluations, max_evaluations_1d({}));
  EXPECT_EQ(static_cast<int>(r.trace.size()), r.evaluations);
}

TEST(Minimize1d, NoiselessEnergyMatchesDenseScan) {
  const auto h = heh();
  auto cache = pulsesim::GateChannelCache::ideal();
  auto energy = [&](double t) {
    return qcore::expectation(pulsesim::apply_circuit(qcore::build_uccsd_ansatz(t), cache), h);
  };
  double best_t = 0.0, best = INFINITY;
  for (int k = -15000; k <= 15000; ++k) {
    const double t = k * 1e-4;
    if (const double e = energy(t); e < best) best = e, best_t = t;
  }
  for (double theta0 : {-0.5, 0.0, 0.5}) {
    const auto r = minimize_1d(energy, theta0);
    EXPECT_NEAR(r.theta, best_t, 0.01) << theta0;
    EXPECT_NEAR(r.value, qcore::exact_ground_energy(h), 1e-4) << theta0;
  }
}

TEST(Minimize1d, EvaluationBoundFollowsOptions) {
  // 9 scan points, 2 interior points, 8 golden steps shrink 0.4 rad below 0.01 rad, 1 midpoint.
  const int golden = static_cast<int>(std::ceil(std::log(0.4 / 0.01) / std::log((1 + std::sqrt(5.0)) / 2)));
  EXPECT_EQ(golden, 8);
  EXPECT_EQ(max_evaluations_1d({}), 9 + 2 + golden + 1);
  Minimize1dOptions o;
  o.max_evaluations = 12;
  EXPECT_EQ(max_evaluations_1d(o), 12);
  int calls = 0;
  const auto r = minimize_1d(
      [&](double t) {
        ++calls;
        return std::sin(3 * t);
      },
      0.0, o);
  EXPECT_LE(calls, 12);
  EXPECT_EQ(calls, r.evaluations);
}

TEST(Minimize1d, BudgetExhaustionReturnsBestSoFar) {
  int calls = 0;
  const auto r = minimize_1d(
      [&](double t) {
        if (++calls > 5) throw BudgetExhausted("dry");
        return (t - 0.3) * (t - 0.3);
      },
      0.0);
  EXPECT_TRUE(r.budget_exhausted);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.evaluations, 5);
  EXPECT_NEAR(r.theta, 0.0, 1e-12);  // best of the coarse points -0.8 ... 0.0
}

TEST(NelderMead, FindsMinimumOfShiftedQuadratic) {
  const auto r = nelder_mead(
      [](const std::vector<double>& x) { return std::pow(x[0] - 1.0, 2) + 3 * std::pow(x[1] + 0.5, 2); },
      {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-2);
  EXPECT_NEAR(r.x[1], -0.5, 1e-2);
}

TEST(Budget, LedgerRefusesToOverdraw) {
  SampleLedger l(100);
  l.spend(60);
  EXPECT_THROW(l.spend(41), BudgetExhausted);
  EXPECT_EQ(l.spent(), 60);
  l.spend(40);
  EXPECT_EQ(l.remaining(), 0);
  EXPECT_THROW(l.spend(-1), ValidationError);
}

// Independent restatement of the split: half the budget (at most the capped final cost) is
// held back; the rest is divided over runs and the worst-case evaluation count.
TEST(Budget, ShotPlanArithmetic) {
  const Budget b;  // 28000, 1000, 2000, 0.5
  const std::size_t K = 4, M = 3;
  const long reserve = 14000;
  struct Want {
    Strategy s;
    long units;
    int runs;
  } wants[] = {{Strategy::OptimizeOverExtrapolated, K * M, 1},
               {Strategy::ExtrapolateOverOptimized, M, 4},
               {Strategy::OptimizeThenExtrapolate, M, 1},
               {Strategy::LowOrderThenHighOrder, 2 * M, 1}};
  for (const auto& w : wants) {
    const auto plan = plan_shots(w.s, K, M, b, {});
    EXPECT_EQ(plan.final_reserve, reserve);
    EXPECT_EQ(plan.runs, w.runs);
    EXPECT_EQ(plan.optimization_shots, std::min<long>(1000, (28000 - reserve) / w.runs / (w.units * 20)));
  }
  Budget big = b;
  big.total_samples = 10'000'000;
  EXPECT_EQ(plan_shots(Strategy::OptimizeThenExtrapolate, K, M, big, {}).optimization_shots, 1000);
  EXPECT_EQ(plan_shots(Strategy::OptimizeThenExtrapolate, K, M, big, {}).final_reserve, 24000);
  Budget tiny = b;
  tiny.total_samples = 200;
  EXPECT_THROW(plan_shots(Strategy::OptimizeOverExtrapolated, K, M, tiny, {}), BudgetExhausted);
  EXPECT_THROW(parse_strategy("e"), ValidationError);
  EXPECT_EQ(parse_strategy("d"), Strategy::LowOrderThenHighOrder);
}

class StrategyRuns : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    h_ = new qcore::Hamiltonian(heh());
    cache_ = new pulsesim::GateChannelCache(pulsesim::MsPulseParams::discrete(), pulsesim::NoiseConfig::full());
  }
  static void TearDownTestSuite() {
    delete h_;
    delete cache_;
  }
  static VqeResult run(Strategy s, std::uint64_t seed, long budget = 28000) {
    StrategyConfig cfg;
    cfg.strategy = s;
    cfg.seed = seed;
    cfg.budget.total_samples = budget;
    return run_strategy(cfg, *h_, *cache_);
  }
  static inline qcore::Hamiltonian* h_ = nullptr;
  static inline pulsesim::GateChannelCache* cache_ = nullptr;
};

TEST_F(StrategyRuns, LedgerMatchesMeasurementLog) {
  for (Strategy s : {Strategy::OptimizeOverExtrapolated, Strategy::ExtrapolateOverOptimized,
                     Strategy::OptimizeThenExtrapolate, Strategy::LowOrderThenHighOrder}) {
    const auto r = run(s, 3);
    long counted = 0;
    for (const auto& rec : r.log) counted += static_cast<long>(rec.shots) * 4;
    EXPECT_EQ(r.samples_spent, counted) << to_string(s);
    EXPECT_LE(r.samples_spent, 28000) << to_string(s);
    long final_records = 0;
    for (const auto& rec : r.log) final_records += rec.phase == Phase::Final;
    EXPECT_EQ(final_records, 4) << to_string(s);
    EXPECT_EQ(r.final.order, 3) << to_string(s);
    EXPECT_EQ(r.final_phase.fits.size(), 4u);
  }
}

TEST_F(StrategyRuns, OptimizeThenExtrapolateNeverFoldsDuringOptimization) {
  const auto r = run(Strategy::OptimizeThenExtrapolate, 1);
  for (const auto& rec : r.log) {
    if (rec.phase != Phase::Optimization) continue;
    EXPECT_EQ(rec.scale_index, 0);
    EXPECT_EQ(rec.two_qubit_gates, 2);
  }
  EXPECT_EQ(r.run_thetas.size(), 1u);
}

TEST_F(StrategyRuns, ExtrapolateOverOptimizedRunsOneOptimizationPerFactor) {
  const auto r = run(Strategy::ExtrapolateOverOptimized, 2);
  ASSERT_EQ(r.run_thetas.size(), 4u);
  std::set<int> runs;
  for (const auto& t : r.trace) runs.insert(t.run);
  EXPECT_EQ(runs, (std::set<int>{0, 1, 2, 3}));
  for (const auto& rec : r.log) {
    if (rec.phase == Phase::Optimization) {
      EXPECT_EQ(rec.scale_index, rec.run);
    }
  }
  for (std::size_t k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(r.final_phase.thetas[k], r.run_thetas[k]);
}

TEST_F(StrategyRuns, LowOrderStrategyOptimizesLinearFits) {
  const auto r = run(Strategy::LowOrderThenHighOrder, 4);
  std::set<int> indices;
  for (const auto& rec : r.log) {
    if (rec.phase == Phase::Optimization) indices.insert(rec.scale_index);
  }
  EXPECT_EQ(indices, (std::set<int>{0, 1}));
  // Each trace value is the two-point linear extrapolation of that evaluation's records.
  for (const auto& t : r.trace) {
    std::vector<double> e;
    for (const auto& rec : r.log) {
      if (rec.phase == Phase::Optimization && rec.evaluation == t.iteration) e.push_back(rec.energy.mean);
    }
    ASSERT_EQ(e.size(), 2u);
    EXPECT_NEAR(t.value, 2 * e[0] - e[1], 1e-12);
  }
  EXPECT_EQ(r.final.order, 3);
}

TEST_F(StrategyRuns, DeterministicForFixedSeed) {
  const auto a = run(Strategy::OptimizeOverExtrapolated, 9);
  const auto b = run(Strategy::OptimizeOverExtrapolated, 9);
  EXPECT_EQ(a.theta_star, b.theta_star);
  EXPECT_EQ(a.final.estimate, b.final.estimate);
  EXPECT_EQ(a.samples_spent, b.samples_spent);
  EXPECT_NE(run(Strategy::OptimizeOverExtrapolated, 10).final.estimate, a.final.estimate);
}

TEST_F(StrategyRuns, TooSmallBudgetIsReported) {
  EXPECT_THROW(run(Strategy::OptimizeThenExtrapolate, 0, 100), BudgetExhausted);
}

TEST(StrategyNoiseless, FinalEstimateWithinFiveSemOfExact) {
  const auto h = heh();
  auto cache = pulsesim::GateChannelCache::ideal();
  StrategyConfig cfg;
  cfg.budget.total_samples = 2'000'000;
  cfg.budget.extrapolation_shots = 20000;
  cfg.seed = 5;
  const auto r = run_strategy(cfg, h, cache);
  EXPECT_NEAR(r.final.estimate, qcore::exact_ground_energy(h), 5 * r.final.sem);
  for (const auto& f : r.final_phase.fits) EXPECT_NEAR(f.estimate, r.final_phase.fits[0].estimate, 5 * f.sem);
}

TEST(StrategyNoiseless, InfiniteShotModeReachesGroundEnergy) {
  const auto h = heh();
  auto cache = pulsesim::GateChannelCache::ideal();
  StrategyConfig cfg;
  cfg.infinite_shots = true;
  for (double theta0 : {-0.5, 0.0, 0.5}) {
    cfg.theta0 = theta0;
    const auto r = run_strategy(cfg, h, cache);
    EXPECT_NEAR(r.final.estimate, qcore::exact_ground_energy(h), 1e-4) << theta0;
    EXPECT_EQ(r.samples_spent, 0);
  }
}

}  // namespace
}  // namespace ionzne::vqe
