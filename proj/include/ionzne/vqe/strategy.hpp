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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ionzne/estimate/shots.hpp"
#include "ionzne/noisescale/fold.hpp"
#include "ionzne/pulsesim/circuit_sim.hpp"
#include "ionzne/qcore/hamiltonian.hpp"
#include "ionzne/vqe/optimizer.hpp"
#include "ionzne/zne/richardson.hpp"

namespace ionzne::vqe {

enum class Strategy {
  OptimizeOverExtrapolated,  // (a) the optimizer sees an extrapolated energy at every step
  ExtrapolateOverOptimized,  // (b) one optimization per scale factor, extrapolate the minima
  OptimizeThenExtrapolate,   // (c) optimize the unscaled circuit, extrapolate at the optimum
  LowOrderThenHighOrder,     // (d) optimize a linear extrapolation, finish at full order
};

std::string to_string(Strategy s);
/// Accepts to_string names and the single letters a-d.
Strategy parse_strategy(const std::string& name);

/// One sample is one projective measurement of one Hamiltonian term.
struct Budget {
  long total_samples = 28000;
  int per_measurement_shots = 1000;  // per term per evaluation during optimization (upper limit)
  int extrapolation_shots = 2000;    // per term per circuit in the final phase (upper limit)
  double final_fraction = 0.5;       // share of the budget set aside for the final phase (upper limit)

  void validate() const;
};

/// Counts samples; spend() throws BudgetExhausted instead of overdrawing.
class SampleLedger {
 public:
  explicit SampleLedger(long total);
  void spend(long n);
  long total() const { return total_; }
  long spent() const { return spent_; }
  long remaining() const { return total_ - spent_; }

 private:
  long total_;
  long spent_ = 0;
};

enum class Phase { Optimization = 0, Final = 1 };

struct MeasurementRecord {
  Phase phase;
  int run;          // index of the optimization (strategy b runs one per scale factor)
  int evaluation;   // objective call within that run, or 0 in the final phase
  int scale_index;
  double factor;
  double theta;
  int shots;        // per term; 0 in infinite-shot mode
  int two_qubit_gates;
  estimate::EnergyEstimate energy;
};

struct TraceEntry {
  int run;
  int iteration;
  double theta;
  double value;  // what the optimizer saw (extrapolated for strategies a and d)
};

struct StrategyConfig {
  Strategy strategy = Strategy::OptimizeThenExtrapolate;
  noisescale::ScaleSchedule schedule = noisescale::ScaleSchedule::folds(noisescale::FoldMethod::MsAfter, {0, 1, 2, 4});
  Budget budget;
  std::uint64_t seed = 0;
  double theta0 = 0.0;
  Minimize1dOptions optimizer;
  bool infinite_shots = false;
};

/// Measured points of the schedule and the fits of every order through its prefixes;
/// fits[k] has order k, so fits[0] is the unmitigated c_0 estimate.
struct PostOptResult {
  std::vector<double> thetas;
  std::vector<zne::ScaledPoint> points;
  std::vector<zne::ExtrapolationResult> fits;
};

struct VqeResult {
  Strategy strategy;
  double theta_star = 0.0;
  std::vector<double> run_thetas;  // one per optimization run
  int optimizer_iterations = 0;    // objective calls summed over runs
  bool optimizer_converged = false;
  bool budget_exhausted = false;   // an optimization ran dry and returned its best point
  int optimization_shots = 0;
  int final_shots = 0;
  PostOptResult final_phase;
  zne::ExtrapolationResult final;  // the strategy's reported zero-noise estimate
  long samples_spent = 0;
  std::vector<TraceEntry> trace;
  std::vector<MeasurementRecord> log;
};

/// Per-term shots for the optimization phase and the samples held back for the final phase.
struct ShotPlan {
  int optimization_shots;
  long final_reserve;
  int runs;
  int evaluation_cost_units;  // circuits x terms per objective call
};
ShotPlan plan_shots(Strategy s, std::size_t schedule_size, std::size_t num_terms, const Budget& b,
                    const Minimize1dOptions& opts);

/// Measures every schedule point at its own theta (a single theta is broadcast) and fits all orders.
/// Samples are charged to `ledger` when given; shots == nullopt is the exact infinite-shot limit.
PostOptResult post_opt_extrapolation(const std::vector<double>& thetas, const qcore::Hamiltonian& h,
                                     pulsesim::GateChannelCache& cache, const noisescale::ScaleSchedule& schedule,
                                     std::optional<int> shots, const estimate::StreamKey& stream,
                                     SampleLedger* ledger = nullptr, std::vector<MeasurementRecord>* log = nullptr);

/// Plain VQE on the unscaled ansatz without any extrapolation.
Minimize1dResult optimize_unmitigated(const qcore::Hamiltonian& h, pulsesim::GateChannelCache& cache, double theta0,
                                      const Minimize1dOptions& opts, std::optional<int> shots,
                                      const estimate::StreamKey& stream, SampleLedger* ledger = nullptr);

VqeResult run_strategy(const StrategyConfig& cfg, const qcore::Hamiltonian& h, pulsesim::GateChannelCache& cache);

}  // namespace ionzne::vqe
