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

#include "ionzne/vqe/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ionzne/qcore/circuit.hpp"
#include "ionzne/qcore/errors.hpp"

namespace ionzne::vqe {

using estimate::StreamKey;
using noisescale::ScaleSchedule;

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::OptimizeOverExtrapolated: return "optimize_over_extrapolated";
    case Strategy::ExtrapolateOverOptimized: return "extrapolate_over_optimized";
    case Strategy::OptimizeThenExtrapolate: return "optimize_then_extrapolate";
    case Strategy::LowOrderThenHighOrder: return "low_order_then_high_order";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  const Strategy all[] = {Strategy::OptimizeOverExtrapolated, Strategy::ExtrapolateOverOptimized,
                          Strategy::OptimizeThenExtrapolate, Strategy::LowOrderThenHighOrder};
  const char* letters[] = {"a", "b", "c", "d"};
  for (int k = 0; k < 4; ++k) {
    if (name == letters[k] || name == to_string(all[k])) return all[k];
  }
  throw ValidationError("unknown strategy '" + name + "'");
}

void Budget::validate() const {
  if (total_samples < 1) throw ValidationError("budget total_samples must be positive");
  if (per_measurement_shots < 1 || extrapolation_shots < 1) {
    throw ValidationError("budget shot counts must be positive");
  }
  if (!(final_fraction > 0.0 && final_fraction < 1.0)) {
    throw ValidationError("budget final_fraction must lie in (0, 1)");
  }
}

SampleLedger::SampleLedger(long total) : total_(total) {
  if (total < 0) throw ValidationError("sample ledger total must be non-negative");
}

void SampleLedger::spend(long n) {
  if (n < 0) throw ValidationError("cannot spend a negative sample count");
  if (n > remaining()) {
    std::ostringstream os;
    os << "sampling budget exhausted: need " << n << ", " << remaining() << " of " << total_ << " left";
    throw BudgetExhausted(os.str());
  }
  spent_ += n;
}

namespace {

constexpr std::uint64_t kPhaseOptimization = 1;
constexpr std::uint64_t kPhaseFinal = 2;

std::size_t evaluated_points(Strategy s, std::size_t schedule_size) {
  switch (s) {
    case Strategy::OptimizeOverExtrapolated: return schedule_size;
    case Strategy::LowOrderThenHighOrder: return std::min<std::size_t>(2, schedule_size);
    case Strategy::ExtrapolateOverOptimized:
    case Strategy::OptimizeThenExtrapolate: return 1;
  }
  return 1;
}

struct Measurer {
  const qcore::Hamiltonian& h;
  pulsesim::GateChannelCache& cache;
  const ScaleSchedule& schedule;
  std::optional<int> shots;
  SampleLedger* ledger;
  std::vector<MeasurementRecord>* log;

  zne::ScaledPoint measure(Phase phase, int run, int evaluation, std::size_t k, double theta,
                           const StreamKey& key) const {
    const qcore::Circuit c = schedule.circuit_at(qcore::build_uccsd_ansatz(theta), k);
    if (shots && ledger) ledger->spend(static_cast<long>(*shots) * static_cast<long>(h.non_identity_terms().size()));
    const auto e = estimate::measure_circuit_energy(c, h, cache, shots, key.child(k));
    if (log) {
      log->push_back({phase, run, evaluation, static_cast<int>(k), schedule.factors()[k], theta, shots.value_or(0),
                      c.two_qubit_gate_count(), e});
    }
    return {schedule.factors()[k], e.mean, e.sem};
  }
};

std::vector<zne::ExtrapolationResult> all_fits(const std::vector<zne::ScaledPoint>& points) {
  std::vector<zne::ExtrapolationResult> fits;
  for (std::size_t m = 0; m < points.size(); ++m) fits.push_back(zne::extrapolate({points, static_cast<int>(m)}));
  return fits;
}

}  // namespace

ShotPlan plan_shots(Strategy s, std::size_t schedule_size, std::size_t num_terms, const Budget& b,
                    const Minimize1dOptions& opts) {
  b.validate();
  if (schedule_size == 0 || num_terms == 0) throw ValidationError("empty schedule or Hamiltonian");
  const long final_cost_per_shot = static_cast<long>(schedule_size * num_terms);
  ShotPlan plan{};
  plan.final_reserve = std::min(static_cast<long>(std::floor(b.final_fraction * b.total_samples)),
                                final_cost_per_shot * b.extrapolation_shots);
  plan.runs = s == Strategy::ExtrapolateOverOptimized ? static_cast<int>(schedule_size) : 1;
  plan.evaluation_cost_units = static_cast<int>(evaluated_points(s, schedule_size) * num_terms);
  const long pool = (b.total_samples - plan.final_reserve) / plan.runs;
  const long per_shot = static_cast<long>(plan.evaluation_cost_units) * max_evaluations_1d(opts);
  plan.optimization_shots = static_cast<int>(std::min<long>(b.per_measurement_shots, pool / per_shot));
  if (plan.optimization_shots < 1 || plan.final_reserve < final_cost_per_shot) {
    std::ostringstream os;
    os << "budget of " << b.total_samples << " samples is too small for strategy " << to_string(s) << " with "
       << schedule_size << " scale factors and " << num_terms << " terms";
    throw BudgetExhausted(os.str());
  }
  return plan;
}

PostOptResult post_opt_extrapolation(const std::vector<double>& thetas, const qcore::Hamiltonian& h,
                                     pulsesim::GateChannelCache& cache, const ScaleSchedule& schedule,
                                     std::optional<int> shots, const StreamKey& stream, SampleLedger* ledger,
                                     std::vector<MeasurementRecord>* log) {
  if (thetas.size() != 1 && thetas.size() != schedule.size()) {
    throw ValidationError("post-optimization extrapolation needs one theta or one per scale factor");
  }
  PostOptResult r;
  const Measurer m{h, cache, schedule, shots, ledger, log};
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    const double theta = thetas.size() == 1 ? thetas[0] : thetas[k];
    r.thetas.push_back(theta);
    r.points.push_back(m.measure(Phase::Final, 0, 0, k, theta, stream));
  }
  r.fits = all_fits(r.points);
  return r;
}

Minimize1dResult optimize_unmitigated(const qcore::Hamiltonian& h, pulsesim::GateChannelCache& cache, double theta0,
                                      const Minimize1dOptions& opts, std::optional<int> shots,
                                      const StreamKey& stream, SampleLedger* ledger) {
  const ScaleSchedule unscaled = ScaleSchedule::folds(noisescale::FoldMethod::MsAfter, {0});
  const Measurer m{h, cache, unscaled, shots, ledger, nullptr};
  int evaluation = 0;
  auto objective = [&](double theta) {
    const StreamKey key = stream.child(static_cast<std::uint64_t>(evaluation));
    return m.measure(Phase::Optimization, 0, evaluation++, 0, theta, key).estimate;
  };
  return minimize_1d(objective, theta0, opts);
}

VqeResult run_strategy(const StrategyConfig& cfg, const qcore::Hamiltonian& h, pulsesim::GateChannelCache& cache) {
  const ScaleSchedule& schedule = cfg.schedule;
  const std::size_t num_terms = h.non_identity_terms().size();
  const std::size_t points = schedule.size();
  if (cfg.strategy == Strategy::LowOrderThenHighOrder && points < 2) {
    throw ValidationError("strategy low_order_then_high_order needs at least two scale factors");
  }

  VqeResult r;
  r.strategy = cfg.strategy;
  SampleLedger ledger(cfg.infinite_shots ? 0 : cfg.budget.total_samples);
  SampleLedger* charge = cfg.infinite_shots ? nullptr : &ledger;
  std::optional<int> opt_shots;
  ShotPlan plan{};
  if (!cfg.infinite_shots) {
    plan = plan_shots(cfg.strategy, points, num_terms, cfg.budget, cfg.optimizer);
    opt_shots = plan.optimization_shots;
    r.optimization_shots = plan.optimization_shots;
  }

  const StreamKey opt_stream(cfg.seed, {kPhaseOptimization});
  const Measurer m{h, cache, schedule, opt_shots, charge, &r.log};
  const std::size_t eval_points = evaluated_points(cfg.strategy, points);
  const int runs = cfg.strategy == Strategy::ExtrapolateOverOptimized ? static_cast<int>(points) : 1;
  // Strategy b gives each run an equal slice of the optimization pool.
  const long run_pool = cfg.infinite_shots ? 0 : (cfg.budget.total_samples - plan.final_reserve) / runs;

  r.optimizer_converged = true;
  for (int run = 0; run < runs; ++run) {
    const long run_start = ledger.spent();
    int evaluation = 0;
    auto objective = [&](double theta) {
      const long cost = static_cast<long>(eval_points * num_terms) * opt_shots.value_or(0);
      if (charge && cost > run_pool - (ledger.spent() - run_start)) {
        throw BudgetExhausted("optimization share of the budget used up");
      }
      const StreamKey key =
          opt_stream.child(static_cast<std::uint64_t>(run)).child(static_cast<std::uint64_t>(evaluation));
      double value;
      if (cfg.strategy == Strategy::ExtrapolateOverOptimized) {
        value = m.measure(Phase::Optimization, run, evaluation, static_cast<std::size_t>(run), theta, key).estimate;
      } else {
        std::vector<zne::ScaledPoint> pts;
        for (std::size_t k = 0; k < eval_points; ++k) {
          pts.push_back(m.measure(Phase::Optimization, run, evaluation, k, theta, key));
        }
        value = zne::extrapolate({pts, static_cast<int>(eval_points) - 1}).estimate;
      }
      r.trace.push_back({run, evaluation, theta, value});
      ++evaluation;
      return value;
    };
    const Minimize1dResult opt = minimize_1d(objective, cfg.theta0, cfg.optimizer);
    r.run_thetas.push_back(opt.theta);
    r.optimizer_iterations += opt.evaluations;
    r.optimizer_converged = r.optimizer_converged && opt.converged;
    r.budget_exhausted = r.budget_exhausted || opt.budget_exhausted;
  }
  r.theta_star = r.run_thetas.front();

  // Final phase: everything left, split evenly over the schedule, capped per term.
  std::optional<int> final_shots;
  if (!cfg.infinite_shots) {
    const long per_shot = static_cast<long>(points * num_terms);
    const long s = std::min<long>(cfg.budget.extrapolation_shots, ledger.remaining() / per_shot);
    if (s < 1) throw BudgetExhausted("no budget left for the final extrapolation");
    final_shots = static_cast<int>(s);
    r.final_shots = final_shots.value();
  }
  const std::vector<double> thetas =
      cfg.strategy == Strategy::ExtrapolateOverOptimized ? r.run_thetas : std::vector<double>{r.theta_star};
  r.final_phase = post_opt_extrapolation(thetas, h, cache, schedule, final_shots, StreamKey(cfg.seed, {kPhaseFinal}),
                                         charge, &r.log);
  r.final = r.final_phase.fits.back();
  r.samples_spent = ledger.spent();
  return r;
}

}  // namespace ionzne::vqe
