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

#include "ionzne/xcli/commands.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "ionzne/estimate/shots.hpp"
#include "ionzne/pulsesim/calibration.hpp"
#include "ionzne/pulsesim/ms_gate.hpp"
#include "ionzne/pulsesim/sq_gate.hpp"
#include "ionzne/qcore/errors.hpp"
#include "ionzne/qcore/hamiltonian.hpp"
#include "ionzne/vqe/strategy.hpp"
#include "ionzne/xcli/output.hpp"

namespace ionzne::xcli {

using nlohmann::json;

namespace {

constexpr std::uint64_t kStreamSweep = 3;
constexpr std::uint64_t kStreamLocate = 4;
constexpr std::uint64_t kStreamExtrapolate = 5;

/// Runs fn(0..n-1) on up to `workers` threads; rethrows the lowest-index failure.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json base_manifest(const ExperimentConfig& c, const RunOptions& opts, const Stopwatch& sw) {
  json m;
  m["id"] = c.id;
  m["experiment"] = to_string(c.kind);
  if (!opts.figure.empty()) m["figure"] = opts.figure;
  m["config"] = c.snapshot;
  m["seeds"] = c.seeds;
  m["infinite_shots"] = !c.shots.has_value();
  m["noise_profile"] = c.noise_name;
  m["pulse_profile"] = c.pulse_name;
  m["workers"] = opts.workers;
  m["wall_clock_seconds"] = sw.seconds();
  return m;
}

pulsesim::GateChannelCache make_cache(const ExperimentConfig& c) {
  return pulsesim::GateChannelCache(c.pulse, c.noise, c.fock_levels, c.channel_model);
}

// Simulates each scaled circuit once so the channels exist before the workers fan out.
void warm_cache(pulsesim::GateChannelCache& cache, const noisescale::ScaleSchedule& schedule, int workers) {
  const qcore::Circuit base = qcore::build_uccsd_ansatz(0.0);
  parallel_for(schedule.size(), workers, [&](std::size_t k) {
    const qcore::Circuit circuit = schedule.circuit_at(base, k);
    for (const auto& g : circuit.gates()) (void)cache.channel(g);
  });
}

std::string join_gammas(const std::vector<double>& g) {
  std::string s;
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + format_cell(g[k]);
  return s;
}

}  // namespace

ExperimentConfig with_overrides(ExperimentConfig c, const RunOptions& opts) {
  if (opts.seed) c.seeds = {*opts.seed};
  if (opts.infinite_shots) c.shots.reset();
  if (opts.workers < 1) throw ValidationError("--workers must be at least 1");
  return c;
}

void cmd_calibrate(const ExperimentConfig& c, const RunOptions& opts) {
  const Stopwatch sw;
  RunOutput out(opts.out);
  using namespace pulsesim;

  std::vector<double> stretches{1.0};
  if (c.method == noisescale::FoldMethod::TimeStretch) stretches = c.stretch_factors;

  Table params({"stretch", "duration_us", "gaussian_std_us", "detuning_khz", "coupling_scale", "residual_infidelity",
                "detuning_adjusted"});
  Table fid({"stretch", "gate", "fidelity", "noiseless_fidelity"});
  struct Row {
    CalibrationResult cal;
    MsPulseParams p;
    double ms, msdg, comp, ms0, msdg0, comp0;
  };
  std::vector<Row> rows(stretches.size());
  parallel_for(stretches.size(), opts.workers, [&](std::size_t k) {
    MsPulseParams p = noisescale::stretch_pulse(c.pulse, stretches[k]);
    MsPulseParams pd = p;
    pd.sign = MsSign::MinusXX;
    const qcore::UnitaryMatrix id(ComplexMatrix::Identity(4, 4));
    auto fidelities = [&](const NoiseConfig& n, double& ms, double& msdg, double& comp) {
      const QuantumChannel a = simulate_ms_channel(p, n, c.fock_levels);
      const QuantumChannel b = simulate_ms_channel(pd, n, c.fock_levels);
      ms = entanglement_fidelity(a, ideal_ms_unitary(p));
      msdg = entanglement_fidelity(b, ideal_ms_unitary(pd));
      comp = entanglement_fidelity(a.then(b), id);
    };
    Row& r = rows[k];
    r.p = p;
    r.cal = calibrate_ms(p, c.fock_levels);
    fidelities(c.noise, r.ms, r.msdg, r.comp);
    fidelities(NoiseConfig::none(), r.ms0, r.msdg0, r.comp0);
  });
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& r = rows[k];
    params.add({stretches[k], r.p.duration_us, r.p.gaussian_std_us, r.cal.detuning_khz, r.cal.coupling_scale,
                r.cal.residual_infidelity, std::string(r.cal.detuning_adjusted ? "yes" : "no")});
    fid.add({stretches[k], std::string("MS"), r.ms, r.ms0});
    fid.add({stretches[k], std::string("MSdg"), r.msdg, r.msdg0});
    fid.add({stretches[k], std::string("MS_then_MSdg"), r.comp, r.comp0});
  }
  for (double theta : {std::numbers::pi / 2, std::numbers::pi}) {
    const SqPulseParams sq(theta, 0.0);
    const double f = entanglement_fidelity(simulate_sq_channel(sq, c.noise), ideal_sq_unitary(sq));
    const double f0 = entanglement_fidelity(simulate_sq_channel(sq, NoiseConfig::none()), ideal_sq_unitary(sq));
    fid.add({1.0, std::string(theta < 2 ? "R_pi_2" : "R_pi"), f, f0});
  }
  out.write_table("calibration.tsv", params);
  out.write_table("fidelities.tsv", fid);
  std::cout << fid.str();
  out.write_manifest(base_manifest(c, opts, sw));
}

void cmd_sweep(const ExperimentConfig& c, const RunOptions& opts) {
  const Stopwatch sw;
  const auto loaded = qcore::load_hamiltonian(c.hamiltonian_path);
  const qcore::Hamiltonian& h = loaded.hamiltonian;
  const auto schedule = c.schedule();
  const auto thetas = c.theta.values();
  auto cache = make_cache(c);
  auto ideal = pulsesim::GateChannelCache::ideal();
  warm_cache(cache, schedule, opts.workers);

  const std::uint64_t seed = c.seeds.front();
  const std::size_t n = schedule.size() * thetas.size();
  std::vector<estimate::EnergyEstimate> results(n);
  std::vector<double> exact(thetas.size());
  parallel_for(n, opts.workers, [&](std::size_t idx) {
    const std::size_t k = idx / thetas.size(), t = idx % thetas.size();
    const qcore::Circuit circuit = schedule.circuit_at(qcore::build_uccsd_ansatz(thetas[t]), k);
    const estimate::StreamKey key(seed, {kStreamSweep, k, t});
    results[idx] = estimate::measure_circuit_energy(circuit, h, cache, c.shots, key);
  });
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    exact[t] = qcore::expectation(pulsesim::apply_circuit(qcore::build_uccsd_ansatz(thetas[t]), ideal), h);
  }

  Table table({"theta", "scale_index", "factor", "mean", "sem", "shots_per_term", "noiseless"});
  for (std::size_t k = 0; k < schedule.size(); ++k) {
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      const auto& e = results[k * thetas.size() + t];
      table.add({thetas[t], static_cast<long>(k), schedule.factors()[k], e.mean, e.sem,
                 static_cast<long>(c.shots.value_or(0)), exact[t]});
    }
  }
  RunOutput out(opts.out);
  out.write_table("sweep.tsv", table);
  if (schedule.size() >= 2) {
    Table fits({"theta", "order", "estimate", "sem", "gammas"});
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      std::vector<zne::ScaledPoint> pts;
      for (std::size_t k = 0; k < schedule.size(); ++k) {
        const auto& e = results[k * thetas.size() + t];
        pts.push_back({schedule.factors()[k], e.mean, e.sem});
      }
      for (int m = 1; m < static_cast<int>(pts.size()); ++m) {
        const auto r = zne::extrapolate({pts, m});
        fits.add({thetas[t], static_cast<long>(m), r.estimate, r.sem, join_gammas(r.gammas)});
      }
    }
    out.write_table("extrapolated.tsv", fits);
  }
  json m = base_manifest(c, opts, sw);
  m["exact_ground_energy"] = qcore::exact_ground_energy(h);
  m["hamiltonian"] = {{"molecule", loaded.info.molecule}, {"source", loaded.info.source}};
  m["wall_clock_seconds"] = sw.seconds();
  out.write_manifest(m);
}

void cmd_vqe(const ExperimentConfig& c, const RunOptions& opts) {
  const Stopwatch sw;
  const auto loaded = qcore::load_hamiltonian(c.hamiltonian_path);
  const qcore::Hamiltonian& h = loaded.hamiltonian;
  const double e_theory = qcore::exact_ground_energy(h);
  const auto schedule = c.schedule();
  auto cache = make_cache(c);
  warm_cache(cache, schedule, opts.workers);

  struct Job {
    vqe::Strategy strategy;
    long budget;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (auto s : c.strategies) {
    for (long b : c.budgets) {
      for (auto seed : c.seeds) jobs.push_back({s, b, seed});
    }
  }
  std::vector<vqe::VqeResult> results(jobs.size());
  parallel_for(jobs.size(), opts.workers, [&](std::size_t i) {
    vqe::StrategyConfig sc;
    sc.strategy = jobs[i].strategy;
    sc.schedule = schedule;
    sc.budget = c.budget;
    sc.budget.total_samples = jobs[i].budget;
    sc.seed = jobs[i].seed;
    sc.theta0 = c.theta0;
    sc.optimizer = c.optimizer;
    sc.infinite_shots = !c.shots.has_value();
    results[i] = vqe::run_strategy(sc, h, cache);
  });

  Table runs({"strategy", "budget", "seed", "theta_star", "iterations", "converged", "optimization_shots",
              "final_shots", "samples_spent", "estimate", "sem", "epsilon_pct", "sigma_pct", "unmitigated",
              "epsilon_unmitigated_pct", "linear", "epsilon_linear_pct"});
  Table traces({"strategy", "budget", "seed", "run", "iteration", "theta", "value"});
  Table agg({"strategy", "budget", "seeds", "mean_epsilon_pct", "sem_epsilon_pct", "mean_sigma_pct",
             "mean_epsilon_unmitigated_pct", "mean_epsilon_linear_pct", "linear_better_count"});
  auto eps = [&](double mean, double sem) { return estimate::relative_error({mean, sem, 0}, e_theory); };

  std::size_t i = 0;
  for (auto s : c.strategies) {
    for (long b : c.budgets) {
      double sum = 0, sum2 = 0, sig = 0, unm = 0, lin = 0;
      long better = 0;
      for (auto seed : c.seeds) {
        const auto& r = results[i++];
        const auto& fits = r.final_phase.fits;
        const auto e_final = eps(r.final.estimate, r.final.sem);
        const auto e_unm = eps(fits[0].estimate, fits[0].sem);
        const bool has_linear = fits.size() > 1;
        const auto e_lin = has_linear ? eps(fits[1].estimate, fits[1].sem) : e_unm;
        runs.add({vqe::to_string(s), b, static_cast<long>(seed), r.theta_star, static_cast<long>(r.optimizer_iterations),
                  std::string(r.optimizer_converged ? "yes" : "no"), static_cast<long>(r.optimization_shots),
                  static_cast<long>(r.final_shots), r.samples_spent, r.final.estimate, r.final.sem, e_final.epsilon,
                  e_final.sigma, fits[0].estimate, e_unm.epsilon, has_linear ? fits[1].estimate : fits[0].estimate,
                  e_lin.epsilon});
        for (const auto& t : r.trace) {
          traces.add({vqe::to_string(s), b, static_cast<long>(seed), static_cast<long>(t.run),
                      static_cast<long>(t.iteration), t.theta, t.value});
        }
        sum += e_final.epsilon;
        sum2 += e_final.epsilon * e_final.epsilon;
        sig += e_final.sigma;
        unm += e_unm.epsilon;
        lin += e_lin.epsilon;
        better += e_lin.epsilon < e_unm.epsilon ? 1 : 0;
      }
      const double n = static_cast<double>(c.seeds.size());
      const double mean = sum / n;
      const double var = n > 1 ? std::max(0.0, (sum2 - n * mean * mean) / (n - 1)) : 0.0;
      agg.add({vqe::to_string(s), b, static_cast<long>(c.seeds.size()), mean, std::sqrt(var / n), sig / n, unm / n,
               lin / n, better});
    }
  }
  RunOutput out(opts.out);
  out.write_table("runs.tsv", runs);
  out.write_table("aggregate.tsv", agg);
  out.write_table("traces.tsv", traces);
  std::cout << agg.str();
  json m = base_manifest(c, opts, sw);
  m["exact_ground_energy"] = e_theory;
  m["wall_clock_seconds"] = sw.seconds();
  out.write_manifest(m);
}

void cmd_extrapolate(const ExperimentConfig& c, const RunOptions& opts) {
  const Stopwatch sw;
  const auto loaded = qcore::load_hamiltonian(c.hamiltonian_path);
  const qcore::Hamiltonian& h = loaded.hamiltonian;
  const double e_theory = qcore::exact_ground_energy(h);
  const auto schedule = c.schedule();
  auto cache = make_cache(c);
  warm_cache(cache, schedule, opts.workers);

  std::vector<vqe::PostOptResult> results(c.seeds.size());
  std::vector<double> theta_star(c.seeds.size());
  parallel_for(c.seeds.size(), opts.workers, [&](std::size_t i) {
    const auto seed = c.seeds[i];
    if (c.theta_star) {
      theta_star[i] = *c.theta_star;
    } else {
      const std::optional<int> shots = c.shots ? std::optional<int>(c.optimization_shots) : std::nullopt;
      theta_star[i] = vqe::optimize_unmitigated(h, cache, c.theta0, c.optimizer, shots,
                                                estimate::StreamKey(seed, {kStreamLocate}))
                          .theta;
    }
    results[i] = vqe::post_opt_extrapolation({theta_star[i]}, h, cache, schedule, c.shots,
                                             estimate::StreamKey(seed, {kStreamExtrapolate}));
  });

  Table points({"seed", "theta", "scale_index", "factor", "mean", "sem"});
  Table fits({"seed", "order", "estimate", "sem", "epsilon_pct", "sigma_pct", "gammas"});
  for (std::size_t i = 0; i < c.seeds.size(); ++i) {
    const auto seed = static_cast<long>(c.seeds[i]);
    for (std::size_t k = 0; k < results[i].points.size(); ++k) {
      const auto& p = results[i].points[k];
      points.add({seed, theta_star[i], static_cast<long>(k), p.factor, p.estimate, p.sem});
    }
    for (const auto& f : results[i].fits) {
      const auto e = estimate::relative_error({f.estimate, f.sem, 0}, e_theory);
      fits.add({seed, static_cast<long>(f.order), f.estimate, f.sem, e.epsilon, e.sigma, join_gammas(f.gammas)});
    }
  }
  RunOutput out(opts.out);
  out.write_table("points.tsv", points);
  out.write_table("fits.tsv", fits);
  std::cout << fits.str();
  json m = base_manifest(c, opts, sw);
  m["exact_ground_energy"] = e_theory;
  m["wall_clock_seconds"] = sw.seconds();
  out.write_manifest(m);
}

void run_experiment(const ExperimentConfig& c, const RunOptions& opts) {
  switch (c.kind) {
    case ExperimentKind::Calibrate: return cmd_calibrate(c, opts);
    case ExperimentKind::Sweep: return cmd_sweep(c, opts);
    case ExperimentKind::Vqe: return cmd_vqe(c, opts);
    case ExperimentKind::Extrapolate: return cmd_extrapolate(c, opts);
  }
}

void cmd_reproduce(const std::string& figure_id, RunOptions opts) {
  const auto path = preset_directory() / (figure_id + ".json");
  if (!std::filesystem::exists(path)) {
    std::string known;
    for (const auto& id : preset_ids()) known += (known.empty() ? "" : ", ") + id;
    throw ValidationError("unknown figure id '" + figure_id + "' (known: " + known + ")");
  }
  opts.figure = figure_id;
  run_experiment(with_overrides(load_config(path), opts), opts);
}

int report_current_exception() {
  try {
    throw;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace ionzne::xcli
