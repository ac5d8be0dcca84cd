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

#include "ionzne/xcli/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ionzne/qcore/errors.hpp"
#include "ionzne/qcore/hamiltonian.hpp"

namespace ionzne::xcli {

using nlohmann::json;

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Calibrate: return "calibrate";
    case ExperimentKind::Sweep: return "sweep";
    case ExperimentKind::Vqe: return "vqe";
    case ExperimentKind::Extrapolate: return "extrapolate";
  }
  return "?";
}

std::vector<double> ThetaGrid::values() const {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw ValidationError("theta grid needs finite start <= stop and a positive step");
  }
  std::vector<double> v;
  const long n = std::lround(std::floor((stop - start) / step + 0.5));
  for (long k = 0; k <= n; ++k) v.push_back(start + static_cast<double>(k) * step);
  return v;
}

noisescale::ScaleSchedule ExperimentConfig::schedule() const {
  if (method == noisescale::FoldMethod::TimeStretch) return noisescale::ScaleSchedule::time_stretch(stretch_factors);
  return noisescale::ScaleSchedule::folds(method, fold_indices);
}

namespace {

class Reader {
 public:
  Reader(const std::string& text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    throw ValidationError(origin_ + ":" + std::to_string(line_of(key)) + ": field '" + key + "': " + msg);
  }

  // Line of the first occurrence of "key" in the document, 1 if absent.
  int line_of(const std::string& key) const {
    const auto pos = text_.find("\"" + key + "\"");
    if (pos == std::string::npos) return 1;
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(pos), '\n'));
  }

  int line_at_byte(std::size_t byte) const {
    byte = std::min(byte, text_.size());
    return 1 + static_cast<int>(std::count(text_.begin(), text_.begin() + static_cast<long>(byte), '\n'));
  }

  const std::string& origin() const { return origin_; }

 private:
  const std::string& text_;
  std::string origin_;
};

template <typename T>
T get(const Reader& r, const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    r.fail(key, "has the wrong type");
  }
}

double positive(const Reader& r, const std::string& key, double v) {
  if (!(v > 0.0) || !std::isfinite(v)) r.fail(key, "must be positive");
  return v;
}

pulsesim::NoiseConfig parse_noise(const Reader& r, const json& j, std::string& name) {
  if (j.is_string()) {
    name = j.get<std::string>();
    if (name == "full") return pulsesim::NoiseConfig::full();
    if (name == "none") return pulsesim::NoiseConfig::none();
    if (name == "full_with_msdg_overrotation") return pulsesim::NoiseConfig::with_msdg_overrotation();
    r.fail("noise", "unknown noise profile '" + name + "'");
  }
  if (!j.is_object()) r.fail("noise", "must be a profile name or an object");
  name = "custom";
  pulsesim::NoiseConfig n = pulsesim::NoiseConfig::none();
  n.amplitude_offset_frac = get(r, j, "amplitude_offset_frac", n.amplitude_offset_frac);
  n.motional_freq_error_hz = get(r, j, "motional_freq_error_hz", n.motional_freq_error_hz);
  n.initial_nbar = get(r, j, "initial_nbar", n.initial_nbar);
  n.heating_rate = get(r, j, "heating_rate", n.heating_rate);
  n.ms_dagger_overrotation = get(r, j, "ms_dagger_overrotation", n.ms_dagger_overrotation);
  return n;
}

pulsesim::MsPulseParams parse_pulse(const Reader& r, const json& j, std::string& name) {
  if (j.is_string()) {
    name = j.get<std::string>();
    if (name == "discrete") return pulsesim::MsPulseParams::discrete();
    if (name == "time_stretch_base") return pulsesim::MsPulseParams::time_stretch_base();
    r.fail("pulse", "unknown pulse profile '" + name + "'");
  }
  if (!j.is_object()) r.fail("pulse", "must be a profile name or an object");
  name = "custom";
  pulsesim::MsPulseParams p = pulsesim::MsPulseParams::discrete();
  p.duration_us = get(r, j, "duration_us", p.duration_us);
  p.gaussian_std_us = get(r, j, "gaussian_std_us", p.gaussian_std_us);
  p.detuning_khz = get(r, j, "detuning_khz", p.detuning_khz);
  p.peak_rabi_khz = get(r, j, "peak_rabi_khz", p.peak_rabi_khz);
  p.motional_freq_mhz = get(r, j, "motional_freq_mhz", p.motional_freq_mhz);
  return p;
}

const std::set<std::string> kKnownKeys = {
    "id",       "experiment", "hamiltonian", "noise",     "pulse",      "fock_levels",  "channel_model",
    "method",   "schedule",   "theta",       "shots",     "strategy",   "strategies",   "budget",
    "budgets",  "optimizer",  "theta0",      "theta_star", "optimization_shots", "seed", "seeds"};

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& origin,
                              const std::filesystem::path& base_dir) {
  const Reader r(text, origin);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(origin + ":" + std::to_string(r.line_at_byte(e.byte)) + ": malformed JSON (" + e.what() +
                          ")");
  }
  if (!j.is_object()) throw ValidationError(origin + ":1: top level must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownKeys.contains(key)) r.fail(key, "unknown field");
  }

  ExperimentConfig c;
  std::size_t num_terms = 0;
  c.snapshot = j;
  c.id = get<std::string>(r, j, "id", "run");

  const std::string kind = get<std::string>(r, j, "experiment", "sweep");
  if (kind == "calibrate") {
    c.kind = ExperimentKind::Calibrate;
  } else if (kind == "sweep") {
    c.kind = ExperimentKind::Sweep;
  } else if (kind == "vqe") {
    c.kind = ExperimentKind::Vqe;
  } else if (kind == "extrapolate") {
    c.kind = ExperimentKind::Extrapolate;
  } else {
    r.fail("experiment", "must be calibrate, sweep, vqe or extrapolate");
  }

  if (c.kind != ExperimentKind::Calibrate) {
    if (!j.contains("hamiltonian")) r.fail("hamiltonian", "is required");
    std::filesystem::path hp = get<std::string>(r, j, "hamiltonian", "");
    if (hp.is_relative()) hp = base_dir / hp;
    if (!std::filesystem::exists(hp)) r.fail("hamiltonian", "file " + hp.string() + " does not exist");
    c.hamiltonian_path = hp;
    num_terms = qcore::load_hamiltonian(hp).hamiltonian.non_identity_terms().size();
  }

  if (j.contains("noise")) c.noise = parse_noise(r, j.at("noise"), c.noise_name);
  if (j.contains("pulse")) c.pulse = parse_pulse(r, j.at("pulse"), c.pulse_name);
  c.fock_levels = get(r, j, "fock_levels", c.fock_levels);
  if (c.fock_levels < 8 || c.fock_levels > 60) r.fail("fock_levels", "must lie in [8, 60]");
  try {
    c.noise.validate(c.fock_levels);
  } catch (const ValidationError& e) {
    r.fail("noise", e.what());
  }
  try {
    c.pulse.validate();
  } catch (const ValidationError& e) {
    r.fail("pulse", e.what());
  }

  const std::string model = get<std::string>(r, j, "channel_model", "simulated");
  if (model == "simulated") {
    c.channel_model = pulsesim::ChannelModel::Simulated;
  } else if (model == "ideal") {
    c.channel_model = pulsesim::ChannelModel::Ideal;
  } else {
    r.fail("channel_model", "must be simulated or ideal");
  }

  try {
    c.method = noisescale::parse_fold_method(get<std::string>(r, j, "method", "ms_after"));
  } catch (const ValidationError& e) {
    r.fail("method", e.what());
  }
  if (j.contains("schedule")) {
    const json& s = j.at("schedule");
    if (!s.is_array() || s.empty()) r.fail("schedule", "must be a non-empty array");
    try {
      if (c.method == noisescale::FoldMethod::TimeStretch) {
        c.stretch_factors = s.get<std::vector<double>>();
      } else {
        c.fold_indices = s.get<std::vector<int>>();
      }
    } catch (const json::exception&) {
      r.fail("schedule", "holds fold indices (integers) or stretch factors (numbers)");
    }
  } else if (c.method == noisescale::FoldMethod::TimeStretch) {
    c.stretch_factors = noisescale::ScaleSchedule::default_time_stretch().factors();
  }
  try {
    (void)c.schedule();
  } catch (const ValidationError& e) {
    r.fail("schedule", e.what());
  }

  if (j.contains("theta")) {
    const json& t = j.at("theta");
    if (!t.is_object()) r.fail("theta", "must be an object with start, stop, step");
    c.theta.start = get(r, t, "start", c.theta.start);
    c.theta.stop = get(r, t, "stop", c.theta.stop);
    c.theta.step = get(r, t, "step", c.theta.step);
    try {
      if (c.theta.values().empty()) r.fail("theta", "grid is empty");
    } catch (const ValidationError& e) {
      r.fail("theta", e.what());
    }
  }

  if (j.contains("shots")) {
    const json& s = j.at("shots");
    if (s.is_null() || (s.is_string() && s.get<std::string>() == "infinite")) {
      c.shots.reset();
    } else if (s.is_number_integer() && s.get<long>() >= 1 && s.get<long>() <= 100'000'000) {
      c.shots = s.get<int>();
    } else {
      r.fail("shots", "must be a positive integer, null or \"infinite\"");
    }
  } else {
    c.shots = 2000;
  }

  auto parse_strategy_name = [&](const std::string& key, const std::string& name) {
    try {
      return vqe::parse_strategy(name);
    } catch (const ValidationError& e) {
      r.fail(key, e.what());
    }
  };
  if (j.contains("strategies")) {
    c.strategies.clear();
    for (const auto& name : get<std::vector<std::string>>(r, j, "strategies", {})) {
      c.strategies.push_back(parse_strategy_name("strategies", name));
    }
    if (c.strategies.empty()) r.fail("strategies", "must not be empty");
  } else if (j.contains("strategy")) {
    c.strategies = {parse_strategy_name("strategy", get<std::string>(r, j, "strategy", "c"))};
  }

  if (j.contains("budget")) {
    const json& b = j.at("budget");
    if (!b.is_object()) r.fail("budget", "must be an object");
    c.budget.total_samples = get(r, b, "total_samples", c.budget.total_samples);
    c.budget.per_measurement_shots = get(r, b, "per_measurement_shots", c.budget.per_measurement_shots);
    c.budget.extrapolation_shots = get(r, b, "extrapolation_shots", c.budget.extrapolation_shots);
    c.budget.final_fraction = get(r, b, "final_fraction", c.budget.final_fraction);
    try {
      c.budget.validate();
    } catch (const ValidationError& e) {
      r.fail("budget", e.what());
    }
  }
  c.budgets = {c.budget.total_samples};
  if (j.contains("budgets")) {
    c.budgets = get<std::vector<long>>(r, j, "budgets", {});
    if (c.budgets.empty()) r.fail("budgets", "must not be empty");
    for (long b : c.budgets) {
      if (b < 1) r.fail("budgets", "entries must be positive");
    }
  }

  if (j.contains("optimizer")) {
    const json& o = j.at("optimizer");
    if (!o.is_object()) r.fail("optimizer", "must be an object");
    c.optimizer.theta_tol = positive(r, "optimizer", get(r, o, "theta_tol", c.optimizer.theta_tol));
    c.optimizer.f_tol = get(r, o, "f_tol", c.optimizer.f_tol);
    c.optimizer.bracket_half_width =
        positive(r, "optimizer", get(r, o, "bracket_half_width", c.optimizer.bracket_half_width));
    c.optimizer.coarse_points = get(r, o, "coarse_points", c.optimizer.coarse_points);
    c.optimizer.max_evaluations = get(r, o, "max_evaluations", c.optimizer.max_evaluations);
    if (c.optimizer.coarse_points < 2 || c.optimizer.max_evaluations < 1 || c.optimizer.f_tol < 0.0) {
      r.fail("optimizer", "needs coarse_points >= 2, max_evaluations >= 1 and f_tol >= 0");
    }
  }
  c.theta0 = get(r, j, "theta0", c.theta0);
  if (j.contains("theta_star")) c.theta_star = get(r, j, "theta_star", 0.0);
  c.optimization_shots = get(r, j, "optimization_shots", c.optimization_shots);
  if (c.optimization_shots < 1) r.fail("optimization_shots", "must be positive");

  if (j.contains("seeds")) {
    c.seeds = get<std::vector<std::uint64_t>>(r, j, "seeds", {});
    if (c.seeds.empty()) r.fail("seeds", "must not be empty");
  } else if (j.contains("seed")) {
    c.seeds = {get<std::uint64_t>(r, j, "seed", 0)};
  }

  // Reject combinations the simulation modules would reject, before any work starts.
  const auto schedule = c.schedule();
  if (c.kind == ExperimentKind::Vqe) {
    for (auto s : c.strategies) {
      if (s == vqe::Strategy::LowOrderThenHighOrder && schedule.size() < 2) {
        r.fail("schedule", "strategy low_order_then_high_order needs at least two scale factors");
      }
      if (c.shots) {
        for (long b : c.budgets) {
          vqe::Budget bb = c.budget;
          bb.total_samples = b;
          try {
            (void)vqe::plan_shots(s, schedule.size(), num_terms, bb, c.optimizer);
          } catch (const BudgetExhausted& e) {
            r.fail("budgets", e.what());
          }
        }
      }
    }
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string(), path.parent_path());
}

std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("IONZNE_CONFIG_DIR"); env && *env) return env;
  return IONZNE_DEFAULT_PRESET_DIR;
}

std::vector<std::string> preset_ids() {
  std::vector<std::string> ids;
  const auto dir = preset_directory();
  if (!std::filesystem::is_directory(dir)) return ids;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.path().extension() == ".json") ids.push_back(e.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace ionzne::xcli
