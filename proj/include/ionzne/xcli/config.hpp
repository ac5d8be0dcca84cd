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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ionzne/noisescale/fold.hpp"
#include "ionzne/pulsesim/circuit_sim.hpp"
#include "ionzne/pulsesim/params.hpp"
#include "ionzne/vqe/strategy.hpp"

namespace ionzne::xcli {

enum class ExperimentKind { Calibrate, Sweep, Vqe, Extrapolate };

std::string to_string(ExperimentKind k);

struct ThetaGrid {
  double start = -1.0;
  double stop = 1.0;
  double step = 0.05;
  /// start, start+step, ... up to stop (inclusive within half a step).
  std::vector<double> values() const;
};

/// Everything one run needs, resolved from a JSON document.
struct ExperimentConfig {
  std::string id;
  ExperimentKind kind = ExperimentKind::Sweep;
  std::filesystem::path hamiltonian_path;
  std::string noise_name = "full";  // preset name or "custom"
  pulsesim::NoiseConfig noise = pulsesim::NoiseConfig::full();
  std::string pulse_name = "discrete";
  pulsesim::MsPulseParams pulse = pulsesim::MsPulseParams::discrete();
  int fock_levels = 16;
  pulsesim::ChannelModel channel_model = pulsesim::ChannelModel::Simulated;
  noisescale::FoldMethod method = noisescale::FoldMethod::MsAfter;
  std::vector<int> fold_indices{0};
  std::vector<double> stretch_factors;
  ThetaGrid theta;
  std::optional<int> shots;  // nullopt: infinite-shot mode
  std::vector<vqe::Strategy> strategies{vqe::Strategy::OptimizeThenExtrapolate};
  std::vector<long> budgets{28000};
  vqe::Budget budget;
  vqe::Minimize1dOptions optimizer;
  double theta0 = 0.0;
  std::optional<double> theta_star;  // extrapolate: fixed parameter; otherwise optimize first
  int optimization_shots = 1000;     // extrapolate: shots while locating theta_star
  std::vector<std::uint64_t> seeds{0};
  nlohmann::json snapshot;  // the document as read, for the manifest

  noisescale::ScaleSchedule schedule() const;
};

/// Parses and validates a configuration; relative paths resolve against `base_dir`.
/// Validation failures throw ValidationError naming `origin` and the offending line.
ExperimentConfig parse_config(const std::string& text, const std::string& origin,
                              const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Directory holding the named presets: $IONZNE_CONFIG_DIR if set, else the built-in one.
std::filesystem::path preset_directory();
std::vector<std::string> preset_ids();

}  // namespace ionzne::xcli
