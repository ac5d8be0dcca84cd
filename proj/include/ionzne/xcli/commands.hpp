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

#include "ionzne/xcli/config.hpp"

namespace ionzne::xcli {

struct RunOptions {
  std::optional<std::uint64_t> seed;  // replaces the config's seed list
  int workers = 1;
  std::filesystem::path out = "out";
  bool infinite_shots = false;
  std::string figure;  // set by reproduce
};

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitBudget = 3,
  kExitNumerical = 4,
};

/// Applies the command-line overrides to a parsed config.
ExperimentConfig with_overrides(ExperimentConfig c, const RunOptions& opts);

void cmd_calibrate(const ExperimentConfig& c, const RunOptions& opts);
void cmd_sweep(const ExperimentConfig& c, const RunOptions& opts);
void cmd_vqe(const ExperimentConfig& c, const RunOptions& opts);
void cmd_extrapolate(const ExperimentConfig& c, const RunOptions& opts);
/// Runs whichever command the config's "experiment" field names.
void run_experiment(const ExperimentConfig& c, const RunOptions& opts);
/// Loads the preset `figure_id` and runs it; unknown ids are validation errors.
void cmd_reproduce(const std::string& figure_id, RunOptions opts);

/// Maps the exception currently being handled to an exit code and prints it to stderr.
int report_current_exception();

}  // namespace ionzne::xcli
