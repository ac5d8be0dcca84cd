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

#include <iostream>

#include <CLI11.hpp>

#include "ionzne/xcli/commands.hpp"

int main(int argc, char** argv) {
  using namespace ionzne::xcli;
  CLI::App app{"Pulse-level noise simulation and zero-noise extrapolation for a two-qubit trapped-ion VQE"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string config_path;
  std::string figure;
  std::uint64_t seed = 0;
  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* c = sub->add_option("--config", config_path, "experiment config (JSON)")->check(CLI::ExistingFile);
    if (needs_config) c->required();
    sub->add_option("--seed", seed, "run with this single seed");
    sub->add_option("--workers", opts.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--out", opts.out, "output directory");
    sub->add_flag("--infinite-shots", opts.infinite_shots, "exact expectations instead of sampling");
  };
  auto* calibrate = app.add_subcommand("calibrate", "calibrate MS pulses and report gate fidelities");
  auto* sweep = app.add_subcommand("sweep", "energy versus theta for every scale factor");
  auto* vqe = app.add_subcommand("vqe", "run VQE strategies over seeds and budgets");
  auto* extrapolate = app.add_subcommand("extrapolate", "extrapolate at a fixed or freshly optimized theta");
  auto* reproduce = app.add_subcommand("reproduce", "run a bundled preset by figure id");
  for (auto* sub : {calibrate, sweep, vqe, extrapolate}) add_common(sub, true);
  add_common(reproduce, false);
  reproduce->add_option("figure", figure, "preset id, e.g. fig4b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  try {
    CLI::App* used = app.get_subcommands().front();
    if (used->count("--seed")) opts.seed = seed;
    if (used == reproduce) {
      if (!used->count("--out")) opts.out = std::filesystem::path("out") / figure;
      cmd_reproduce(figure, opts);
      return kExitOk;
    }
    ExperimentConfig c = with_overrides(load_config(config_path), opts);
    if (used == calibrate) {
      cmd_calibrate(c, opts);
    } else if (used == sweep) {
      cmd_sweep(c, opts);
    } else if (used == vqe) {
      cmd_vqe(c, opts);
    } else {
      cmd_extrapolate(c, opts);
    }
    return kExitOk;
  } catch (...) {
    return report_current_exception();
  }
}
