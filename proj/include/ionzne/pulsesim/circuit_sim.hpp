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

#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

#include "ionzne/pulsesim/channel.hpp"
#include "ionzne/pulsesim/ms_gate.hpp"
#include "ionzne/pulsesim/params.hpp"
#include "ionzne/qcore/circuit.hpp"
#include "ionzne/qcore/density_matrix.hpp"

namespace ionzne::pulsesim {

enum class ChannelModel {
  Simulated,  // pulse-level channels for X, R, MS and MS inverse
  Ideal,      // exact gate unitaries everywhere
};

/// Per-gate two-qubit channels. Each distinct gate is simulated once and then shared,
/// so every appearance of a gate in a circuit sees the same error. Safe to share across threads.
class GateChannelCache {
 public:
  GateChannelCache(MsPulseParams ms_base, NoiseConfig noise, int fock_levels = kDefaultFockLevels,
                   ChannelModel model = ChannelModel::Simulated);

  static GateChannelCache ideal();

  const MsPulseParams& ms_base() const { return ms_base_; }
  const NoiseConfig& noise() const { return noise_; }
  int fock_levels() const { return fock_levels_; }
  ChannelModel model() const { return model_; }

  /// Channel of `g` on the two-qubit register. Virtual Rz is exact and never cached.
  QuantumChannel channel(const qcore::GateOp& g);
  std::size_t size() const;

  GateChannelCache(const GateChannelCache&) = delete;
  GateChannelCache& operator=(const GateChannelCache&) = delete;
  GateChannelCache(GateChannelCache&& other) noexcept;

 private:
  using Key = std::tuple<int, std::vector<int>, double, double, double>;
  QuantumChannel build(const qcore::GateOp& g) const;

  MsPulseParams ms_base_;
  NoiseConfig noise_;
  int fock_levels_;
  ChannelModel model_;
  mutable std::mutex mutex_;
  std::map<Key, QuantumChannel> channels_;
};

/// Pulse parameters of an MS-family gate: the base pulse stretched by g.stretch, with the
/// gate's axis as phase and MinusXX for the inverse.
MsPulseParams ms_pulse_for(const MsPulseParams& base, const qcore::GateOp& g);

/// Applies the gates left to right to |0...0><0...0| (two-qubit circuits only).
qcore::DensityMatrix apply_circuit(const qcore::Circuit& c, GateChannelCache& cache);

}  // namespace ionzne::pulsesim
