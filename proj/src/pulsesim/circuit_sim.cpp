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

#include "ionzne/pulsesim/circuit_sim.hpp"

#include <cmath>
#include <numbers>

#include "ionzne/pulsesim/sq_gate.hpp"
#include "ionzne/qcore/errors.hpp"

namespace ionzne::pulsesim {

using qcore::GateKind;
using qcore::GateOp;

GateChannelCache::GateChannelCache(MsPulseParams ms_base, NoiseConfig noise, int fock_levels, ChannelModel model)
    : ms_base_(ms_base), noise_(noise), fock_levels_(fock_levels), model_(model) {
  ms_base_.validate();
  noise_.validate(fock_levels_);
}

GateChannelCache::GateChannelCache(GateChannelCache&& other) noexcept
    : ms_base_(other.ms_base_),
      noise_(other.noise_),
      fock_levels_(other.fock_levels_),
      model_(other.model_),
      channels_(std::move(other.channels_)) {}

GateChannelCache GateChannelCache::ideal() {
  return GateChannelCache(MsPulseParams::discrete(), NoiseConfig::none(), kDefaultFockLevels, ChannelModel::Ideal);
}

MsPulseParams ms_pulse_for(const MsPulseParams& base, const GateOp& g) {
  if (!g.is_two_qubit()) throw ValidationError("not an MS-family gate");
  MsPulseParams p = base.stretched(g.stretch);
  p.phase = g.axis;
  p.sign = g.kind == GateKind::MS ? MsSign::PlusXX : MsSign::MinusXX;
  return p;
}

QuantumChannel GateChannelCache::build(const GateOp& g) const {
  if (model_ == ChannelModel::Ideal || g.kind == GateKind::RzVirtual) {
    return QuantumChannel::unitary(qcore::embed_gate(g, 2));
  }
  switch (g.kind) {
    case GateKind::X:
      return simulate_sq_channel(SqPulseParams(std::numbers::pi, 0.0), noise_).embed(g.targets[0], 2);
    case GateKind::R: {
      // R(-t, a) = R(t, a + pi); full turns only contribute a global phase.
      double angle = std::fmod(g.angle, 2 * std::numbers::pi);
      double axis = g.axis;
      if (angle < 0.0) {
        angle = -angle;
        axis += std::numbers::pi;
      }
      if (angle == 0.0) return QuantumChannel::identity(4);
      return simulate_sq_channel(SqPulseParams(angle, axis), noise_).embed(g.targets[0], 2);
    }
    case GateKind::MS:
    case GateKind::MSInverse:
      return simulate_ms_channel(ms_pulse_for(ms_base_, g), noise_, fock_levels_);
    case GateKind::RzVirtual:
      break;
  }
  throw ValidationError("unsupported gate kind");
}

QuantumChannel GateChannelCache::channel(const GateOp& g) {
  for (int t : g.targets) {
    if (t < 0 || t > 1) throw ValidationError("channel cache handles two-qubit registers only");
  }
  if (g.kind == GateKind::RzVirtual) return build(g);
  Key key{static_cast<int>(g.kind), g.targets, g.angle, g.axis, g.stretch};
  if (g.is_two_qubit()) std::get<1>(key) = {0, 1};  // both MS variants are symmetric in the ions
  {
    std::lock_guard lock(mutex_);
    if (auto it = channels_.find(key); it != channels_.end()) return it->second;
  }
  // Simulate outside the lock; a concurrent duplicate computes the same channel.
  QuantumChannel ch = build(g);
  std::lock_guard lock(mutex_);
  return channels_.try_emplace(key, std::move(ch)).first->second;
}

std::size_t GateChannelCache::size() const {
  std::lock_guard lock(mutex_);
  return channels_.size();
}

qcore::DensityMatrix apply_circuit(const qcore::Circuit& c, GateChannelCache& cache) {
  if (c.num_qubits() != 2) throw ValidationError("circuit simulation supports two qubits");
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = 1.0;
  for (const auto& g : c.gates()) rho = cache.channel(g).apply(rho);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return qcore::DensityMatrix(std::move(rho));
}

}  // namespace ionzne::pulsesim
