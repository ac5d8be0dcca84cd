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

#include "ionzne/noisescale/fold.hpp"

#include <cmath>
#include <optional>

#include "ionzne/qcore/errors.hpp"

namespace ionzne::noisescale {

using qcore::Circuit;
using qcore::GateKind;
using qcore::GateOp;

std::string to_string(FoldMethod m) {
  switch (m) {
    case FoldMethod::TimeStretch: return "time_stretch";
    case FoldMethod::MsBefore: return "ms_before";
    case FoldMethod::MsAfter: return "ms_after";
    case FoldMethod::MsBeforeAndAfter: return "ms_before_and_after";
    case FoldMethod::MsFour: return "ms_four";
  }
  return "?";
}

FoldMethod parse_fold_method(const std::string& name) {
  for (auto m : {FoldMethod::TimeStretch, FoldMethod::MsBefore, FoldMethod::MsAfter, FoldMethod::MsBeforeAndAfter,
                 FoldMethod::MsFour}) {
    if (to_string(m) == name) return m;
  }
  throw ValidationError("unknown fold method '" + name + "'");
}

int gates_per_fold(FoldMethod m) {
  switch (m) {
    case FoldMethod::MsBefore:
    case FoldMethod::MsAfter: return 2;
    case FoldMethod::MsBeforeAndAfter: return 4;
    case FoldMethod::MsFour: return 8;
    case FoldMethod::TimeStretch: break;
  }
  throw ValidationError("time stretch has no gate-count scale factor");
}

double scale_factor(FoldMethod m, int i) {
  if (i < 0) throw ValidationError("fold index must be non-negative");
  return gates_per_fold(m) / 2.0 * i + 1.0;
}

namespace {

struct AnsatzShape {
  std::size_t ms;     // index of the MS gate
  std::size_t rz;     // index of the Rz between them
  std::size_t msdg;   // index of the MS inverse
};

AnsatzShape match_ansatz(const Circuit& c) {
  std::optional<std::size_t> ms, rz, msdg;
  const auto& g = c.gates();
  for (std::size_t k = 0; k < g.size(); ++k) {
    switch (g[k].kind) {
      case GateKind::MS:
        if (ms) throw ValidationError("fold: circuit has more than one MS gate");
        ms = k;
        break;
      case GateKind::MSInverse:
        if (msdg) throw ValidationError("fold: circuit has more than one MS inverse");
        msdg = k;
        break;
      case GateKind::RzVirtual:
        if (ms && !msdg) {
          if (rz) throw ValidationError("fold: more than one Rz between the MS gates");
          rz = k;
        }
        break;
      default:
        if (ms && !msdg) throw ValidationError("fold: only Rz may sit between the MS gates");
        break;
    }
  }
  if (!ms || !msdg || !rz || *msdg < *ms) {
    throw ValidationError("fold: circuit is not the MS, Rz, MS inverse ansatz shape");
  }
  return {*ms, *rz, *msdg};
}

}  // namespace

Circuit fold_circuit(const Circuit& c, FoldMethod m, int i) {
  if (m == FoldMethod::TimeStretch) throw ValidationError("time stretch is not a folding method");
  if (i < 0) throw ValidationError("fold index must be non-negative");
  const AnsatzShape shape = match_ansatz(c);
  if (i == 0) return c;
  const auto& g = c.gates();
  const GateOp ms = g[shape.ms];
  const GateOp msdg = g[shape.msdg];
  std::vector<GateOp> pair_block;
  for (int k = 0; k < i; ++k) {
    pair_block.push_back(msdg);
    pair_block.push_back(ms);
  }
  const bool before = m == FoldMethod::MsBefore || m == FoldMethod::MsBeforeAndAfter;
  const bool after = m == FoldMethod::MsAfter || m == FoldMethod::MsBeforeAndAfter;

  Circuit out(c.num_qubits());
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (k == shape.rz && before) {
      for (const auto& op : pair_block) out.append(op);
    }
    out.append(g[k]);
    if (k == shape.rz && after) {
      for (const auto& op : pair_block) out.append(op);
    }
    if (m == FoldMethod::MsFour && k == shape.ms) {
      for (int r = 0; r < 4 * i; ++r) out.append(ms);
    }
    if (m == FoldMethod::MsFour && k == shape.msdg) {
      for (int r = 0; r < 4 * i; ++r) out.append(msdg);
    }
  }
  return out;
}

pulsesim::MsPulseParams stretch_pulse(const pulsesim::MsPulseParams& base, double c) {
  if (!(c >= kMinStretch && c <= kMaxStretch)) throw ValidationError("stretch factor must lie in [0.1, 20]");
  return base.stretched(c);
}

Circuit stretch_circuit(const Circuit& c, double factor) {
  if (!(factor >= kMinStretch && factor <= kMaxStretch)) {
    throw ValidationError("stretch factor must lie in [0.1, 20]");
  }
  Circuit out(c.num_qubits());
  for (GateOp g : c.gates()) {
    if (g.is_two_qubit()) g.stretch *= factor;
    out.append(g);
  }
  return out;
}

ScaleSchedule::ScaleSchedule(FoldMethod m, std::vector<int> indices, std::vector<double> factors)
    : method_(m), indices_(std::move(indices)), factors_(std::move(factors)) {
  if (factors_.empty()) throw ValidationError("scale schedule is empty");
  for (std::size_t k = 1; k < factors_.size(); ++k) {
    if (!(factors_[k] > factors_[k - 1])) throw ValidationError("scale factors must be strictly increasing");
  }
}

ScaleSchedule ScaleSchedule::folds(FoldMethod m, std::vector<int> indices) {
  if (m == FoldMethod::TimeStretch) throw ValidationError("use ScaleSchedule::time_stretch for stretch factors");
  if (indices.empty()) throw ValidationError("scale schedule is empty");
  if (indices.front() != 0) throw ValidationError("fold schedule must start at index 0 (the unfolded circuit)");
  std::vector<double> factors;
  for (int i : indices) factors.push_back(scale_factor(m, i));
  return ScaleSchedule(m, std::move(indices), std::move(factors));
}

ScaleSchedule ScaleSchedule::time_stretch(std::vector<double> factors) {
  for (double c : factors) {
    if (!(c >= kMinStretch && c <= kMaxStretch)) throw ValidationError("stretch factor must lie in [0.1, 20]");
  }
  std::vector<int> indices(factors.size());
  for (std::size_t k = 0; k < indices.size(); ++k) indices[k] = static_cast<int>(k);
  return ScaleSchedule(FoldMethod::TimeStretch, std::move(indices), std::move(factors));
}

ScaleSchedule ScaleSchedule::default_time_stretch() { return time_stretch({0.6, 0.8, 1.0, 1.2, 1.4, 1.6}); }

Circuit ScaleSchedule::circuit_at(const Circuit& base, std::size_t k) const {
  if (k >= factors_.size()) throw ValidationError("schedule index out of range");
  if (method_ == FoldMethod::TimeStretch) return stretch_circuit(base, factors_[k]);
  return fold_circuit(base, method_, indices_[k]);
}

ScaleSchedule ScaleSchedule::prefix(std::size_t n) const {
  if (n == 0 || n > factors_.size()) throw ValidationError("schedule prefix length out of range");
  return ScaleSchedule(method_, {indices_.begin(), indices_.begin() + static_cast<long>(n)},
                       {factors_.begin(), factors_.begin() + static_cast<long>(n)});
}

}  // namespace ionzne::noisescale
