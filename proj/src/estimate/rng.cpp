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

#include "ionzne/estimate/rng.hpp"

namespace ionzne::estimate {

StreamKey StreamKey::child(std::uint64_t label) const {
  StreamKey k = *this;
  k.path_.push_back(label);
  return k;
}

std::mt19937_64 StreamKey::engine() const {
  // seed_seq only consumes 32-bit words, so split every 64-bit value.
  std::vector<std::uint32_t> words;
  words.reserve(2 * (path_.size() + 2));
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed_);
  push(path_.size());
  for (auto v : path_) push(v);
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace ionzne::estimate
