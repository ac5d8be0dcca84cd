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
#include <initializer_list>
#include <random>
#include <vector>

namespace ionzne::estimate {

/// Identifies one independent random stream: a run seed plus a path of integer labels
/// (for example phase, iteration, scale index, term index). Streams with different paths
/// are independent of each other and of evaluation order.
class StreamKey {
 public:
  explicit StreamKey(std::uint64_t seed) : seed_(seed) {}
  StreamKey(std::uint64_t seed, std::initializer_list<std::uint64_t> path) : seed_(seed), path_(path) {}

  /// Same seed, path extended by `label`.
  StreamKey child(std::uint64_t label) const;

  std::uint64_t seed() const { return seed_; }
  const std::vector<std::uint64_t>& path() const { return path_; }

  /// A fresh generator for this stream.
  std::mt19937_64 engine() const;

 private:
  std::uint64_t seed_;
  std::vector<std::uint64_t> path_;
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace ionzne::estimate
