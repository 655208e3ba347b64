// Copyright 2026 The lgpr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LGPR_RANDOM_H_
#define LGPR_RANDOM_H_

#include <cstdint>
#include <random>

namespace lgpr {

// Seedable generator whose output is identical on every platform: the engine
// is std::mt19937_64 (fully specified by the standard) and the derived
// distributions below are implemented here rather than taken from <random>,
// whose distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on {0, ..., bound - 1}; bound must be positive.
  std::uint64_t UniformInt(std::uint64_t bound);
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Stream splitting: the seed for draw `index` of logical stream `stream`
// under experiment seed `base`. Each argument passes through a SplitMix64
// finalizer so nearby inputs give unrelated seeds.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t stream,
                         std::uint64_t index);

// Named streams used by the experiment harness.
inline constexpr std::uint64_t kGraphStream = 1;
inline constexpr std::uint64_t kLabelStream = 2;
inline constexpr std::uint64_t kSubsetStream = 3;

}  // namespace lgpr

#endif  // LGPR_RANDOM_H_
