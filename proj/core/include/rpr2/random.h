// Copyright 2026 The rpr2 Authors
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

// Seeding helpers. Sequential streams use std::mt19937_64 seeded per shard;
// draws that must not depend on scheduling use a stateless hash keyed by
// (seed, stream, index).

#ifndef RPR2_RANDOM_H_
#define RPR2_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace rpr2 {

// The SplitMix64 finalizer.
inline uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t HashKey(uint64_t seed, uint64_t a, uint64_t b) {
  return Mix64(Mix64(Mix64(seed) ^ a) ^ (b * 0xd1342543de82ef95ULL));
}

// Engine for shard `shard` of a computation seeded with `seed`.
inline std::mt19937_64 ShardEngine(uint64_t seed, uint64_t shard) {
  return std::mt19937_64(HashKey(seed, 0x5eedULL, shard));
}

// Stateless generator. Every value is a pure function of its key, so any
// evaluation order gives the same numbers.
class CounterRng {
 public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t Bits(uint64_t stream, uint64_t index) const {
    return HashKey(seed_, stream, index);
  }

  // Uniform on (0, 1).
  double Uniform(uint64_t stream, uint64_t index) const {
    return (static_cast<double>(Bits(stream, index) >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller on two derived uniforms.
  double Normal(uint64_t stream, uint64_t index) const {
    const double u1 = Uniform(stream, 2 * index);
    const double u2 = Uniform(stream, 2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  uint64_t seed_;
};

}  // namespace rpr2

#endif  // RPR2_RANDOM_H_
