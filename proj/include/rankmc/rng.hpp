// Copyright 2026 The RankMC Authors.
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

#ifndef RANKMC_RNG_HPP_
#define RANKMC_RNG_HPP_

#include <cstdint>
#include <random>

namespace rankmc {

// SplitMix64 finalizer; decorrelates structured keys into stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

// Uniform draw in [0, 1) built from the top 53 bits of the generator
// output. Fully specified, so seeded results do not depend on a standard
// library's distribution internals.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Derives independent, order-insensitive random substreams from one master
// seed. Every (pair, trial) consumer gets its own generator keyed by the
// item pair, so simulations produce the same data no matter in which order
// or on how many threads the pairs are visited.
class StreamSeeder {
 public:
  explicit StreamSeeder(std::uint64_t master) : master_(master) {}

  std::uint64_t master() const { return master_; }

  // New seeder whose streams are independent of this one's.
  StreamSeeder derive(std::uint64_t salt) const {
    return StreamSeeder(mix_seed(master_, salt ^ 0xA5A5A5A5A5A5A5A5ULL));
  }

  // Stream keyed by the unordered pair {i, j}.
  std::mt19937_64 pair_stream(int i, int j) const {
    const std::uint64_t lo = static_cast<std::uint64_t>(i < j ? i : j);
    const std::uint64_t hi = static_cast<std::uint64_t>(i < j ? j : i);
    return std::mt19937_64(mix_seed(master_, (lo << 32) | hi));
  }

  std::mt19937_64 stream(std::uint64_t tag) const {
    return std::mt19937_64(mix_seed(master_, tag ^ 0xC3C3C3C3C3C3C3C3ULL));
  }

 private:
  std::uint64_t master_;
};

}  // namespace rankmc

#endif  // RANKMC_RNG_HPP_
