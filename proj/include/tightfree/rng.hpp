// Copyright 2026 The tightfree Authors
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

// Seeded randomness with a fully specified bit stream.
//
// std::uniform_*_distribution and std::shuffle are implementation-defined, so
// the draws below are written out explicitly on top of std::mt19937_64 (whose
// output sequence is fixed by the standard). Two builds on different standard
// libraries produce identical constructions for identical seeds.

#ifndef TIGHTFREE_RNG_HPP_
#define TIGHTFREE_RNG_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tightfree {

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Child seed number `stream` of `parent`:
//   derive_seed(s, i) = mix64(mix64(s) ^ (0xD1B54A32D192ED03 * (i + 1)))
constexpr RngSeed derive_seed(RngSeed parent, std::uint64_t stream) {
  return RngSeed{mix64(mix64(parent.value) ^ (0xD1B54A32D192ED03ULL * (stream + 1)))};
}

class Rng {
 public:
  explicit Rng(RngSeed seed) : engine_(mix64(seed.value)) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return p >= 1.0 || uniform01() < p; }

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  // Fisher-Yates from the back.
  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tightfree

#endif  // TIGHTFREE_RNG_HPP_
