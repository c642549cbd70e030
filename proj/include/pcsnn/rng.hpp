// Copyright 2026 The pcsnn Authors
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
//
// Reproducibility helpers. Run artifacts must be byte-identical across
// reruns, so every random draw goes through these fully specified
// routines instead of the implementation-defined <random> distributions.

#ifndef PCSNN_RNG_HPP_
#define PCSNN_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace pcsnn {

// splitmix64 finalizer; used to derive independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ b);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b,
                              std::uint64_t c) {
  return mix64(mix_seed(a, b) ^ c);
}

// Stream tags so distinct purposes never share a derived seed.
inline constexpr std::uint64_t kSeedInitWeights = 0x5745494748545331ULL;
inline constexpr std::uint64_t kSeedShuffle = 0x5348554646ULL;
inline constexpr std::uint64_t kSeedDropout = 0x44524f50ULL;
inline constexpr std::uint64_t kSeedSubset = 0x535542534554ULL;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform integer in [0, n). Modulo bias is irrelevant here (n << 2^64);
  // what matters is that the mapping is pinned down.
  std::uint64_t below(std::uint64_t n) { return gen_() % n; }

  // Fisher-Yates with a specified draw sequence.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace pcsnn

#endif  // PCSNN_RNG_HPP_
