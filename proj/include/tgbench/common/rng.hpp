/*
 * Copyright 2026 The tgbench Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TGBENCH_COMMON_RNG_HPP_
#define TGBENCH_COMMON_RNG_HPP_

#include <cstdint>

namespace tgbench {

// Counter-based generator: the i-th draw is a pure function of (seed, i), so
// a given seed yields the same stream on every platform and compiler. The
// mixing function is the SplitMix64 finalizer applied to seed + i * golden.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  // Output at an arbitrary counter position; does not advance the stream.
  static std::uint64_t at(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return at(seed_, counter_++); }

  // Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t x = next_u64();
      // Reject the low `limit` values so the remaining range is a multiple
      // of bound.
      if (x >= limit) return x % bound;
    }
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Derives an independent stream seed from a base seed and a small tag, used
// where one configured seed fans out to several streams (repeats, epochs).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return SeededRng::at(base ^ 0xD1B54A32D192ED03ULL, tag);
}

}  // namespace tgbench

#endif  // TGBENCH_COMMON_RNG_HPP_
