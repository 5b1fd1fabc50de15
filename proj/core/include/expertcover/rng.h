// Copyright 2026 The expertcover Authors.
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

#ifndef EXPERTCOVER_RNG_H_
#define EXPERTCOVER_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace expertcover {

// SplitMix64 finalizer; used to derive independent seeds.
std::uint64_t mix64(std::uint64_t x);

// Stable 64-bit hash of a stream label, for named streams ("environment").
std::uint64_t stream_id(std::string_view label);

// Seedable, splittable random source. The engine is mt19937_64 and all
// conversions to floating point or bounded integers are done here rather than
// through <random> distributions, whose output is implementation-defined.
// Streams derived from (seed, stream) are bit-reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for (master seed, stream id).
  static Rng derive(std::uint64_t master, std::uint64_t stream);
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }

  // One engine advance each.
  std::uint64_t next_u64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound); rejection sampling, may advance more than
  // once. bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Fair +1/-1.
  double sign() { return (next_u64() >> 63) != 0 ? 1.0 : -1.0; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace expertcover

#endif  // EXPERTCOVER_RNG_H_
