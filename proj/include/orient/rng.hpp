// Copyright 2026 The Orient Authors
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

#ifndef ORIENT_RNG_HPP_
#define ORIENT_RNG_HPP_

#include <cstdint>
#include <span>

#include "orient/numeric.hpp"

namespace orient {

// Counter-based generator. Draw number `index` of stream `stream` under
// `seed` is
//
//   key  = mix64(seed ^ (stream * 0x9E3779B97F4A7C15))
//   word = mix64(key + (index + 1) * 0x9E3779B97F4A7C15)
//
// with all arithmetic modulo 2^64 and mix64 the SplitMix64 finalizer
//
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z =  z ^ (z >> 31)
//
// A word w is read as the real number w / 2^64 in [0, 1). Bernoulli(p)
// succeeds iff w / 2^64 < p, and a categorical draw picks the first outcome
// whose cumulative probability exceeds w / 2^64; both comparisons are exact.
// Streams are independent of each other, so replicate r of a simulation can
// be reproduced on its own from (seed, r).
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static std::uint64_t mix64(std::uint64_t z);
  static std::uint64_t word_at(std::uint64_t seed, std::uint64_t stream,
                               std::uint64_t index);

  std::uint64_t next_u64();
  // Uniform integer in [0, bound) by 128-bit multiply-high; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  bool bernoulli(const Rational& p);
  // Index of the outcome drawn from `probabilities` (which must sum to 1).
  std::size_t categorical(std::span<const Rational> probabilities);

  std::uint64_t draws() const { return index_; }

 private:
  std::uint64_t key_;
  std::uint64_t index_ = 0;
};

}  // namespace orient

#endif  // ORIENT_RNG_HPP_
