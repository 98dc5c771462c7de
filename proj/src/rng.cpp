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

#include "orient/rng.hpp"

#include "orient/error.hpp"

namespace orient {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// w / 2^64 < p  <=>  w * den < num * 2^64
bool below(std::uint64_t word, const Rational& p) {
  const BigInt num = boost::multiprecision::numerator(p);
  const BigInt den = boost::multiprecision::denominator(p);
  return BigInt(word) * den < (num << 64);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed ^ (stream * kGolden))) {}

std::uint64_t CounterRng::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::word_at(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t index) {
  const std::uint64_t key = mix64(seed ^ (stream * kGolden));
  return mix64(key + (index + 1) * kGolden);
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t word = mix64(key_ + (index_ + 1) * kGolden);
  ++index_;
  return word;
}

std::uint64_t CounterRng::uniform_below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorCode::kInvalidArgument, "uniform_below(0)");
  const unsigned __int128 product =
      static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

std::int64_t CounterRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) fail(ErrorCode::kInvalidArgument, "uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(uniform_below(span));
}

bool CounterRng::bernoulli(const Rational& p) { return below(next_u64(), p); }

std::size_t CounterRng::categorical(std::span<const Rational> probabilities) {
  const std::uint64_t word = next_u64();
  Rational cumulative = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (below(word, cumulative)) return i;
  }
  return probabilities.empty() ? 0 : probabilities.size() - 1;
}

}  // namespace orient
