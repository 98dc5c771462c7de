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

#ifndef ORIENT_SUBSET_PATHS_HPP_
#define ORIENT_SUBSET_PATHS_HPP_

#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "orient/metric.hpp"

namespace orient {

using VertexMask = std::uint32_t;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }
inline constexpr bool has(VertexMask mask, Vertex v) {
  return (mask >> v) & 1u;
}

struct OracleLimits {
  int max_n_subset_dp = 14;
  int max_n_permutation = 9;
  std::int64_t max_state_budget = 30;
  int max_n_nonadaptive = 6;
  int max_n_adaptive = 4;
  std::size_t max_support_adaptive = 3;
};

// Held-Karp table rooted at `source`: for every vertex set S containing the
// source and every target t, the length of the shortest walk that starts at
// the source, visits all of S and ends at t. Revisits are implicit; the
// metric makes shortcutting them free.
class SubsetPathTable {
 public:
  static constexpr Distance kInfinite = std::numeric_limits<Distance>::max() / 4;

  SubsetPathTable(const MetricSpace& space, Vertex source,
                  const OracleLimits& limits = {});

  Vertex source() const { return source_; }
  int size() const { return n_; }

  // Shortest source -> ... -> target walk covering `mask`; mask must contain
  // the source. kInfinite never occurs for a valid mask.
  Distance length(VertexMask mask, Vertex target) const {
    return close_[index(mask, target)];
  }
  Walk walk(VertexMask mask, Vertex target) const;

 private:
  std::size_t index(VertexMask mask, Vertex v) const {
    return static_cast<std::size_t>(mask) * n_ + v;
  }

  int n_;
  Vertex source_;
  // dp_[S][a]: shortest walk from source covering S that ends at a in S.
  std::vector<Distance> dp_;
  std::vector<std::int8_t> parent_;
  // close_[S][t] = min over a in S of dp_[S][a] + d(a, t).
  std::vector<Distance> close_;
  std::vector<std::int8_t> close_via_;
};

// Lazily built tables for every source of one metric (held by value); safe
// to share across threads.
class SubsetPathCache {
 public:
  explicit SubsetPathCache(const MetricSpace& space,
                           const OracleLimits& limits = {});

  const MetricSpace& space() const { return space_; }
  const SubsetPathTable& table(Vertex source) const;

 private:
  MetricSpace space_;
  OracleLimits limits_;
  mutable std::mutex mu_;
  mutable std::vector<std::unique_ptr<SubsetPathTable>> tables_;
};

// Process-wide cache of the most recently used metrics (compared by value),
// so repeated solves on one metric share their tables.
std::shared_ptr<const SubsetPathCache> shared_subset_paths(
    const MetricSpace& space, const OracleLimits& limits = {});

// Per-mask reward totals: sums[S] = sum of rewards[v] for v in S.
template <typename R>
std::vector<R> subset_sums(std::span<const R> rewards) {
  const std::size_t count = std::size_t{1} << rewards.size();
  std::vector<R> sums(count, R(0));
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = __builtin_ctzll(mask);
    sums[mask] = sums[mask & (mask - 1)] + rewards[static_cast<std::size_t>(low)];
  }
  return sums;
}

template <typename R>
struct SubsetChoice {
  VertexMask mask = 0;
  R reward = R(0);
  Distance length = 0;
};

// Best vertex set S (containing the table's source and `target`) whose
// covering walk fits in `budget`: maximum reward, then minimum length, then
// smallest mask.
template <typename R>
std::optional<SubsetChoice<R>> best_subset_within(const SubsetPathTable& table,
                                                  const std::vector<R>& sums,
                                                  Vertex target,
                                                  Distance budget) {
  const VertexMask required = bit(table.source()) | bit(target);
  const std::size_t count = std::size_t{1} << table.size();
  std::optional<SubsetChoice<R>> best;
  for (std::size_t m = 0; m < count; ++m) {
    const auto mask = static_cast<VertexMask>(m);
    if ((mask & required) != required) continue;
    const Distance len = table.length(mask, target);
    if (len > budget) continue;
    if (!best || sums[m] > best->reward ||
        (sums[m] == best->reward && len < best->length)) {
      best = SubsetChoice<R>{mask, sums[m], len};
    }
  }
  return best;
}

}  // namespace orient

#endif  // ORIENT_SUBSET_PATHS_HPP_
