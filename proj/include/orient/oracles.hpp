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

#ifndef ORIENT_ORACLES_HPP_
#define ORIENT_ORACLES_HPP_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "orient/instances.hpp"
#include "orient/knap.hpp"
#include "orient/metric.hpp"
#include "orient/numeric.hpp"
#include "orient/stoch.hpp"
#include "orient/subset_paths.hpp"
#include "orient/time_windows.hpp"

// Brute-force exact solvers. They refuse instances above OracleLimits and
// always return a certificate alongside the optimal value.

namespace orient {

struct PathResult {
  Walk walk;
  Reward reward = 0;
  Distance length = 0;
};

// Subset DP over (visited set, last vertex).
PathResult oracle_p2p_orienteering(const P2PInstance& instance,
                                   const OracleLimits& limits = {});

// Same optimum by enumerating every ordered subset of the other vertices.
// Capped by max_n_permutation.
PathResult oracle_p2p_by_enumeration(const P2PInstance& instance,
                                     const OracleLimits& limits = {});

struct MinExcessResult {
  Walk walk;
  Reward reward = 0;
  Distance excess = 0;
};

// Minimum-excess u-v walk collecting at least `threshold`.
MinExcessResult oracle_min_excess(const MetricSpace& space,
                                  std::span<const Reward> rewards, Vertex u,
                                  Vertex v, Reward threshold,
                                  const OracleLimits& limits = {});

KnapRoute oracle_knap_orient(const KnapOrientInstance& instance,
                             const OracleLimits& limits = {});

struct OrderValue {
  std::vector<Vertex> order;
  Rational value;
};

// Best fixed visiting order over all ordered subsets of jobs.
OrderValue oracle_nonadaptive_stoch(const StochOrientInstance& instance,
                                    const OracleLimits& limits = {});

struct AdaptiveState {
  Vertex at = 0;
  VertexMask done = 0;
  std::int64_t elapsed = 0;
  auto operator<=>(const AdaptiveState&) const = default;
};

// Optimal adaptive policy: the next job (or kStop) for every reachable
// state, chosen after observing all sizes realized so far.
struct AdaptiveOracleResult {
  static constexpr Vertex kStop = -1;
  Rational value;
  std::map<AdaptiveState, Vertex> decisions;
};

AdaptiveOracleResult oracle_adaptive_stoch(const StochOrientInstance& instance,
                                           const OracleLimits& limits = {});

struct TWRoute {
  Walk walk;
  std::vector<TWVisit> visits;
  Reward reward = 0;
};

// Permutation search with waiting: starting at the root at time 0, visit an
// ordered subset of vertices, idling until R(v) on early arrival, with every
// visit finishing by slack * D(v). Waiting times are taken as zero.
TWRoute oracle_time_windows(const TWInstance& instance,
                            const Rational& slack = 1,
                            const OracleLimits& limits = {});

}  // namespace orient

#endif  // ORIENT_ORACLES_HPP_
