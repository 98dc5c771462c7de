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

#ifndef ORIENT_KNAP_HPP_
#define ORIENT_KNAP_HPP_

#include <vector>

#include "orient/instances.hpp"
#include "orient/metric.hpp"
#include "orient/numeric.hpp"
#include "orient/subset_paths.hpp"

namespace orient {

// A walk together with the vertices it actually collects (in walk order).
struct KnapRoute {
  Walk walk;
  std::vector<Vertex> collected;
  Reward reward = 0;
  Rational size = 0;
  Distance length = 0;
};

// Builds the route record for `walk` collecting `collected`, filling in
// reward, size and length from the instance.
KnapRoute make_route(const KnapOrientInstance& instance, Walk walk,
                     std::vector<Vertex> collected);

// Zeroes the reward of every vertex whose size exceeds the knapsack budget.
KnapOrientInstance preprocess_oversize(const KnapOrientInstance& instance);

// Multipliers tried by the exhaustive search: 0, then (when W > 0 and some
// reward is positive) lo, 2lo, 4lo, ... up to the first value >= hi, where
// lo = r_max / (2 W n) and hi = 2 sum(r) / W.
std::vector<Rational> lagrangian_schedule(const KnapOrientInstance& instance);

// max(r_v - theta * s_v, 0) for every vertex.
std::vector<Rational> lagrangian_rewards(const KnapOrientInstance& instance,
                                         const Rational& theta);

// Cuts a start-end walk down to one knapsack-feasible piece. The walk's
// positive-reward vertices, in order of first occurrence, are grouped
// greedily into maximal runs of total size <= W; the run with the largest
// reward (earliest on ties) is kept and reconnected to the endpoints by
// direct hops. Requires every positive-reward vertex to fit on its own.
KnapRoute split_best_segment(const KnapOrientInstance& instance,
                             const Walk& walk);

struct KnapSearchEntry {
  Rational theta;
  Reward reward = 0;
};

// Lagrangian relaxation of the knapsack constraint solved through the P2P
// orienteering algorithm (exact min-excess subroutine), one run per
// multiplier, each completed by `split_best_segment`. Returns the best
// feasible route; ties keep the smaller multiplier.
KnapRoute solve_p2p_knap(const KnapOrientInstance& instance,
                         std::vector<KnapSearchEntry>* search_log = nullptr,
                         const OracleLimits& limits = {});

bool route_is_feasible(const KnapOrientInstance& instance,
                       const KnapRoute& route);

}  // namespace orient

#endif  // ORIENT_KNAP_HPP_
