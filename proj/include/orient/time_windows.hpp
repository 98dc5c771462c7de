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

#ifndef ORIENT_TIME_WINDOWS_HPP_
#define ORIENT_TIME_WINDOWS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orient/instances.hpp"
#include "orient/metric.hpp"
#include "orient/numeric.hpp"
#include "orient/rng.hpp"
#include "orient/stoch.hpp"
#include "orient/subset_paths.hpp"

namespace orient {

// f = 1/sqrt(1+eps); s = smallest integer with f^(1.5^s) <= 1/4.
struct MarginParameters {
  Rational epsilon;
  double f = 0.0;
  int s = 0;
};

MarginParameters compute_margin_params(const Rational& epsilon);

// Node-splitting groups V_0..V_{s+1} of vertices by the ratio of a
// reference visit time t(v) to the deadline D(v):
//   V_0      ratio in (f, 1]
//   V_i      ratio in (f^(1.5^i), f^(1.5^(i-1))]   for 1 <= i <= s
//   V_{s+1}  ratio in (0, 1/4]
// A vertex matching several groups goes to the first. Vertices without a
// visit time, visited at time 0, or visited after their deadline are
// listed in `unassigned`.
struct GroupPartition {
  std::vector<std::vector<Vertex>> groups;
  std::vector<Vertex> unassigned;
};

GroupPartition partition_groups(const TWInstance& instance,
                                const MarginParameters& params,
                                std::span<const std::optional<Rational>> visit_times);

// One stop of a route. `start` is when service begins (after waiting for
// the release date); `completion` is `start` plus the realized waiting time.
struct TWVisit {
  Vertex vertex = 0;
  Rational arrival;
  Rational start;
  Rational completion;
};

struct TWVerdict {
  Vertex vertex = 0;
  bool counted = false;
  std::string reason;
};

// A visit counts iff its service starts no earlier than R(v) and completes
// by slack * D(v). Only the first counted visit of a vertex counts.
std::vector<TWVerdict> check_tw_feasibility(std::span<const TWVisit> trace,
                                            const TWInstance& instance,
                                            const Rational& slack);

// Leg of a plan: leave `from` at `depart` (waiting there until then) and
// reach `to` by `arrive_by`. Deterministic legs follow `walk` and claim
// `claimed`; stochastic legs execute `policy` between the two endpoints.
struct TWSegment {
  Vertex from = 0;
  Vertex to = 0;
  Rational depart;
  Rational arrive_by;
  Walk walk;
  std::vector<Vertex> claimed;
  std::optional<NonAdaptivePolicy> policy;
  Rational planned_reward;
};

enum class TWSubroutine { kDeterministicP2P, kStochasticP2P };

struct TWPlan {
  Rational epsilon;
  Rational slack;  // 1 + epsilon
  std::vector<Rational> checkpoints;
  std::vector<TWSegment> segments;
  Rational planned_reward;
};

struct TWSolution {
  TWPlan plan;
  Walk walk;
  std::vector<TWVisit> visits;  // claimed vertices only
  Reward reward = 0;
};

// Checkpoints 0, 1 and (1+eps)^j for j >= 1 while <= (1+eps) * max deadline.
std::vector<Rational> checkpoint_grid(const TWInstance& instance,
                                      const Rational& epsilon);

// Checkpoint DP: a state is (checkpoint, vertex) with the best plan reaching
// that vertex by that time. Each transition departs at one checkpoint and
// must arrive by a later one; it runs the orienteering subroutine on the
// vertices whose windows, stretched to [R(v), (1+eps) D(v)], are guaranteed
// to contain the visit. Every claimed vertex is served inside its stretched
// window.
TWPlan plan_time_windows(const TWInstance& instance, const Rational& epsilon,
                         TWSubroutine subroutine);

// Deterministic replay of a plan built with kDeterministicP2P.
TWSolution replay_plan(const TWInstance& instance, const TWPlan& plan);

TWSolution solve_time_windows(const TWInstance& instance,
                              const Rational& epsilon);

// One execution of a stochastic plan: per segment, the segment policy's
// branch and inclusion draws, then waiting-time draws. A job whose
// completion plus the distance on to the segment end overruns the segment
// deadline ends that segment. Every attempted job is appended to `trace`.
Reward run_tw_plan_once(const TWInstance& instance, const TWPlan& plan,
                        CounterRng& rng, std::vector<TWVisit>* trace);

SimulationSummary simulate_tw_plan(const TWInstance& instance,
                                   const TWPlan& plan, std::uint64_t replicates,
                                   std::uint64_t seed);

}  // namespace orient

#endif  // ORIENT_TIME_WINDOWS_HPP_
