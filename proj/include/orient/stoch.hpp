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

#ifndef ORIENT_STOCH_HPP_
#define ORIENT_STOCH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "orient/instances.hpp"
#include "orient/knap.hpp"
#include "orient/numeric.hpp"
#include "orient/rng.hpp"

namespace orient {

// E[min(S, W)].
Rational truncated_mean(const SizeDistribution& dist, const Rational& cap);

// Expected reward of the tour start -> v -> terminal:
// r_v * Pr[S_v <= B - d(start,v) - d(v,terminal)].
Rational single_vertex_reward(const StochOrientInstance& instance, Vertex v);

// Deterministic surrogate at truncation scale W: travel budget
// floor(B - W), knapsack budget W, sizes E[min(S_v, W)], same rewards and
// endpoints. Requires 0 <= W <= B.
KnapOrientInstance build_valid_knap_instance(const StochOrientInstance& instance,
                                             const Rational& cap);

// The truncation scales B, B/2, ..., B/2^ceil(log2 B), 0 in loop order.
std::vector<Rational> truncation_scales(std::int64_t budget);

// Exact expected reward of visiting `order` non-adaptively. Elapsed time
// starts at 0 at the start vertex; travel follows shortest paths; each job
// runs to completion and pays r_v iff its completion time plus the distance
// on to the terminal is at most B. Once a job misses, nothing later can be
// collected. Throws on repeated vertices.
Rational exact_policy_value(const StochOrientInstance& instance,
                            std::span<const Vertex> order);

struct TruncationCandidate {
  int index = 0;  // i in W = B / 2^i; the W = 0 entry uses ceil(log2 B) + 1
  Rational cap;
  bool feasible = false;
  Reward reward = 0;
};

// Randomized non-adaptive policy: with `branch_probability` visit only
// `single_vertex`; otherwise walk `path`, attempting each of `jobs`
// independently with `inclusion_probability`.
struct NonAdaptivePolicy {
  std::optional<Vertex> single_vertex;
  Rational single_vertex_reward = 0;
  Walk path;
  std::vector<Vertex> jobs;
  Rational branch_probability = Rational(1, 2);
  Rational inclusion_probability = Rational(1, 4);
  int chosen_index = 0;
  std::vector<TruncationCandidate> candidates;
};

struct StochOptions {
  Rational branch_probability = Rational(1, 2);
  Rational inclusion_probability = Rational(1, 4);
  OracleLimits limits;
};

// Non-adaptive stochastic P2P orienteering: best single-vertex tour, plus
// the best knapsack-orienteering route over all truncation scales.
NonAdaptivePolicy solve_p2p_stoch(const StochOrientInstance& instance,
                                  const StochOptions& options = {});

struct PolicyValue {
  bool exact = true;
  Rational value = 0;         // meaningful when exact
  double estimate = 0.0;      // always set
  double standard_error = 0;  // zero when exact
};

// branch * R(single) + (1 - branch) * E[value of the sampled job list].
// The inner expectation sums over all inclusion patterns when there are at
// most `max_exact_jobs` jobs, otherwise it is estimated by simulation.
PolicyValue randomized_policy_value(const StochOrientInstance& instance,
                                    const NonAdaptivePolicy& policy,
                                    std::size_t max_exact_jobs = 12,
                                    std::uint64_t fallback_seed = 0,
                                    std::uint64_t fallback_replicates = 100000);

// One execution of the policy: branch draw, inclusion draws, then size
// draws in visiting order, all from `rng`.
Reward run_policy_once(const StochOrientInstance& instance,
                       const NonAdaptivePolicy& policy, CounterRng& rng);

struct SimulationSummary {
  std::uint64_t replicates = 0;
  double mean = 0.0;
  double standard_error = 0.0;
};

// Replicate r draws from stream r of `seed`, so results do not depend on
// evaluation order.
SimulationSummary simulate_policy(const StochOrientInstance& instance,
                                  const NonAdaptivePolicy& policy,
                                  std::uint64_t replicates, std::uint64_t seed);

SimulationSummary summarize(std::span<const double> samples);

}  // namespace orient

#endif  // ORIENT_STOCH_HPP_
