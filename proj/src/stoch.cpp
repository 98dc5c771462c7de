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

#include "orient/stoch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "orient/error.hpp"

namespace orient {
namespace {

// Probability mass of the runs that are still able to collect, keyed by
// elapsed time.
using TimeDistribution = std::map<std::int64_t, Rational>;

struct StepResult {
  TimeDistribution alive;
  Rational expected_reward = 0;
};

// Travel from `from` to job `v` and process it.
StepResult advance(const StochOrientInstance& instance,
                   const TimeDistribution& alive, Vertex from, Vertex v) {
  StepResult out;
  const MetricSpace& d = instance.space;
  const Distance hop = d(from, v);
  const Distance onward = d(v, instance.terminal);
  const Reward reward = instance.rewards[static_cast<std::size_t>(v)];
  const SizeDistribution& sizes = instance.sizes[static_cast<std::size_t>(v)];
  for (const auto& [elapsed, mass] : alive) {
    const std::int64_t arrival = elapsed + hop;
    if (arrival + onward > instance.budget) continue;
    for (const SizeOutcome& o : sizes.outcomes()) {
      const std::int64_t done = arrival + o.size;
      if (done + onward > instance.budget) break;  // outcomes sorted by size
      const Rational p = mass * o.probability;
      out.alive[done] += p;
      out.expected_reward += p * reward;
    }
  }
  return out;
}

void check_order(const StochOrientInstance& instance,
                 std::span<const Vertex> order) {
  std::vector<bool> seen(static_cast<std::size_t>(instance.space.size()));
  for (Vertex v : order) {
    if (!instance.space.contains(v)) {
      fail(ErrorCode::kInvalidArgument, "job vertex out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::kInvalidArgument,
           "job " + std::to_string(v) + " listed twice");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

// Sum over inclusion patterns of jobs[k..] given the distribution reached so
// far; each pattern is weighted by q^|in| (1-q)^|out|.
Rational sampled_value(const StochOrientInstance& instance,
                       std::span<const Vertex> jobs, std::size_t k,
                       const TimeDistribution& alive, Vertex at,
                       const Rational& q) {
  if (k == jobs.size() || alive.empty()) return 0;
  Rational skip = 0;
  if (q != 1) skip = (1 - q) * sampled_value(instance, jobs, k + 1, alive, at, q);
  Rational take = 0;
  if (q != 0) {
    StepResult step = advance(instance, alive, at, jobs[k]);
    take = q * (step.expected_reward +
                sampled_value(instance, jobs, k + 1, step.alive, jobs[k], q));
  }
  return skip + take;
}

}  // namespace

Rational truncated_mean(const SizeDistribution& dist, const Rational& cap) {
  if (cap < 0) fail(ErrorCode::kInvalidArgument, "negative truncation cap");
  Rational mean = 0;
  for (const SizeOutcome& o : dist.outcomes()) {
    const Rational size(o.size);
    mean += o.probability * (size < cap ? size : cap);
  }
  return mean;
}

Rational single_vertex_reward(const StochOrientInstance& instance, Vertex v) {
  const MetricSpace& d = instance.space;
  const std::int64_t slack =
      instance.budget - d(instance.start, v) - d(v, instance.terminal);
  if (slack < 0) return 0;
  return instance.rewards[static_cast<std::size_t>(v)] *
         instance.sizes[static_cast<std::size_t>(v)].probability_at_most(slack);
}

KnapOrientInstance build_valid_knap_instance(const StochOrientInstance& instance,
                                             const Rational& cap) {
  if (cap < 0 || cap > instance.budget) {
    fail(ErrorCode::kInvalidArgument, "truncation scale outside [0, B]");
  }
  KnapOrientInstance knap;
  knap.space = instance.space;
  knap.rewards = instance.rewards;
  knap.sizes.reserve(instance.sizes.size());
  for (const SizeDistribution& dist : instance.sizes) {
    knap.sizes.push_back(truncated_mean(dist, cap));
  }
  knap.travel_budget = floor_to_int64(Rational(instance.budget) - cap);
  knap.knapsack_budget = cap;
  knap.start = instance.start;
  knap.end = instance.terminal;
  return knap;
}

std::vector<Rational> truncation_scales(std::int64_t budget) {
  std::vector<Rational> scales;
  if (budget >= 1) {
    int levels = 0;  // ceil(log2 budget)
    while ((std::int64_t{1} << levels) < budget) ++levels;
    for (int i = 0; i <= levels; ++i) {
      scales.emplace_back(Rational(budget) / (std::int64_t{1} << i));
    }
  }
  scales.emplace_back(0);
  return scales;
}

Rational exact_policy_value(const StochOrientInstance& instance,
                            std::span<const Vertex> order) {
  check_order(instance, order);
  TimeDistribution alive{{0, Rational(1)}};
  Rational total = 0;
  Vertex at = instance.start;
  for (Vertex v : order) {
    StepResult step = advance(instance, alive, at, v);
    total += step.expected_reward;
    alive = std::move(step.alive);
    at = v;
    if (alive.empty()) break;
  }
  return total;
}

NonAdaptivePolicy solve_p2p_stoch(const StochOrientInstance& instance,
                                  const StochOptions& options) {
  instance.validate();
  const MetricSpace& d = instance.space;
  if (instance.budget < d(instance.start, instance.terminal)) {
    fail(ErrorCode::kInfeasible, "budget below d(start, terminal)");
  }
  NonAdaptivePolicy policy;
  policy.branch_probability = options.branch_probability;
  policy.inclusion_probability = options.inclusion_probability;

  for (Vertex v = 0; v < d.size(); ++v) {
    const Rational r = single_vertex_reward(instance, v);
    if (r > policy.single_vertex_reward) {
      policy.single_vertex_reward = r;
      policy.single_vertex = v;
    }
  }

  const std::vector<Rational> scales = truncation_scales(instance.budget);
  std::optional<KnapRoute> best;
  for (std::size_t k = 0; k < scales.size(); ++k) {
    TruncationCandidate cand;
    cand.cap = scales[k];
    // Position k is i for W = B/2^i, and ceil(log2 B) + 1 for W = 0.
    cand.index = static_cast<int>(k);
    const KnapOrientInstance knap = build_valid_knap_instance(instance, cand.cap);
    if (knap.travel_budget >= d(knap.start, knap.end)) {
      KnapRoute route = solve_p2p_knap(knap, nullptr, options.limits);
      cand.feasible = true;
      cand.reward = route.reward;
      if (!best || route.reward > best->reward) {
        best = std::move(route);
        policy.chosen_index = cand.index;
      }
    }
    policy.candidates.push_back(cand);
  }
  // W = 0 leaves the full budget for travel, so `best` is always set.
  policy.path = best->walk;
  policy.jobs = best->collected;
  return policy;
}

PolicyValue randomized_policy_value(const StochOrientInstance& instance,
                                    const NonAdaptivePolicy& policy,
                                    std::size_t max_exact_jobs,
                                    std::uint64_t fallback_seed,
                                    std::uint64_t fallback_replicates) {
  const Rational& branch = policy.branch_probability;
  Rational single = 0;
  if (policy.single_vertex) {
    single = single_vertex_reward(instance, *policy.single_vertex);
  }
  PolicyValue out;
  if (policy.jobs.size() <= max_exact_jobs) {
    check_order(instance, policy.jobs);
    const TimeDistribution start{{0, Rational(1)}};
    const Rational path_value =
        sampled_value(instance, policy.jobs, 0, start, instance.start,
                      policy.inclusion_probability);
    out.value = branch * single + (1 - branch) * path_value;
    out.estimate = to_double(out.value);
    return out;
  }
  // Too many inclusion patterns: estimate only the path branch.
  NonAdaptivePolicy path_only = policy;
  path_only.branch_probability = 0;
  const SimulationSummary sim =
      simulate_policy(instance, path_only, fallback_replicates, fallback_seed);
  out.exact = false;
  out.estimate = to_double(branch * single) + to_double(1 - branch) * sim.mean;
  out.standard_error = to_double(1 - branch) * sim.standard_error;
  return out;
}

Reward run_policy_once(const StochOrientInstance& instance,
                       const NonAdaptivePolicy& policy, CounterRng& rng) {
  std::vector<Vertex> visit;
  if (rng.bernoulli(policy.branch_probability)) {
    if (policy.single_vertex) visit.push_back(*policy.single_vertex);
  } else {
    for (Vertex v : policy.jobs) {
      if (rng.bernoulli(policy.inclusion_probability)) visit.push_back(v);
    }
  }
  const MetricSpace& d = instance.space;
  std::vector<Rational> probs;
  Reward total = 0;
  std::int64_t elapsed = 0;
  Vertex at = instance.start;
  for (Vertex v : visit) {
    const Distance onward = d(v, instance.terminal);
    const std::int64_t arrival = elapsed + d(at, v);
    if (arrival + onward > instance.budget) break;
    const auto& outcomes = instance.sizes[static_cast<std::size_t>(v)].outcomes();
    probs.clear();
    for (const SizeOutcome& o : outcomes) probs.push_back(o.probability);
    const std::int64_t done = arrival + outcomes[rng.categorical(probs)].size;
    if (done + onward > instance.budget) break;
    total += instance.rewards[static_cast<std::size_t>(v)];
    elapsed = done;
    at = v;
  }
  return total;
}

SimulationSummary summarize(std::span<const double> samples) {
  SimulationSummary out;
  out.replicates = samples.size();
  if (samples.empty()) return out;
  long double sum = 0;
  for (double x : samples) sum += x;
  const long double mean = sum / samples.size();
  long double sq = 0;
  for (double x : samples) sq += (x - mean) * (x - mean);
  out.mean = static_cast<double>(mean);
  if (samples.size() > 1) {
    const long double variance = sq / (samples.size() - 1);
    out.standard_error =
        static_cast<double>(std::sqrt(variance / samples.size()));
  }
  return out;
}

SimulationSummary simulate_policy(const StochOrientInstance& instance,
                                  const NonAdaptivePolicy& policy,
                                  std::uint64_t replicates, std::uint64_t seed) {
  if (replicates == 0) fail(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  std::vector<double> samples(replicates);
  for (std::uint64_t r = 0; r < replicates; ++r) {
    CounterRng rng(seed, r);
    samples[r] = static_cast<double>(run_policy_once(instance, policy, rng));
  }
  return summarize(samples);
}

}  // namespace orient
