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

#include "orient/time_windows.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "orient/error.hpp"
#include "orient/min_excess.hpp"
#include "orient/p2p.hpp"

namespace orient {
namespace {

// (1+eps)^(3^s) >= 16^(2^s), evaluated exactly; only used near the
// boundary where floating point cannot decide.
bool margin_reached_exact(const Rational& epsilon, int s) {
  const Rational base = 1 + epsilon;
  BigInt three_s = 1, two_s = 1;
  for (int i = 0; i < s; ++i) {
    three_s *= 3;
    two_s *= 2;
  }
  const auto e1 = static_cast<unsigned>(three_s);
  const auto e2 = static_cast<unsigned>(two_s) * 4u;  // 16^(2^s) = 2^(4 * 2^s)
  const BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), e1);
  const BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), e1);
  return num >= (den << e2);
}

// f^(1.5^s) <= 1/4  <=>  1.5^s * ln(1+eps) >= ln 16.
bool margin_reached(const Rational& epsilon, int s) {
  const long double lhs =
      std::pow(1.5L, s) * std::log1p(static_cast<long double>(to_double(epsilon)));
  const long double rhs = std::log(16.0L);
  if (std::fabs(lhs - rhs) > 1e-12L * rhs || s > 12) return lhs >= rhs;
  return margin_reached_exact(epsilon, s);
}

struct DPState {
  bool reached = false;
  Rational value;
  VertexMask used = 0;
  int prev_checkpoint = -1;
  Vertex prev_vertex = -1;
  std::optional<TWSegment> leg;
};

struct LegKey {
  Vertex from;
  Vertex to;
  Distance budget;
  std::vector<Reward> rewards;
  auto operator<=>(const LegKey&) const = default;
};

struct StochLeg {
  NonAdaptivePolicy policy;
  Rational value;
};

}  // namespace

MarginParameters compute_margin_params(const Rational& epsilon) {
  if (epsilon <= 0) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
  MarginParameters params;
  params.epsilon = epsilon;
  params.f = 1.0 / std::sqrt(1.0 + to_double(epsilon));
  int s = 0;
  while (!margin_reached(epsilon, s)) ++s;
  params.s = s;
  return params;
}

GroupPartition partition_groups(
    const TWInstance& instance, const MarginParameters& params,
    std::span<const std::optional<Rational>> visit_times) {
  const int n = instance.space.size();
  if (static_cast<int>(visit_times.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "visit-time vector length != vertex count");
  }
  GroupPartition out;
  out.groups.resize(static_cast<std::size_t>(params.s) + 2);
  const long double log_f = std::log(static_cast<long double>(params.f));
  // upper[i] = f^(1.5^(i-1)) bounds V_i from above, i = 1..s; upper[0] = 1.
  std::vector<long double> level(static_cast<std::size_t>(params.s) + 1);
  for (int i = 0; i <= params.s; ++i) {
    level[static_cast<std::size_t>(i)] = std::exp(std::pow(1.5L, i) * log_f);
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto& t = visit_times[static_cast<std::size_t>(v)];
    const std::int64_t deadline = instance.deadline[static_cast<std::size_t>(v)];
    if (!t || *t <= 0 || deadline <= 0 || *t > deadline) {
      out.unassigned.push_back(v);
      continue;
    }
    const Rational exact_ratio = *t / deadline;
    const auto ratio = static_cast<long double>(to_double(exact_ratio));
    std::size_t group = static_cast<std::size_t>(params.s) + 1;
    if (ratio > level[0]) {
      group = 0;
    } else {
      for (int i = 1; i <= params.s; ++i) {
        if (ratio > level[static_cast<std::size_t>(i)]) {
          group = static_cast<std::size_t>(i);
          break;
        }
      }
    }
    out.groups[group].push_back(v);
  }
  return out;
}

std::vector<TWVerdict> check_tw_feasibility(std::span<const TWVisit> trace,
                                            const TWInstance& instance,
                                            const Rational& slack) {
  std::vector<TWVerdict> verdicts;
  std::vector<bool> counted(static_cast<std::size_t>(instance.space.size()));
  for (const TWVisit& visit : trace) {
    TWVerdict verdict{visit.vertex, false, ""};
    const auto v = static_cast<std::size_t>(visit.vertex);
    const Rational latest = slack * instance.deadline[v];
    if (!instance.space.contains(visit.vertex)) {
      verdict.reason = "unknown vertex";
    } else if (counted[v]) {
      verdict.reason = "already counted";
    } else if (visit.start < instance.release[v]) {
      verdict.reason = "service starts before release " +
                       std::to_string(instance.release[v]);
    } else if (visit.completion > latest) {
      verdict.reason = "completes at " + to_string(visit.completion) +
                       " after " + to_string(latest);
    } else {
      verdict.counted = true;
      counted[v] = true;
    }
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

std::vector<Rational> checkpoint_grid(const TWInstance& instance,
                                      const Rational& epsilon) {
  if (epsilon <= 0) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
  std::int64_t max_deadline = 0;
  for (std::int64_t d : instance.deadline) max_deadline = std::max(max_deadline, d);
  const Rational horizon = (1 + epsilon) * max_deadline;
  // 1 is always present so that a zero horizon still has one transition.
  std::vector<Rational> grid{Rational(0), Rational(1)};
  for (Rational tau = 1 + epsilon; tau <= horizon; tau *= (1 + epsilon)) {
    grid.push_back(tau);
  }
  return grid;
}

TWPlan plan_time_windows(const TWInstance& instance, const Rational& epsilon,
                         TWSubroutine subroutine) {
  instance.validate();
  const MetricSpace& d = instance.space;
  const int n = d.size();
  TWPlan plan;
  plan.epsilon = epsilon;
  plan.slack = 1 + epsilon;
  plan.checkpoints = checkpoint_grid(instance, epsilon);
  const auto& grid = plan.checkpoints;
  const int levels = static_cast<int>(grid.size());
  const bool stochastic = subroutine == TWSubroutine::kStochasticP2P;

  std::vector<Rational> stretched(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    stretched[static_cast<std::size_t>(v)] =
        plan.slack * instance.deadline[static_cast<std::size_t>(v)];
  }

  const ExactMinExcess<Reward> solver;
  std::map<LegKey, StochLeg> stoch_memo;
  std::vector<std::vector<DPState>> states(
      static_cast<std::size_t>(levels), std::vector<DPState>(static_cast<std::size_t>(n)));
  states[0][static_cast<std::size_t>(instance.root)].reached = true;

  const auto relax = [&](int k, Vertex y, const Rational& value, VertexMask used,
                         int j, Vertex x, std::optional<TWSegment> leg) {
    DPState& target = states[static_cast<std::size_t>(k)][static_cast<std::size_t>(y)];
    if (target.reached && target.value >= value) return;
    target = DPState{true, value, used, j, x, std::move(leg)};
  };

  std::vector<Reward> eligible(static_cast<std::size_t>(n));
  for (int j = 0; j < levels; ++j) {
    for (Vertex x = 0; x < n; ++x) {
      const DPState here = states[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
      if (!here.reached) continue;
      const Rational& depart = grid[static_cast<std::size_t>(j)];
      for (int k = j + 1; k < levels; ++k) {
        const Rational& arrive_by = grid[static_cast<std::size_t>(k)];
        relax(k, x, here.value, here.used, j, x, std::nullopt);
        const Distance budget = floor_to_int64(arrive_by - depart);
        for (Vertex y = 0; y < n; ++y) {
          if (budget < d(x, y)) continue;
          bool any_inner = false;
          for (Vertex v = 0; v < n; ++v) {
            const auto vi = static_cast<std::size_t>(v);
            eligible[vi] = 0;
            if (has(here.used, v) || instance.rewards[vi] == 0) continue;
            const Rational earliest = depart + d(x, v);
            if (instance.release[vi] > earliest) continue;
            if (v == x && !stochastic) {
              // Served on departure, at a known time.
              if (depart > stretched[vi]) continue;
            } else if (v == y) {
              if (stochastic ? stretched[vi] < arrive_by : earliest > stretched[vi]) {
                continue;
              }
            } else if (stretched[vi] < arrive_by - d(v, y)) {
              continue;
            }
            eligible[vi] = instance.rewards[vi];
            if (v != x && v != y) any_inner = true;
          }

          TWSegment leg;
          leg.from = x;
          leg.to = y;
          leg.depart = depart;
          leg.arrive_by = arrive_by;
          VertexMask used = here.used;
          if (!stochastic) {
            leg.walk = any_inner
                           ? solve_p2p<Reward>(d, eligible, x, y, budget, solver).walk
                           : direct_walk(x, y);
            // Keep the vertices whose actual visit time lies in the
            // stretched window (the end vertex is only screened above).
            Rational clock = depart;
            Reward gained = 0;
            for (std::size_t i = 0; i < leg.walk.vertices.size(); ++i) {
              const Vertex v = leg.walk.vertices[i];
              const auto vi = static_cast<std::size_t>(v);
              if (i > 0) clock += d(leg.walk.vertices[i - 1], v);
              if (eligible[vi] == 0 || has(used, v)) continue;
              if (clock < instance.release[vi] || clock > stretched[vi]) continue;
              leg.claimed.push_back(v);
              used |= bit(v);
              gained += eligible[vi];
            }
            leg.planned_reward = gained;
          } else {
            if (std::all_of(eligible.begin(), eligible.end(),
                            [](Reward r) { return r == 0; })) {
              leg.walk = direct_walk(x, y);
              leg.planned_reward = 0;
            } else {
              LegKey key{x, y, budget, eligible};
              auto it = stoch_memo.find(key);
              if (it == stoch_memo.end()) {
                StochOrientInstance sub;
                sub.space = d;
                sub.rewards = eligible;
                sub.sizes.reserve(static_cast<std::size_t>(n));
                for (Vertex v = 0; v < n; ++v) sub.sizes.push_back(instance.waiting_time(v));
                sub.budget = budget;
                sub.start = x;
                sub.terminal = y;
                StochLeg computed;
                computed.policy = solve_p2p_stoch(sub);
                const PolicyValue pv = randomized_policy_value(sub, computed.policy);
                computed.value = pv.exact ? pv.value : parse_rational(std::to_string(pv.estimate));
                it = stoch_memo.emplace(std::move(key), std::move(computed)).first;
              }
              const StochLeg& cached = it->second;
              leg.policy = cached.policy;
              leg.walk = cached.policy.path;
              leg.planned_reward = cached.value;
              for (Vertex v : cached.policy.jobs) {
                leg.claimed.push_back(v);
                used |= bit(v);
              }
              if (const auto single = cached.policy.single_vertex) {
                if (!has(used, *single)) leg.claimed.push_back(*single);
                used |= bit(*single);
              }
            }
          }
          const Rational value = here.value + leg.planned_reward;
          relax(k, y, value, used, j, x, std::move(leg));
        }
      }
    }
  }

  int best_j = 0;
  Vertex best_x = instance.root;
  for (int j = 0; j < levels; ++j) {
    for (Vertex x = 0; x < n; ++x) {
      const DPState& s = states[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
      if (!s.reached) continue;
      if (s.value > states[static_cast<std::size_t>(best_j)][static_cast<std::size_t>(best_x)].value) {
        best_j = j;
        best_x = x;
      }
    }
  }
  plan.planned_reward =
      states[static_cast<std::size_t>(best_j)][static_cast<std::size_t>(best_x)].value;
  for (int j = best_j, x = best_x; j > 0 || x != instance.root;) {
    const DPState& s = states[static_cast<std::size_t>(j)][static_cast<std::size_t>(x)];
    if (s.prev_checkpoint < 0) break;
    if (s.leg) plan.segments.push_back(*s.leg);
    const int pj = s.prev_checkpoint;
    x = s.prev_vertex;
    j = pj;
  }
  std::reverse(plan.segments.begin(), plan.segments.end());
  return plan;
}

TWSolution replay_plan(const TWInstance& instance, const TWPlan& plan) {
  const MetricSpace& d = instance.space;
  TWSolution out;
  out.plan = plan;
  out.walk = Walk{{instance.root}};
  Rational clock = 0;
  for (const TWSegment& leg : plan.segments) {
    if (leg.policy) {
      fail(ErrorCode::kInvalidArgument, "stochastic plans are simulated, not replayed");
    }
    if (leg.walk.front() != out.walk.back()) {
      fail(ErrorCode::kInternal, "plan segments are not contiguous");
    }
    if (clock < leg.depart) clock = leg.depart;
    std::vector<Vertex> pending = leg.claimed;
    for (std::size_t i = 0; i < leg.walk.vertices.size(); ++i) {
      const Vertex v = leg.walk.vertices[i];
      if (i > 0) clock += d(leg.walk.vertices[i - 1], v);
      auto it = std::find(pending.begin(), pending.end(), v);
      if (it == pending.end()) continue;
      pending.erase(it);
      const auto vi = static_cast<std::size_t>(v);
      TWVisit visit{v, clock, clock, clock};
      if (visit.start < instance.release[vi]) visit.start = instance.release[vi];
      visit.completion = visit.start;
      clock = visit.completion;
      out.visits.push_back(visit);
    }
    out.walk = concat(out.walk, leg.walk);
  }
  for (const TWVerdict& verdict : check_tw_feasibility(out.visits, instance, plan.slack)) {
    if (verdict.counted) out.reward += instance.rewards[static_cast<std::size_t>(verdict.vertex)];
  }
  return out;
}

TWSolution solve_time_windows(const TWInstance& instance,
                              const Rational& epsilon) {
  return replay_plan(instance,
                     plan_time_windows(instance, epsilon, TWSubroutine::kDeterministicP2P));
}

Reward run_tw_plan_once(const TWInstance& instance, const TWPlan& plan,
                        CounterRng& rng, std::vector<TWVisit>* trace) {
  const MetricSpace& d = instance.space;
  std::vector<bool> counted(static_cast<std::size_t>(d.size()));
  std::vector<Rational> probs;
  Reward total = 0;
  Rational clock = 0;
  Vertex at = instance.root;
  for (const TWSegment& leg : plan.segments) {
    if (clock < leg.depart) clock = leg.depart;
    std::vector<Vertex> visit;
    if (leg.policy) {
      const NonAdaptivePolicy& policy = *leg.policy;
      if (rng.bernoulli(policy.branch_probability)) {
        if (policy.single_vertex) visit.push_back(*policy.single_vertex);
      } else {
        for (Vertex v : policy.jobs) {
          if (rng.bernoulli(policy.inclusion_probability)) visit.push_back(v);
        }
      }
    } else {
      visit = leg.claimed;
    }
    for (Vertex v : visit) {
      const auto vi = static_cast<std::size_t>(v);
      const Rational arrival = clock + d(at, v);
      const Rational start = arrival < instance.release[vi]
                                 ? Rational(instance.release[vi])
                                 : arrival;
      const auto& outcomes = instance.waiting_time(v).outcomes();
      probs.clear();
      for (const SizeOutcome& o : outcomes) probs.push_back(o.probability);
      const Rational completion = start + outcomes[rng.categorical(probs)].size;
      if (trace) trace->push_back(TWVisit{v, arrival, start, completion});
      if (!counted[vi] && completion <= plan.slack * instance.deadline[vi]) {
        counted[vi] = true;
        total += instance.rewards[vi];
      }
      clock = completion;
      at = v;
      if (clock + d(v, leg.to) > leg.arrive_by) break;
    }
    clock += d(at, leg.to);
    at = leg.to;
  }
  return total;
}

SimulationSummary simulate_tw_plan(const TWInstance& instance,
                                   const TWPlan& plan, std::uint64_t replicates,
                                   std::uint64_t seed) {
  if (replicates == 0) fail(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  std::vector<double> samples(replicates);
  for (std::uint64_t r = 0; r < replicates; ++r) {
    CounterRng rng(seed, r);
    samples[r] = static_cast<double>(run_tw_plan_once(instance, plan, rng, nullptr));
  }
  return summarize(samples);
}

}  // namespace orient
