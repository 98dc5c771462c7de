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

#include "orient/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <string>

#include "orient/error.hpp"

namespace orient {
namespace {

void require_cap(int n, int cap, const char* what) {
  if (n > cap) {
    fail(ErrorCode::kCapExceeded, std::string(what) + " limited to " +
                                      std::to_string(cap) + " vertices, got " +
                                      std::to_string(n));
  }
}

void require_budget_cap(std::int64_t budget, const OracleLimits& limits) {
  if (budget > limits.max_state_budget) {
    fail(ErrorCode::kCapExceeded,
         "stochastic oracles limited to budget " +
             std::to_string(limits.max_state_budget) + ", got " +
             std::to_string(budget));
  }
}

}  // namespace

PathResult oracle_p2p_orienteering(const P2PInstance& instance,
                                   const OracleLimits& limits) {
  instance.validate();
  const MetricSpace& d = instance.space;
  require_cap(d.size(), limits.max_n_subset_dp, "subset DP");
  if (instance.budget < d(instance.start, instance.end)) {
    fail(ErrorCode::kInfeasible, "budget below d(start, end)");
  }
  const auto cache = shared_subset_paths(d, limits);
  const SubsetPathTable& table = cache->table(instance.start);
  const std::vector<Reward> sums =
      subset_sums(std::span<const Reward>(instance.rewards));
  const auto choice =
      best_subset_within(table, sums, instance.end, instance.budget);
  return PathResult{table.walk(choice->mask, instance.end), choice->reward,
                    choice->length};
}

PathResult oracle_p2p_by_enumeration(const P2PInstance& instance,
                                     const OracleLimits& limits) {
  instance.validate();
  const MetricSpace& d = instance.space;
  require_cap(d.size(), limits.max_n_permutation, "permutation enumeration");
  const Vertex u = instance.start;
  const Vertex v = instance.end;
  if (instance.budget < d(u, v)) {
    fail(ErrorCode::kInfeasible, "budget below d(start, end)");
  }
  std::vector<Vertex> others;
  for (Vertex x = 0; x < d.size(); ++x) {
    if (x != u && x != v) others.push_back(x);
  }
  const Reward base = instance.rewards[static_cast<std::size_t>(u)] +
                      (u == v ? 0 : instance.rewards[static_cast<std::size_t>(v)]);
  PathResult best{direct_walk(u, v), base, d(u, v)};
  std::vector<Vertex> prefix{u};
  std::vector<bool> used(others.size());
  std::function<void(Distance, Reward)> extend = [&](Distance length,
                                                     Reward reward) {
    const Distance total = length + d(prefix.back(), v);
    if (reward > best.reward || (reward == best.reward && total < best.length)) {
      Walk walk{prefix};
      walk = concat(walk, Walk{{v}});
      best = PathResult{walk, reward, total};
    }
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (used[i]) continue;
      const Vertex x = others[i];
      const Distance next = length + d(prefix.back(), x);
      if (next + d(x, v) > instance.budget) continue;
      used[i] = true;
      prefix.push_back(x);
      extend(next, reward + instance.rewards[static_cast<std::size_t>(x)]);
      prefix.pop_back();
      used[i] = false;
    }
  };
  extend(0, base);
  return best;
}

MinExcessResult oracle_min_excess(const MetricSpace& space,
                                  std::span<const Reward> rewards, Vertex u,
                                  Vertex v, Reward threshold,
                                  const OracleLimits& limits) {
  require_cap(space.size(), limits.max_n_subset_dp, "subset DP");
  if (!space.contains(u) || !space.contains(v) ||
      static_cast<int>(rewards.size()) != space.size()) {
    fail(ErrorCode::kInvalidArgument, "malformed min-excess query");
  }
  const auto cache = shared_subset_paths(space, limits);
  const SubsetPathTable& table = cache->table(u);
  const std::vector<Reward> sums = subset_sums(rewards);
  const VertexMask required = bit(u) | bit(v);
  std::optional<MinExcessResult> best;
  VertexMask best_mask = 0;
  for (std::size_t m = 0; m < sums.size(); ++m) {
    const auto mask = static_cast<VertexMask>(m);
    if ((mask & required) != required || sums[m] < threshold) continue;
    const Distance excess = table.length(mask, v) - space(u, v);
    // Ties go to the smallest vertex set: a zero threshold yields the
    // direct walk.
    if (!best || excess < best->excess ||
        (excess == best->excess && std::popcount(mask) < std::popcount(best_mask))) {
      best = MinExcessResult{Walk{}, sums[m], excess};
      best_mask = mask;
    }
  }
  if (!best) {
    fail(ErrorCode::kInfeasible,
         "reward threshold " + std::to_string(threshold) + " unattainable");
  }
  best->walk = table.walk(best_mask, v);
  return *best;
}

KnapRoute oracle_knap_orient(const KnapOrientInstance& instance,
                             const OracleLimits& limits) {
  instance.validate();
  const MetricSpace& d = instance.space;
  require_cap(d.size(), limits.max_n_subset_dp, "subset DP");
  const Vertex u = instance.start;
  const Vertex v = instance.end;
  if (instance.travel_budget < d(u, v)) {
    fail(ErrorCode::kInfeasible, "travel budget below d(start, end)");
  }
  const auto cache = shared_subset_paths(d, limits);
  const SubsetPathTable& table = cache->table(u);
  const std::vector<Reward> reward_sums =
      subset_sums(std::span<const Reward>(instance.rewards));
  const std::vector<Rational> size_sums =
      subset_sums(std::span<const Rational>(instance.sizes));
  const VertexMask endpoints = bit(u) | bit(v);

  bool found = false;
  VertexMask best_walk_mask = 0, best_collect = 0;
  Reward best_reward = 0;
  Distance best_length = 0;
  for (std::size_t m = 0; m < reward_sums.size(); ++m) {
    const auto mask = static_cast<VertexMask>(m);
    if ((mask & endpoints) != endpoints) continue;
    const Distance length = table.length(mask, v);
    if (length > instance.travel_budget) continue;
    const VertexMask inner = mask & ~endpoints;
    // Endpoints lie on every walk; collecting them is optional.
    for (VertexMask extra : {VertexMask{0}, bit(u), bit(v), endpoints}) {
      const VertexMask collect = inner | extra;
      if (size_sums[collect] > instance.knapsack_budget) continue;
      const Reward reward = reward_sums[collect];
      if (!found || reward > best_reward ||
          (reward == best_reward && length < best_length)) {
        found = true;
        best_walk_mask = mask;
        best_collect = collect;
        best_reward = reward;
        best_length = length;
      }
    }
  }
  // The direct walk collecting nothing is always feasible.
  Walk walk = table.walk(best_walk_mask, v);
  std::vector<Vertex> collected;
  for (Vertex x : distinct_vertices(walk)) {
    if (has(best_collect, x)) collected.push_back(x);
  }
  return make_route(instance, std::move(walk), std::move(collected));
}

OrderValue oracle_nonadaptive_stoch(const StochOrientInstance& instance,
                                    const OracleLimits& limits) {
  instance.validate();
  const int n = instance.space.size();
  require_cap(n, limits.max_n_nonadaptive, "non-adaptive stochastic oracle");
  require_budget_cap(instance.budget, limits);
  OrderValue best{{}, exact_policy_value(instance, std::span<const Vertex>())};
  std::vector<Vertex> order;
  std::vector<bool> used(static_cast<std::size_t>(n));
  std::function<void()> extend = [&]() {
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      const Rational value = exact_policy_value(instance, order);
      if (value > best.value ||
          (value == best.value && order.size() < best.order.size())) {
        best = OrderValue{order, value};
      }
      extend();
      order.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  extend();
  return best;
}

AdaptiveOracleResult oracle_adaptive_stoch(const StochOrientInstance& instance,
                                           const OracleLimits& limits) {
  instance.validate();
  const MetricSpace& d = instance.space;
  const int n = d.size();
  require_cap(n, limits.max_n_adaptive, "adaptive stochastic oracle");
  require_budget_cap(instance.budget, limits);
  for (const SizeDistribution& dist : instance.sizes) {
    if (dist.support_size() > limits.max_support_adaptive) {
      fail(ErrorCode::kCapExceeded, "adaptive oracle limited to supports of size " +
                                        std::to_string(limits.max_support_adaptive));
    }
  }
  const Vertex terminal = instance.terminal;
  AdaptiveOracleResult result;
  std::map<AdaptiveState, Rational> memo;
  std::function<Rational(const AdaptiveState&)> value_of =
      [&](const AdaptiveState& state) -> Rational {
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    Rational best = 0;
    Vertex choice = AdaptiveOracleResult::kStop;
    for (Vertex v = 0; v < n; ++v) {
      if (has(state.done, v)) continue;
      const std::int64_t arrival = state.elapsed + d(state.at, v);
      if (arrival + d(v, terminal) > instance.budget) continue;
      Rational expected = 0;
      for (const SizeOutcome& o :
           instance.sizes[static_cast<std::size_t>(v)].outcomes()) {
        const std::int64_t done = arrival + o.size;
        // A missed job leaves no time for anything else.
        if (done + d(v, terminal) > instance.budget) continue;
        const AdaptiveState next{v, static_cast<VertexMask>(state.done | bit(v)), done};
        expected += o.probability *
                    (instance.rewards[static_cast<std::size_t>(v)] + value_of(next));
      }
      if (expected > best) {
        best = expected;
        choice = v;
      }
    }
    memo.emplace(state, best);
    result.decisions.emplace(state, choice);
    return best;
  };
  result.value = value_of(AdaptiveState{instance.start, 0, 0});
  return result;
}

TWRoute oracle_time_windows(const TWInstance& instance, const Rational& slack,
                            const OracleLimits& limits) {
  instance.validate();
  const MetricSpace& d = instance.space;
  const int n = d.size();
  require_cap(n, limits.max_n_permutation, "time-window enumeration");
  // Deterministic times are integers, so the stretched deadline floors.
  std::vector<std::int64_t> latest(static_cast<std::size_t>(n));
  Reward remaining_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    latest[vi] = floor_to_int64(slack * instance.deadline[vi]);
    remaining_total += instance.rewards[vi];
  }

  struct Stop {
    Vertex vertex;
    std::int64_t arrival;
    std::int64_t start;
  };
  std::vector<Stop> path, best_path;
  Reward best_reward = 0;
  std::int64_t best_finish = 0;
  std::vector<bool> used(static_cast<std::size_t>(n));
  std::function<void(Vertex, std::int64_t, Reward, Reward)> extend =
      [&](Vertex at, std::int64_t clock, Reward reward, Reward remaining) {
        if (reward > best_reward || (reward == best_reward && clock < best_finish &&
                                     !best_path.empty())) {
          best_reward = reward;
          best_finish = clock;
          best_path = path;
        }
        if (reward + remaining <= best_reward) return;
        for (Vertex v = 0; v < n; ++v) {
          const auto vi = static_cast<std::size_t>(v);
          if (used[vi]) continue;
          const std::int64_t arrival = clock + d(at, v);
          const std::int64_t start = std::max(arrival, instance.release[vi]);
          if (start > latest[vi]) continue;
          used[vi] = true;
          path.push_back(Stop{v, arrival, start});
          extend(v, start, reward + instance.rewards[vi],
                 remaining - instance.rewards[vi]);
          path.pop_back();
          used[vi] = false;
        }
      };
  extend(instance.root, 0, 0, remaining_total);

  TWRoute route;
  route.walk = Walk{{instance.root}};
  for (const Stop& stop : best_path) {
    route.walk = concat(route.walk, Walk{{stop.vertex}});
    route.visits.push_back(TWVisit{stop.vertex, Rational(stop.arrival),
                                   Rational(stop.start), Rational(stop.start)});
  }
  route.reward = best_reward;
  return route;
}

}  // namespace orient
