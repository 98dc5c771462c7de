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

#include "orient/knap.hpp"

#include <algorithm>
#include <string>

#include "orient/error.hpp"
#include "orient/min_excess.hpp"
#include "orient/p2p.hpp"

namespace orient {
namespace {

struct Item {
  std::size_t position;
  Vertex vertex;
};

// Multiplies non-negative rationals by the lcm of their denominators. The
// P2P algorithm only compares rewards, so the integer copy selects the same
// walk; nullopt when totals could overflow 64 bits.
std::optional<std::vector<Reward>> scale_to_integers(
    const std::vector<Rational>& values) {
  BigInt lcm = 1;
  for (const Rational& x : values) {
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  }
  const BigInt limit = BigInt(1) << 56;
  std::vector<Reward> out;
  out.reserve(values.size());
  for (const Rational& x : values) {
    const BigInt scaled = boost::multiprecision::numerator(x) *
                          (lcm / boost::multiprecision::denominator(x));
    if (scaled > limit) return std::nullopt;
    out.push_back(static_cast<Reward>(scaled));
  }
  return out;
}

}  // namespace

KnapRoute make_route(const KnapOrientInstance& instance, Walk walk,
                     std::vector<Vertex> collected) {
  KnapRoute route;
  route.length = walk_length(instance.space, walk);
  for (Vertex v : collected) {
    route.reward += instance.rewards[static_cast<std::size_t>(v)];
    route.size += instance.sizes[static_cast<std::size_t>(v)];
  }
  route.walk = std::move(walk);
  route.collected = std::move(collected);
  return route;
}

KnapOrientInstance preprocess_oversize(const KnapOrientInstance& instance) {
  KnapOrientInstance out = instance;
  for (std::size_t v = 0; v < out.rewards.size(); ++v) {
    if (out.sizes[v] > out.knapsack_budget) out.rewards[v] = 0;
  }
  return out;
}

std::vector<Rational> lagrangian_schedule(const KnapOrientInstance& instance) {
  std::vector<Rational> thetas{Rational(0)};
  const Rational& w = instance.knapsack_budget;
  if (w <= 0) return thetas;
  Reward r_max = 0;
  Reward r_sum = 0;
  for (Reward r : instance.rewards) {
    r_max = std::max(r_max, r);
    r_sum += r;
  }
  if (r_max == 0) return thetas;
  const auto n = static_cast<std::int64_t>(instance.rewards.size());
  const Rational lo = Rational(r_max) / (2 * w * n);
  const Rational hi = 2 * Rational(r_sum) / w;
  for (Rational theta = lo;; theta *= 2) {
    thetas.push_back(theta);
    if (theta >= hi) break;
  }
  return thetas;
}

std::vector<Rational> lagrangian_rewards(const KnapOrientInstance& instance,
                                         const Rational& theta) {
  if (theta < 0) fail(ErrorCode::kInvalidArgument, "negative multiplier");
  std::vector<Rational> out(instance.rewards.size());
  for (std::size_t v = 0; v < out.size(); ++v) {
    const Rational altered = instance.rewards[v] - theta * instance.sizes[v];
    out[v] = altered > 0 ? altered : Rational(0);
  }
  return out;
}

KnapRoute split_best_segment(const KnapOrientInstance& instance,
                             const Walk& walk) {
  if (walk.empty() || walk.front() != instance.start ||
      walk.back() != instance.end) {
    fail(ErrorCode::kInvalidArgument, "walk does not join start and end");
  }
  std::vector<Item> items;
  std::vector<bool> seen(static_cast<std::size_t>(instance.space.size()));
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    const auto v = static_cast<std::size_t>(walk.vertices[i]);
    if (seen[v]) continue;
    seen[v] = true;
    if (instance.rewards[v] > 0 &&
        instance.sizes[v] <= instance.knapsack_budget) {
      items.push_back({i, walk.vertices[i]});
    }
  }
  if (items.empty()) {
    return make_route(instance, direct_walk(instance.start, instance.end), {});
  }

  // Greedy maximal runs; each run is [first, last) into `items`.
  std::size_t best_first = 0, best_last = 0;
  Reward best_reward = -1;
  std::size_t first = 0;
  while (first < items.size()) {
    std::size_t last = first;
    Rational load = 0;
    Reward reward = 0;
    while (last < items.size()) {
      const auto v = static_cast<std::size_t>(items[last].vertex);
      if (load + instance.sizes[v] > instance.knapsack_budget) break;
      load += instance.sizes[v];
      reward += instance.rewards[v];
      ++last;
    }
    if (reward > best_reward) {
      best_reward = reward;
      best_first = first;
      best_last = last;
    }
    first = last;
  }

  const std::size_t from = items[best_first].position;
  const std::size_t to = items[best_last - 1].position;
  Walk middle{std::vector<Vertex>(walk.vertices.begin() + static_cast<std::ptrdiff_t>(from),
                                  walk.vertices.begin() + static_cast<std::ptrdiff_t>(to) + 1)};
  Walk route_walk =
      concat(concat(direct_walk(instance.start, middle.front()), middle),
             direct_walk(middle.back(), instance.end));
  std::vector<Vertex> collected;
  for (std::size_t k = best_first; k < best_last; ++k) {
    collected.push_back(items[k].vertex);
  }
  return make_route(instance, std::move(route_walk), std::move(collected));
}

KnapRoute solve_p2p_knap(const KnapOrientInstance& raw,
                         std::vector<KnapSearchEntry>* search_log,
                         const OracleLimits& limits) {
  raw.validate();
  if (raw.travel_budget < raw.space(raw.start, raw.end)) {
    fail(ErrorCode::kInfeasible,
         "travel budget " + std::to_string(raw.travel_budget) +
             " below d(start,end)");
  }
  const KnapOrientInstance instance = preprocess_oversize(raw);
  const ExactMinExcess<Reward> integer_solver(limits);
  const ExactMinExcess<Rational> rational_solver(limits);

  std::optional<KnapRoute> best;
  for (const Rational& theta : lagrangian_schedule(instance)) {
    const std::vector<Rational> altered = lagrangian_rewards(instance, theta);
    Walk tour;
    if (const auto scaled = scale_to_integers(altered)) {
      tour = solve_p2p<Reward>(instance.space, *scaled, instance.start,
                               instance.end, instance.travel_budget,
                               integer_solver)
                 .walk;
    } else {
      tour = solve_p2p<Rational>(instance.space, altered, instance.start,
                                 instance.end, instance.travel_budget,
                                 rational_solver)
                 .walk;
    }
    KnapRoute route = split_best_segment(instance, tour);
    // Report rewards against the caller's instance; preprocessing only
    // zeroes vertices that are never collected.
    route = make_route(raw, std::move(route.walk), std::move(route.collected));
    if (search_log) search_log->push_back({theta, route.reward});
    if (!best || route.reward > best->reward) best = std::move(route);
  }
  return *best;
}

bool route_is_feasible(const KnapOrientInstance& instance,
                       const KnapRoute& route) {
  if (route.walk.empty() || route.walk.front() != instance.start ||
      route.walk.back() != instance.end) {
    return false;
  }
  if (walk_length(instance.space, route.walk) > instance.travel_budget) {
    return false;
  }
  const std::vector<Vertex> on_walk = distinct_vertices(route.walk);
  Rational size = 0;
  std::vector<Vertex> seen;
  for (Vertex v : route.collected) {
    if (std::find(on_walk.begin(), on_walk.end(), v) == on_walk.end()) {
      return false;
    }
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    seen.push_back(v);
    size += instance.sizes[static_cast<std::size_t>(v)];
  }
  return size <= instance.knapsack_budget;
}

}  // namespace orient
