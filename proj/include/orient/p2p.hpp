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

#ifndef ORIENT_P2P_HPP_
#define ORIENT_P2P_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orient/error.hpp"
#include "orient/instances.hpp"
#include "orient/metric.hpp"
#include "orient/min_excess.hpp"

namespace orient {

// Shape A: u -> x directly, then an indirect x -> v section.
// Shape B: an indirect u -> x section, then x -> v directly.
enum class PivotShape { kA, kB };

template <typename R>
struct PivotCandidate {
  Vertex pivot = 0;
  PivotShape shape = PivotShape::kA;
  Distance eps_x = 0;
  Walk walk;
  R reward = R(0);
  Distance length = 0;
};

template <typename R>
struct P2PSolution {
  Walk walk;
  R reward = R(0);
  Distance length = 0;
  Vertex pivot = 0;
  PivotShape shape = PivotShape::kA;
};

// Excess allowance of the indirect section when the walk is split at `x`:
// budget - d(u,x) - d(x,v), or nullopt if negative.
inline std::optional<Distance> compute_eps_x(const MetricSpace& space,
                                             Vertex u, Vertex v,
                                             Distance budget, Vertex x) {
  const Distance eps = budget - space(u, x) - space(x, v);
  if (eps < 0) return std::nullopt;
  return eps;
}

template <typename R>
R walk_reward(const Walk& walk, std::span<const R> rewards) {
  R total = R(0);
  for (Vertex v : distinct_vertices(walk)) {
    total += rewards[static_cast<std::size_t>(v)];
  }
  return total;
}

// For every pivot x with a non-negative allowance, builds the two candidate
// walks (one min-excess call each) and returns the best one: highest reward,
// then shortest, then lowest pivot, shape A before B. Candidates whose
// length exceeds the budget (possible only with an approximate solver) are
// dropped. Every considered candidate is appended to `candidates` when
// non-null.
template <typename R>
P2PSolution<R> solve_p2p(const MetricSpace& space, std::span<const R> rewards,
                         Vertex u, Vertex v, Distance budget,
                         const MinExcessSolver<R>& solver,
                         std::vector<PivotCandidate<R>>* candidates = nullptr) {
  if (!space.contains(u) || !space.contains(v)) {
    fail(ErrorCode::kInvalidArgument, "endpoint out of range");
  }
  if (static_cast<int>(rewards.size()) != space.size()) {
    fail(ErrorCode::kInvalidArgument, "reward vector length != vertex count");
  }
  if (budget < space(u, v)) {
    fail(ErrorCode::kInfeasible,
         "budget " + std::to_string(budget) + " below d(u,v) = " +
             std::to_string(space(u, v)));
  }
  std::optional<P2PSolution<R>> best;
  const auto consider = [&](PivotCandidate<R> cand) {
    cand.length = walk_length(space, cand.walk);
    cand.reward = walk_reward(cand.walk, rewards);
    const bool fits = cand.length <= budget;
    if (fits && (!best || cand.reward > best->reward ||
                 (cand.reward == best->reward && cand.length < best->length))) {
      best = P2PSolution<R>{cand.walk, cand.reward, cand.length, cand.pivot,
                            cand.shape};
    }
    if (candidates) candidates->push_back(std::move(cand));
  };
  for (Vertex x = 0; x < space.size(); ++x) {
    const auto eps = compute_eps_x(space, u, v, budget, x);
    if (!eps) continue;
    const MinExcessSolution tail = solver.solve(space, rewards, x, v, *eps);
    consider(PivotCandidate<R>{x, PivotShape::kA, *eps,
                               concat(direct_walk(u, x), tail.walk)});
    const MinExcessSolution head = solver.solve(space, rewards, u, x, *eps);
    consider(PivotCandidate<R>{x, PivotShape::kB, *eps,
                               concat(head.walk, direct_walk(x, v))});
  }
  // Only reachable with an approximate solver that overshoots on every
  // pivot; the direct walk is always within budget.
  if (!best) {
    Walk direct = direct_walk(u, v);
    const R reward = walk_reward(direct, rewards);
    return P2PSolution<R>{direct, reward, space(u, v), u, PivotShape::kA};
  }
  return *best;
}

P2PSolution<Reward> solve_p2p(const P2PInstance& instance,
                              const MinExcessSolver<Reward>& solver);
P2PSolution<Reward> solve_p2p(const P2PInstance& instance);

}  // namespace orient

#endif  // ORIENT_P2P_HPP_
