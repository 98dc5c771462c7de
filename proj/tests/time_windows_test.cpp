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

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "gtest/gtest.h"
#include "orient/error.hpp"
#include "orient/oracles.hpp"
#include "orient/p2p.hpp"
#include "orient/time_windows.hpp"
#include "reference.hpp"
#include "test_util.hpp"

namespace orient {
namespace {

using testing::generated;
using testing::line_space;
using testing::profile_for;

TWInstance two_node() {
  TWInstance t;
  t.space = line_space({0, 1, 2});
  t.rewards = {0, 5, 5};
  t.release = {0, 0, 0};
  t.deadline = {0, 2, 10};
  return t;
}

// Every claimed visit must pass the checker at slack 1 + eps.
void expect_claims_hold(const TWInstance& t, const Rational& eps, const TWSolution& sol) {
  const auto verdicts = check_tw_feasibility(sol.visits, t, 1 + eps);
  Reward counted = 0;
  for (const TWVerdict& v : verdicts) {
    EXPECT_TRUE(v.counted) << "vertex " << v.vertex << ": " << v.reason;
    if (v.counted) counted += t.rewards[static_cast<std::size_t>(v.vertex)];
  }
  EXPECT_EQ(counted, sol.reward);
}

TEST(MarginParamsTest, Examples) {
  const MarginParameters three = compute_margin_params(3);
  EXPECT_DOUBLE_EQ(three.f, 0.5);
  EXPECT_EQ(three.s, 2);
  EXPECT_EQ(compute_margin_params(15).s, 0);
  EXPECT_EQ(compute_margin_params(1).s, 4);
}

TEST(MarginParamsTest, SmallestSatisfyingExponent) {
  for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(2), Rational(7),
                             Rational(1, 10), Rational(99)}) {
    const MarginParameters p = compute_margin_params(eps);
    const double f = 1.0 / std::sqrt(1.0 + to_double(eps));
    EXPECT_LE(std::pow(f, std::pow(1.5, p.s)), 0.25 + 1e-12) << eps;
    if (p.s > 0) {
      EXPECT_GT(std::pow(f, std::pow(1.5, p.s - 1)), 0.25) << eps;
    }
  }
}

TEST(PartitionGroupsTest, Examples) {
  TWInstance t;
  t.space = line_space({0, 1, 2, 3});
  t.rewards = {0, 1, 1, 1};
  t.release = {0, 0, 0, 0};
  t.deadline = {0, 10, 10, 10};
  const MarginParameters p = compute_margin_params(3);
  const std::vector<std::optional<Rational>> times = {std::nullopt, Rational(9), Rational(2),
                                                      Rational(4)};
  const GroupPartition g = partition_groups(t, p, times);
  ASSERT_EQ(g.groups.size(), 4u);
  EXPECT_EQ(g.groups[0], (std::vector<Vertex>{1}));
  EXPECT_EQ(g.groups[1], (std::vector<Vertex>{3}));
  EXPECT_TRUE(g.groups[2].empty());
  EXPECT_EQ(g.groups[3], (std::vector<Vertex>{2}));
  EXPECT_EQ(g.unassigned, (std::vector<Vertex>{0}));
}

TEST(PartitionGroupsTest, LateVisitIsUnassigned) {
  TWInstance t = two_node();
  const std::vector<std::optional<Rational>> times = {std::nullopt, Rational(3), Rational(10)};
  const GroupPartition g = partition_groups(t, compute_margin_params(1), times);
  EXPECT_EQ(g.unassigned, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(g.groups[0], (std::vector<Vertex>{2}));
}

TEST(PartitionGroupsTest, GroupsPartitionAssignableVertices) {
  for (int i = 0; i < 40; ++i) {
    const auto t = generated<TWInstance>(ProblemKind::kTW, 3 + i % 6, 500 + i, profile_for(i));
    const TWRoute route = oracle_time_windows(t);
    std::vector<std::optional<Rational>> times(static_cast<std::size_t>(t.space.size()));
    for (const TWVisit& v : route.visits) times[static_cast<std::size_t>(v.vertex)] = v.start;
    for (const Rational& eps : {Rational(1, 4), Rational(1), Rational(3)}) {
      const MarginParameters p = compute_margin_params(eps);
      const GroupPartition g = partition_groups(t, p, times);
      ASSERT_EQ(g.groups.size(), static_cast<std::size_t>(p.s) + 2);
      std::vector<int> seen(static_cast<std::size_t>(t.space.size()));
      for (const auto& group : g.groups) {
        for (Vertex v : group) ++seen[static_cast<std::size_t>(v)];
      }
      for (Vertex v : g.unassigned) ++seen[static_cast<std::size_t>(v)];
      for (Vertex v = 0; v < t.space.size(); ++v) {
        ASSERT_EQ(seen[static_cast<std::size_t>(v)], 1);
        const auto& tv = times[static_cast<std::size_t>(v)];
        const bool assignable =
            tv && *tv > 0 && *tv <= t.deadline[static_cast<std::size_t>(v)];
        ASSERT_EQ(std::find(g.unassigned.begin(), g.unassigned.end(), v) == g.unassigned.end(),
                  assignable);
      }
    }
  }
}

TEST(PartitionGroupsTest, RejectsShortTimeVector) {
  const std::vector<std::optional<Rational>> times(2);
  EXPECT_THROW(partition_groups(two_node(), compute_margin_params(1), times), Error);
}

TEST(CheckpointGridTest, GeometricUpToStretchedHorizon) {
  TWInstance t = two_node();
  EXPECT_EQ(checkpoint_grid(t, 1), (std::vector<Rational>{0, 1, 2, 4, 8, 16}));
  t.deadline = {0, 2, 3};
  EXPECT_EQ(checkpoint_grid(t, Rational(1, 2)),
            (std::vector<Rational>{0, 1, Rational(3, 2), Rational(9, 4), Rational(27, 8)}));
  EXPECT_THROW(checkpoint_grid(t, 0), Error);
}

TEST(SolveTimeWindowsTest, TwoNodeLineCollectsBoth) {
  const TWInstance t = two_node();
  for (const Rational& eps : {Rational(1, 4), Rational(1)}) {
    const TWSolution sol = solve_time_windows(t, eps);
    EXPECT_EQ(sol.reward, 10);
    expect_claims_hold(t, eps, sol);
  }
}

TEST(SolveTimeWindowsTest, RootAloneIsCollected) {
  TWInstance t;
  t.space = line_space({0});
  t.rewards = {8};
  t.release = {0};
  t.deadline = {0};
  EXPECT_EQ(checkpoint_grid(t, 1), (std::vector<Rational>{0, 1}));
  const TWSolution sol = solve_time_windows(t, 1);
  EXPECT_EQ(sol.reward, 8);
  expect_claims_hold(t, 1, sol);
}

TEST(SolveTimeWindowsTest, TightDeadlineCollectableWithSlack) {
  TWInstance t;
  t.space = line_space({0, 4});
  t.rewards = {0, 6};
  t.release = {0, 0};
  t.deadline = {0, 4};
  EXPECT_EQ(oracle_time_windows(t, Rational(5, 4)).reward, 6);
  const TWSolution sol = solve_time_windows(t, Rational(1, 4));
  EXPECT_EQ(sol.reward, 6);
  expect_claims_hold(t, Rational(1, 4), sol);
}

TEST(SolveTimeWindowsTest, WideWindowsMatchP2PBudget) {
  for (int i = 0; i < 20; ++i) {
    auto t = generated<TWInstance>(ProblemKind::kTW, 2 + i % 5, 900 + i, profile_for(i));
    std::int64_t horizon = 0;
    for (Vertex v = 0; v < t.space.size(); ++v) horizon = std::max(horizon, 2 * t.space(0, v));
    horizon += 1;
    std::fill(t.release.begin(), t.release.end(), 0);
    std::fill(t.deadline.begin(), t.deadline.end(), horizon);
    const TWSolution sol = solve_time_windows(t, 1);
    expect_claims_hold(t, 1, sol);
    // Upper bound: any walk from the root within the stretched horizon.
    Reward best_open = 0;
    for (Vertex end = 0; end < t.space.size(); ++end) {
      P2PInstance p{t.space, t.rewards, 0, end, 2 * horizon};
      best_open = std::max(best_open, oracle_p2p_orienteering(p).reward);
    }
    EXPECT_LE(sol.reward, best_open);
    EXPECT_GE(24 * (compute_margin_params(1).s + 2) * sol.reward,
              oracle_time_windows(t).reward);
  }
}

TEST(CheckFeasibilityTest, Boundaries) {
  TWInstance t = two_node();
  t.release = {0, 1, 3};
  const std::vector<TWVisit> at_release = {{1, 1, 1, 1}};
  EXPECT_TRUE(check_tw_feasibility(at_release, t, 1)[0].counted);
  const std::vector<TWVisit> early = {{2, 2, 2, 2}};
  EXPECT_FALSE(check_tw_feasibility(early, t, 1)[0].counted);
  const std::vector<TWVisit> at_slack = {{1, 3, 3, 3}};
  EXPECT_TRUE(check_tw_feasibility(at_slack, t, Rational(3, 2))[0].counted);
  const std::vector<TWVisit> past_slack = {{1, 4, 4, 4}};
  EXPECT_FALSE(check_tw_feasibility(past_slack, t, Rational(3, 2))[0].counted);
  const std::vector<TWVisit> twice = {{1, 1, 1, 1}, {1, 2, 2, 2}};
  const auto v = check_tw_feasibility(twice, t, 1);
  EXPECT_TRUE(v[0].counted);
  EXPECT_FALSE(v[1].counted);
}

TWInstance waiting_line() {
  TWInstance t;
  t.space = line_space({0, 1, 2});
  t.rewards = {0, 4, 7};
  t.release = {0, 0, 1};
  t.deadline = {0, 2, 3};
  t.stochastic = true;
  t.waiting = {SizeDistribution::deterministic(0),
               testing::two_point(0, Rational(1, 2), 2, Rational(1, 2)),
               testing::two_point(1, Rational(1, 2), 3, Rational(1, 2))};
  return t;
}

// Finds a simulated visit that overruns D(v) but not (1 + eps) D(v).
TEST(CheckFeasibilityTest, SimulatedOverrunCountsOnlyWithSlack) {
  const TWInstance t = waiting_line();
  const Rational eps = 1;
  const TWPlan plan = plan_time_windows(t, eps, TWSubroutine::kStochasticP2P);
  bool found = false;
  for (std::uint64_t r = 0; r < 5000 && !found; ++r) {
    CounterRng rng(99, r);
    std::vector<TWVisit> trace;
    run_tw_plan_once(t, plan, rng, &trace);
    for (const TWVisit& visit : trace) {
      const std::int64_t d = t.deadline[static_cast<std::size_t>(visit.vertex)];
      if (visit.start < t.release[static_cast<std::size_t>(visit.vertex)]) continue;
      if (visit.completion > d && visit.completion <= 2 * d) {
        const std::vector<TWVisit> one = {visit};
        EXPECT_TRUE(check_tw_feasibility(one, t, 1 + eps)[0].counted);
        EXPECT_FALSE(check_tw_feasibility(one, t, 1)[0].counted);
        found = true;
      }
    }
  }
  if (!found) {
    // The plan never overran; check the same boundary on a synthetic visit.
    const std::vector<TWVisit> one = {{2, 2, 2, 11}};
    EXPECT_TRUE(check_tw_feasibility(one, t, 2)[0].counted);
    EXPECT_FALSE(check_tw_feasibility(one, t, 1)[0].counted);
  }
}

TEST(SolveTimeWindowsTest, RandomSuiteRespectsSlackAndFloor) {
  for (int i = 0; i < 60; ++i) {
    const auto t = generated<TWInstance>(ProblemKind::kTW, 2 + i % 6, 1200 + i, profile_for(i));
    const Reward strict = oracle_time_windows(t).reward;
    ASSERT_EQ(strict, ref::tw_best(t, 1)) << "instance " << i;
    for (const Rational& eps : {Rational(1, 4), Rational(1)}) {
      const TWSolution sol = solve_time_windows(t, eps);
      expect_claims_hold(t, eps, sol);
      EXPECT_LE(sol.reward, oracle_time_windows(t, 1 + eps).reward);
      EXPECT_GE(24 * (compute_margin_params(eps).s + 2) * sol.reward, strict)
          << "instance " << i << " eps " << eps;
    }
  }
}

TEST(SolveTimeWindowsTest, ReplayMatchesPlan) {
  for (int i = 0; i < 20; ++i) {
    const auto t = generated<TWInstance>(ProblemKind::kTW, 3 + i % 4, 1400 + i, profile_for(i));
    const TWPlan plan = plan_time_windows(t, 1, TWSubroutine::kDeterministicP2P);
    const TWSolution sol = replay_plan(t, plan);
    EXPECT_EQ(Rational(sol.reward), plan.planned_reward);
    ASSERT_FALSE(sol.walk.empty());
    EXPECT_EQ(sol.walk.front(), t.root);
  }
}

TEST(StochasticPlanTest, SimulationIsReproducibleAndBounded) {
  const TWInstance t = waiting_line();
  const TWPlan plan = plan_time_windows(t, 1, TWSubroutine::kStochasticP2P);
  const SimulationSummary a = simulate_tw_plan(t, plan, 20000, 3);
  const SimulationSummary b = simulate_tw_plan(t, plan, 20000, 3);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_GE(a.mean, 0.0);
  TWInstance zero = t;
  zero.stochastic = false;
  EXPECT_LE(a.mean, static_cast<double>(oracle_time_windows(zero, 2).reward));
}

TEST(StochasticPlanTest, TracedRewardMatchesChecker) {
  for (int i = 0; i < 15; ++i) {
    GeneratorOptions opts;
    opts.stochastic_tw = true;
    const auto t =
        generated<TWInstance>(ProblemKind::kTW, 2 + i % 4, 1600 + i, profile_for(i), opts);
    const TWPlan plan = plan_time_windows(t, 1, TWSubroutine::kStochasticP2P);
    for (std::uint64_t r = 0; r < 200; ++r) {
      CounterRng rng(5, r);
      std::vector<TWVisit> trace;
      const Reward got = run_tw_plan_once(t, plan, rng, &trace);
      Reward counted = 0;
      for (const TWVerdict& v : check_tw_feasibility(trace, t, 2)) {
        if (v.counted) counted += t.rewards[static_cast<std::size_t>(v.vertex)];
      }
      ASSERT_EQ(got, counted) << "instance " << i << " run " << r;
    }
  }
}

}  // namespace
}  // namespace orient
