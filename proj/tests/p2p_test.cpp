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

#include <vector>

#include "gtest/gtest.h"
#include "orient/error.hpp"
#include "orient/min_excess.hpp"
#include "orient/oracles.hpp"
#include "orient/p2p.hpp"
#include "reference.hpp"
#include "test_util.hpp"

namespace orient {
namespace {

using testing::generated;
using testing::line_p2p;
using testing::line_space;
using testing::profile_for;

TEST(MinExcessTest, NothingOnShortestChainGivesDirectWalk) {
  // a and b both lie off the u-v segment.
  const MetricSpace d = MetricSpace::from_matrix({
      {0, 2, 2, 2},
      {2, 0, 2, 2},
      {2, 2, 0, 2},
      {2, 2, 2, 0},
  });
  const std::vector<Reward> rewards = {1, 5, 7, 2};
  const MinExcessSolution sol = solve_max_reward_within_excess<Reward>(d, rewards, 0, 3, 0);
  EXPECT_EQ(sol.walk, (Walk{{0, 3}}));
  EXPECT_EQ(walk_reward<Reward>(sol.walk, rewards), 3);
}

TEST(MinExcessTest, CollinearVerticesAreFree) {
  const P2PInstance inst = line_p2p(3);
  const MinExcessSolution sol =
      solve_max_reward_within_excess<Reward>(inst.space, inst.rewards, 0, 3, 0);
  EXPECT_EQ(sol.walk, (Walk{{0, 1, 2, 3}}));
  EXPECT_EQ(sol.reward_fraction_guarantee, 1);
  EXPECT_EQ(sol.excess_factor_guarantee, 1);
}

TEST(MinExcessTest, OffLineVertexCollectedWhenBudgetAllows) {
  // u, v and an off-line c.
  const MetricSpace e = MetricSpace::from_matrix({
      {0, 2, 2},
      {2, 0, 2},
      {2, 2, 0},
  });
  const std::vector<Reward> rewards = {0, 0, 100};
  // u=0, v=1, c=2: any walk through c has length 4 = d(u,v) + 2.
  EXPECT_EQ(ref::min_excess(e, rewards, 0, 1, 100), 2);
  const auto tight = solve_max_reward_within_excess<Reward>(e, rewards, 0, 1, 1);
  EXPECT_EQ(walk_reward<Reward>(tight.walk, rewards), 0);
  const auto loose = solve_max_reward_within_excess<Reward>(e, rewards, 0, 1, 2);
  EXPECT_EQ(walk_reward<Reward>(loose.walk, rewards), 100);
  EXPECT_EQ(walk_excess(e, loose.walk), 2);
}

TEST(MinExcessTest, EqualsOrienteeringWithStretchedBudget) {
  const ExactMinExcess<Reward> solver;
  for (int i = 0; i < 80; ++i) {
    const auto inst = generated<P2PInstance>(ProblemKind::kP2P, 1 + i % 9, 2000 + i, profile_for(i));
    for (Distance eps : {0, 1, 3, 7}) {
      const MinExcessSolution sol =
          solver.solve(inst.space, inst.rewards, inst.start, inst.end, eps);
      ASSERT_EQ(sol.walk.front(), inst.start);
      ASSERT_EQ(sol.walk.back(), inst.end);
      ASSERT_LE(walk_excess(inst.space, sol.walk), eps);
      P2PInstance stretched = inst;
      stretched.budget = inst.space(inst.start, inst.end) + eps;
      ASSERT_EQ(walk_reward<Reward>(sol.walk, inst.rewards), ref::p2p_best(stretched));
    }
  }
}

TEST(MinExcessTest, CacheFollowsTheMetric) {
  const ExactMinExcess<Reward> solver;
  const P2PInstance a = line_p2p(3);
  P2PInstance b = a;
  b.space = line_space({0, 5, -5, 3});
  EXPECT_EQ(walk_reward<Reward>(solver.solve(a.space, a.rewards, 0, 3, 0).walk, a.rewards), 12);
  EXPECT_EQ(walk_reward<Reward>(solver.solve(b.space, b.rewards, 0, 3, 0).walk, b.rewards), 0);
  EXPECT_EQ(walk_reward<Reward>(solver.solve(a.space, a.rewards, 0, 3, 0).walk, a.rewards), 12);
}

TEST(MinExcessTest, RejectsNegativeBudget) {
  const P2PInstance a = line_p2p(3);
  EXPECT_THROW(solve_max_reward_within_excess<Reward>(a.space, a.rewards, 0, 3, -1), Error);
}

TEST(ComputeEpsXTest, Examples) {
  const P2PInstance five = line_p2p(5);
  EXPECT_EQ(compute_eps_x(five.space, 0, 3, 5, 2), 2);
  const P2PInstance three = line_p2p(3);
  EXPECT_EQ(compute_eps_x(three.space, 0, 3, 3, 1), 0);
  const MetricSpace far = line_space({0, 1, 2, 3, 10});
  EXPECT_FALSE(compute_eps_x(far, 0, 3, 3, 4).has_value());
}

TEST(SolveP2PTest, LineExample) {
  const P2PInstance inst = line_p2p(3);
  const P2PSolution<Reward> sol = solve_p2p(inst);
  EXPECT_EQ(sol.reward, ref::p2p_best(inst));
  EXPECT_EQ(sol.reward, 12);
  EXPECT_EQ(sol.length, 3);
}

TEST(SolveP2PTest, ZeroInnerRewardsGiveDirectWalk) {
  P2PInstance inst = line_p2p(7);
  inst.rewards = {3, 0, 0, 4};
  const P2PSolution<Reward> sol = solve_p2p(inst);
  EXPECT_EQ(sol.reward, 7);
  EXPECT_EQ(sol.walk, (Walk{{0, 3}}));
}

TEST(SolveP2PTest, TightBudgetExcludesOffPathVertex) {
  // a lies on the segment, c does not.
  P2PInstance inst;
  inst.space = MetricSpace::from_matrix({
      {0, 1, 2, 2},
      {1, 0, 1, 2},
      {2, 1, 0, 2},
      {2, 2, 2, 0},
  });
  inst.rewards = {0, 5, 0, 50};
  inst.start = 0;
  inst.end = 2;
  inst.budget = 2;
  const P2PSolution<Reward> sol = solve_p2p(inst);
  EXPECT_EQ(sol.reward, ref::p2p_best(inst));
  EXPECT_EQ(sol.reward, 5);
  inst.rewards[1] = 0;
  EXPECT_EQ(solve_p2p(inst).reward, 0);
  EXPECT_EQ(solve_p2p(inst).walk, (Walk{{0, 2}}));
}

TEST(SolveP2PTest, InfeasibleBudget) {
  try {
    solve_p2p(line_p2p(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(SolveP2PTest, HalfOfOptimumAndWithinBudget) {
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 10;
    const auto inst = generated<P2PInstance>(ProblemKind::kP2P, n, 3000 + i, profile_for(i / 10));
    const P2PSolution<Reward> sol = solve_p2p(inst);
    const Reward opt = ref::p2p_best(inst);
    ASSERT_LE(walk_length(inst.space, sol.walk), inst.budget);
    ASSERT_EQ(sol.length, walk_length(inst.space, sol.walk));
    ASSERT_EQ(sol.walk.front(), inst.start);
    ASSERT_EQ(sol.walk.back(), inst.end);
    ASSERT_GE(2 * sol.reward, opt) << "instance " << i;
    ASSERT_LE(sol.reward, opt);
  }
}

TEST(SolveP2PTest, TwoCallsPerFeasiblePivot) {
  const ExactMinExcess<Reward> exact;
  for (int i = 0; i < 60; ++i) {
    const auto inst = generated<P2PInstance>(ProblemKind::kP2P, 2 + i % 8, 4000 + i, profile_for(i));
    const CountingMinExcess<Reward> counting(exact);
    solve_p2p(inst, counting);
    std::size_t pivots = 0;
    for (Vertex x = 0; x < inst.space.size(); ++x) {
      pivots += compute_eps_x(inst.space, inst.start, inst.end, inst.budget, x).has_value();
    }
    ASSERT_EQ(counting.calls(), 2 * pivots);
  }
}

TEST(SolveP2PTest, ExactlyTwoNCallsWhenEveryPivotFits) {
  const ExactMinExcess<Reward> exact;
  for (int i = 0; i < 40; ++i) {
    auto inst = generated<P2PInstance>(ProblemKind::kP2P, 1 + i % 10, 5000 + i, profile_for(i));
    inst.budget = 2 * inst.space.diameter() + 1;
    const CountingMinExcess<Reward> counting(exact);
    solve_p2p(inst, counting);
    ASSERT_EQ(counting.calls(), 2u * static_cast<std::size_t>(inst.space.size()));
  }
}

TEST(SolveP2PTest, CandidatesRespectTheirExcessBudget) {
  const P2PInstance inst = generated<P2PInstance>(ProblemKind::kP2P, 8, 77, Profile::kGrid);
  std::vector<PivotCandidate<Reward>> candidates;
  const ExactMinExcess<Reward> exact;
  solve_p2p<Reward>(inst.space, inst.rewards, inst.start, inst.end, inst.budget, exact,
                    &candidates);
  ASSERT_FALSE(candidates.empty());
  for (const auto& c : candidates) {
    EXPECT_EQ(c.eps_x, inst.budget - inst.space(inst.start, c.pivot) -
                           inst.space(c.pivot, inst.end));
    EXPECT_GE(c.eps_x, 0);
    EXPECT_LE(c.length, inst.budget);
  }
}

// Collinear optimum: the whole optimal walk has zero excess on one side of
// its first vertex, so some pivot recovers it exactly.
TEST(SolveP2PTest, RecoversCollinearOptimum) {
  for (int i = 0; i < 50; ++i) {
    auto inst = generated<P2PInstance>(ProblemKind::kP2P, 2 + i % 8, 6000 + i, Profile::kLine);
    inst.budget = inst.space(inst.start, inst.end);
    EXPECT_EQ(solve_p2p(inst).reward, ref::p2p_best(inst));
  }
}

// A deliberately weak subroutine that only ever answers with the direct
// walk: the algorithm must still stay feasible.
class DirectOnly final : public MinExcessSolver<Reward> {
 public:
  MinExcessSolution solve(const MetricSpace&, std::span<const Reward>, Vertex u, Vertex v,
                          Distance) const override {
    return MinExcessSolution{direct_walk(u, v), 1, 1};
  }
};

TEST(SolveP2PTest, WeakSubroutineStaysFeasible) {
  const DirectOnly weak;
  for (int i = 0; i < 30; ++i) {
    const auto inst = generated<P2PInstance>(ProblemKind::kP2P, 6, 7000 + i, profile_for(i));
    const P2PSolution<Reward> sol = solve_p2p(inst, weak);
    EXPECT_LE(walk_length(inst.space, sol.walk), inst.budget);
  }
}

}  // namespace
}  // namespace orient
