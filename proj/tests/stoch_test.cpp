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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "orient/error.hpp"
#include "orient/knap.hpp"
#include "orient/oracles.hpp"
#include "orient/stoch.hpp"
#include "reference.hpp"
#include "test_util.hpp"

namespace orient {
namespace {

using testing::generated;
using testing::line_space;
using testing::profile_for;
using testing::two_point;

const SizeDistribution kCoin = two_point(1, Rational(1, 2), 10, Rational(1, 2));

// rho = 0, v = 1, t = 2 with d(rho, v) = 2 and d(v, t) = 1.
StochOrientInstance single_job(std::int64_t budget, SizeDistribution size) {
  StochOrientInstance s;
  s.space = line_space({0, 2, 3});
  s.rewards = {0, 10, 0};
  s.sizes = {SizeDistribution::deterministic(0), std::move(size),
             SizeDistribution::deterministic(0)};
  s.budget = budget;
  s.start = 0;
  s.terminal = 2;
  return s;
}

// Two jobs a, b between rho and t on a line.
StochOrientInstance two_jobs() {
  StochOrientInstance s;
  s.space = line_space({0, 1, 2, 3});
  s.rewards = {0, 4, 6, 0};
  s.sizes = {SizeDistribution::deterministic(0), two_point(0, Rational(3, 4), 2, Rational(1, 4)),
             two_point(1, Rational(1, 2), 3, Rational(1, 2)), SizeDistribution::deterministic(0)};
  s.budget = 6;
  s.start = 0;
  s.terminal = 3;
  return s;
}

TEST(SizeDistributionTest, Validation) {
  EXPECT_THROW(SizeDistribution::from_outcomes({{1, Rational(1, 2)}, {2, Rational(1, 4)}}), Error);
  EXPECT_THROW(SizeDistribution::from_outcomes({{1, Rational(1, 2)}, {1, Rational(1, 2)}}), Error);
  EXPECT_THROW(SizeDistribution::from_outcomes({{1, Rational(3, 2)}, {2, Rational(-1, 2)}}), Error);
  EXPECT_THROW(SizeDistribution::from_outcomes({{-1, Rational(1)}}), Error);
  const SizeDistribution d =
      SizeDistribution::from_outcomes({{5, Rational(1, 4)}, {2, Rational(3, 4)}});
  EXPECT_EQ(d.outcomes().front().size, 2);
  EXPECT_EQ(d.probability_at_most(4), Rational(3, 4));
  EXPECT_EQ(d.probability_at_most(-1), 0);
  EXPECT_EQ(d.mean(), Rational(11, 4));
}

TEST(TruncatedMeanTest, Examples) {
  EXPECT_EQ(truncated_mean(kCoin, 4), Rational(5, 2));
  EXPECT_EQ(truncated_mean(SizeDistribution::deterministic(3), 4), 3);
  EXPECT_EQ(truncated_mean(kCoin, 0), 0);
  EXPECT_EQ(truncated_mean(kCoin, Rational(1, 2)), Rational(1, 2));
}

TEST(SingleVertexRewardTest, Examples) {
  EXPECT_EQ(single_vertex_reward(single_job(5, kCoin), 1), 5);
  EXPECT_EQ(single_vertex_reward(single_job(5, SizeDistribution::deterministic(0)), 1), 10);
  EXPECT_EQ(single_vertex_reward(single_job(3, kCoin), 1), 0);
  EXPECT_EQ(single_vertex_reward(single_job(2, SizeDistribution::deterministic(0)), 1), 0);
}

TEST(ValidKnapInstanceTest, Boundaries) {
  StochOrientInstance s = single_job(8, kCoin);
  const KnapOrientInstance zero = build_valid_knap_instance(s, 0);
  EXPECT_EQ(zero.travel_budget, 8);
  for (const Rational& size : zero.sizes) EXPECT_EQ(size, 0);
  const KnapOrientInstance full = build_valid_knap_instance(s, 8);
  EXPECT_EQ(full.travel_budget, 0);
  const KnapOrientInstance half = build_valid_knap_instance(s, 4);
  EXPECT_EQ(half.travel_budget, 4);
  EXPECT_EQ(half.knapsack_budget, 4);
  EXPECT_EQ(half.sizes[1], Rational(5, 2));
  const KnapOrientInstance frac = build_valid_knap_instance(s, Rational(5, 2));
  EXPECT_EQ(frac.travel_budget, 5);
  EXPECT_THROW(build_valid_knap_instance(s, 9), Error);
}

TEST(TruncationScalesTest, PowersOfTwoThenZero) {
  EXPECT_EQ(truncation_scales(8), (std::vector<Rational>{8, 4, 2, 1, 0}));
  EXPECT_EQ(truncation_scales(6),
            (std::vector<Rational>{6, 3, Rational(3, 2), Rational(3, 4), 0}));
  EXPECT_EQ(truncation_scales(1), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(truncation_scales(0), (std::vector<Rational>{0}));
}

TEST(SolveStochTest, VisitsEveryScale) {
  StochOrientInstance s = single_job(8, kCoin);
  const NonAdaptivePolicy policy = solve_p2p_stoch(s);
  ASSERT_EQ(policy.candidates.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(policy.candidates[i].index, i);
    EXPECT_EQ(policy.candidates[i].cap, truncation_scales(8)[i]);
  }
  EXPECT_EQ(policy.branch_probability, Rational(1, 2));
  EXPECT_EQ(policy.inclusion_probability, Rational(1, 4));
}

TEST(SolveStochTest, SingleJobBranchesAgree) {
  const StochOrientInstance s = single_job(8, kCoin);
  const NonAdaptivePolicy policy = solve_p2p_stoch(s);
  ASSERT_TRUE(policy.single_vertex.has_value());
  EXPECT_EQ(*policy.single_vertex, 1);
  EXPECT_EQ(policy.jobs, (std::vector<Vertex>{1}));
}

TEST(SolveStochTest, PathIsAFeasibleWalk) {
  for (int i = 0; i < 60; ++i) {
    const auto s = generated<StochOrientInstance>(ProblemKind::kStoch, 1 + i % 5, 10000 + i,
                                                  profile_for(i / 5));
    const NonAdaptivePolicy policy = solve_p2p_stoch(s);
    ASSERT_EQ(policy.path.front(), s.start);
    ASSERT_EQ(policy.path.back(), s.terminal);
    ASSERT_LE(walk_length(s.space, policy.path), s.budget);
    const auto on_path = distinct_vertices(policy.path);
    for (Vertex v : policy.jobs) {
      ASSERT_NE(std::find(on_path.begin(), on_path.end(), v), on_path.end());
    }
  }
}

// With deterministic sizes the chosen route is within a factor 8 of the best
// valid knapsack instance.
TEST(SolveStochTest, DeterministicSizesTrackKnapOracle) {
  for (int i = 0; i < 40; ++i) {
    auto s = generated<StochOrientInstance>(ProblemKind::kStoch, 2 + i % 4, 11000 + i,
                                            profile_for(i));
    for (auto& dist : s.sizes) dist = SizeDistribution::deterministic(dist.max_size() / 2);
    const NonAdaptivePolicy policy = solve_p2p_stoch(s);
    Reward best_oracle = 0;
    for (const Rational& w : truncation_scales(s.budget)) {
      const KnapOrientInstance k = build_valid_knap_instance(s, w);
      if (k.travel_budget < k.space(k.start, k.end)) continue;
      best_oracle = std::max(best_oracle, oracle_knap_orient(k).reward);
    }
    const Reward chosen = policy.candidates[policy.chosen_index].reward;
    EXPECT_GE(8 * chosen, best_oracle) << "instance " << i;
  }
}

TEST(ExactPolicyValueTest, EmptyOrderIsWorthNothing) {
  EXPECT_EQ(exact_policy_value(two_jobs(), std::vector<Vertex>{}), 0);
}

TEST(ExactPolicyValueTest, SingletonEqualsSingleVertexReward) {
  for (int i = 0; i < 60; ++i) {
    const auto s = generated<StochOrientInstance>(ProblemKind::kStoch, 1 + i % 6, 12000 + i,
                                                  profile_for(i / 6));
    for (Vertex v = 0; v < s.space.size(); ++v) {
      ASSERT_EQ(exact_policy_value(s, std::vector<Vertex>{v}), single_vertex_reward(s, v));
    }
  }
}

TEST(ExactPolicyValueTest, DeterministicTwoJobLine) {
  StochOrientInstance s = two_jobs();
  s.sizes[1] = SizeDistribution::deterministic(1);
  s.sizes[2] = SizeDistribution::deterministic(2);
  // a done at 2, b done at 2 + 1 + 2 = 5, plus 1 to reach t: 6 <= 6.
  EXPECT_EQ(exact_policy_value(s, std::vector<Vertex>{1, 2}), 10);
  s.budget = 5;
  EXPECT_EQ(exact_policy_value(s, std::vector<Vertex>{1, 2}), 4);
  EXPECT_EQ(ref::order_value(s, {1, 2}), 4);
}

TEST(ExactPolicyValueTest, MatchesOutcomeTree) {
  for (int i = 0; i < 60; ++i) {
    const auto s = generated<StochOrientInstance>(ProblemKind::kStoch, 2 + i % 5, 13000 + i,
                                                  profile_for(i / 5));
    std::vector<Vertex> order;
    for (Vertex v = s.space.size() - 1; v >= 0; --v) order.push_back(v);
    ASSERT_EQ(exact_policy_value(s, order), ref::order_value(s, order));
  }
}

TEST(ExactPolicyValueTest, RejectsRepeatedJob) {
  EXPECT_THROW(exact_policy_value(two_jobs(), std::vector<Vertex>{1, 1}), Error);
}

NonAdaptivePolicy manual_policy(std::vector<Vertex> jobs, Rational q) {
  NonAdaptivePolicy p;
  p.single_vertex = 2;
  p.jobs = std::move(jobs);
  p.inclusion_probability = std::move(q);
  return p;
}

TEST(RandomizedValueTest, EmptyPathIsHalfTheSingleVertex) {
  const StochOrientInstance s = two_jobs();
  const PolicyValue v = randomized_policy_value(s, manual_policy({}, Rational(1, 4)));
  EXPECT_TRUE(v.exact);
  EXPECT_EQ(v.value, single_vertex_reward(s, 2) / 2);
}

TEST(RandomizedValueTest, FullInclusion) {
  const StochOrientInstance s = two_jobs();
  const PolicyValue v = randomized_policy_value(s, manual_policy({1, 2}, 1));
  EXPECT_EQ(v.value, single_vertex_reward(s, 2) / 2 + ref::order_value(s, {1, 2}) / 2);
}

TEST(RandomizedValueTest, QuarterSamplingOverFourPatterns) {
  const StochOrientInstance s = two_jobs();
  const PolicyValue v = randomized_policy_value(s, manual_policy({1, 2}, Rational(1, 4)));
  const Rational patterns = Rational(9, 16) * 0 + Rational(3, 16) * ref::order_value(s, {1}) +
                            Rational(3, 16) * ref::order_value(s, {2}) +
                            Rational(1, 16) * ref::order_value(s, {1, 2});
  EXPECT_EQ(v.value, single_vertex_reward(s, 2) / 2 + patterns / 2);
}

TEST(SimulateTest, DeterministicPolicyHasNoVariance) {
  StochOrientInstance s = two_jobs();
  s.sizes[1] = SizeDistribution::deterministic(1);
  s.sizes[2] = SizeDistribution::deterministic(2);
  NonAdaptivePolicy p = manual_policy({1, 2}, 1);
  p.branch_probability = 0;
  const SimulationSummary sim = simulate_policy(s, p, 1000, 5);
  EXPECT_EQ(sim.standard_error, 0.0);
  EXPECT_EQ(sim.mean, to_double(randomized_policy_value(s, p).value));
}

TEST(SimulateTest, SameSeedSameResult) {
  const StochOrientInstance s = two_jobs();
  const NonAdaptivePolicy p = manual_policy({1, 2}, Rational(1, 4));
  const SimulationSummary a = simulate_policy(s, p, 5000, 17);
  const SimulationSummary b = simulate_policy(s, p, 5000, 17);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.standard_error, b.standard_error);
  std::vector<Reward> first, second;
  for (std::uint64_t r = 0; r < 200; ++r) {
    CounterRng x(17, r), y(17, r);
    first.push_back(run_policy_once(s, p, x));
    second.push_back(run_policy_once(s, p, y));
  }
  EXPECT_EQ(first, second);
}

TEST(SimulateTest, TwoJobMeanWithinThreeStandardErrors) {
  const StochOrientInstance s = two_jobs();
  const NonAdaptivePolicy p = manual_policy({1, 2}, Rational(1, 4));
  const double exact = to_double(randomized_policy_value(s, p).value);
  const SimulationSummary sim = simulate_policy(s, p, 100000, 2026);
  EXPECT_LE(std::fabs(sim.mean - exact), 3 * sim.standard_error);
}

TEST(SimulateTest, RunsNeverExceedTheRewardOfTheirJobs) {
  const auto s = generated<StochOrientInstance>(ProblemKind::kStoch, 5, 31, Profile::kGrid);
  const NonAdaptivePolicy p = solve_p2p_stoch(s);
  Reward cap = 0;
  for (Vertex v : p.jobs) cap += s.rewards[static_cast<std::size_t>(v)];
  if (p.single_vertex) cap = std::max(cap, s.rewards[static_cast<std::size_t>(*p.single_vertex)]);
  for (std::uint64_t r = 0; r < 2000; ++r) {
    CounterRng rng(1, r);
    ASSERT_LE(run_policy_once(s, p, rng), cap);
  }
}

TEST(SummarizeTest, SampleStandardError) {
  const std::vector<double> x = {1, 2, 3, 4};
  const SimulationSummary s = summarize(x);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.standard_error, std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
}

}  // namespace
}  // namespace orient
