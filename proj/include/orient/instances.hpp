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

#ifndef ORIENT_INSTANCES_HPP_
#define ORIENT_INSTANCES_HPP_

#include <cstdint>
#include <vector>

#include "orient/metric.hpp"
#include "orient/numeric.hpp"

namespace orient {

using Reward = std::int64_t;

// P2P orienteering: a u-v walk of length at most `budget` collecting the
// most reward. Each vertex's reward is counted once.
struct P2PInstance {
  MetricSpace space;
  std::vector<Reward> rewards;
  Vertex start = 0;
  Vertex end = 0;
  Distance budget = 0;

  void validate() const;
};

// P2P knapsack orienteering: additionally the total size of the collected
// vertices must not exceed `knapsack_budget`. A walk may pass through a
// vertex without collecting it.
struct KnapOrientInstance {
  MetricSpace space;
  std::vector<Reward> rewards;
  std::vector<Rational> sizes;
  Distance travel_budget = 0;
  Rational knapsack_budget = 0;
  Vertex start = 0;
  Vertex end = 0;

  void validate() const;
};

struct SizeOutcome {
  std::int64_t size = 0;
  Rational probability = 0;
  bool operator==(const SizeOutcome&) const = default;
};

// Finite discrete distribution of a job's processing (or waiting) time.
class SizeDistribution {
 public:
  SizeDistribution() : SizeDistribution(deterministic(0)) {}

  // Validates: probabilities positive and summing to exactly 1, sizes
  // distinct and non-negative. Outcomes are stored sorted by size.
  static SizeDistribution from_outcomes(std::vector<SizeOutcome> outcomes);
  static SizeDistribution deterministic(std::int64_t size);

  const std::vector<SizeOutcome>& outcomes() const { return outcomes_; }
  std::size_t support_size() const { return outcomes_.size(); }
  bool is_deterministic() const { return outcomes_.size() == 1; }
  // Pr[S <= limit]; zero for negative limits.
  Rational probability_at_most(std::int64_t limit) const;
  Rational mean() const;
  std::int64_t max_size() const { return outcomes_.back().size; }

  bool operator==(const SizeDistribution&) const = default;

 private:
  explicit SizeDistribution(std::vector<SizeOutcome> outcomes)
      : outcomes_(std::move(outcomes)) {}

  std::vector<SizeOutcome> outcomes_;
};

// Stochastic P2P orienteering: every vertex hosts one job with a fixed
// reward and a random size. A policy starts at `start` at time 0 and must
// reach `terminal` by time `budget`.
struct StochOrientInstance {
  MetricSpace space;
  std::vector<Reward> rewards;
  std::vector<SizeDistribution> sizes;
  std::int64_t budget = 0;
  Vertex start = 0;
  Vertex terminal = 0;

  void validate() const;
};

// Rooted routing with time windows [release, deadline]. When `stochastic`
// is set every vertex carries a random waiting time that must finish inside
// the window for the reward to count; otherwise waiting times are zero.
struct TWInstance {
  MetricSpace space;
  Vertex root = 0;
  std::vector<Reward> rewards;
  std::vector<std::int64_t> release;
  std::vector<std::int64_t> deadline;
  bool stochastic = false;
  std::vector<SizeDistribution> waiting;

  void validate() const;
  const SizeDistribution& waiting_time(Vertex v) const;
};

}  // namespace orient

#endif  // ORIENT_INSTANCES_HPP_
