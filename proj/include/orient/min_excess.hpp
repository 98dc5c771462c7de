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

#ifndef ORIENT_MIN_EXCESS_HPP_
#define ORIENT_MIN_EXCESS_HPP_

#include <atomic>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "orient/error.hpp"
#include "orient/metric.hpp"
#include "orient/numeric.hpp"
#include "orient/subset_paths.hpp"

namespace orient {

// Result of a budget-form min-excess query. The two guarantees describe the
// solver that produced the walk: it collects at least
// `reward_fraction_guarantee` of the best reward achievable within the
// excess budget, and its excess is at most `excess_factor_guarantee` times
// the excess of the best walk with that reward.
struct MinExcessSolution {
  Walk walk;
  Rational reward_fraction_guarantee = 1;
  Rational excess_factor_guarantee = 1;
};

// Maximize reward over u-v walks whose excess is at most `excess_budget`.
template <typename R>
class MinExcessSolver {
 public:
  virtual ~MinExcessSolver() = default;

  virtual MinExcessSolution solve(const MetricSpace& space,
                                  std::span<const R> rewards, Vertex u,
                                  Vertex v, Distance excess_budget) const = 0;
};

// Exact solver over the subset DP: returns the literal optimum, so both
// guarantees are 1. Tables are cached per source vertex for the most recent
// metric seen (compared by value); the cache is guarded, so one instance may
// serve parallel callers.
template <typename R>
class ExactMinExcess final : public MinExcessSolver<R> {
 public:
  explicit ExactMinExcess(const OracleLimits& limits = {}) : limits_(limits) {}

  MinExcessSolution solve(const MetricSpace& space, std::span<const R> rewards,
                          Vertex u, Vertex v,
                          Distance excess_budget) const override {
    if (excess_budget < 0) {
      fail(ErrorCode::kInvalidArgument, "negative excess budget");
    }
    if (!space.contains(u) || !space.contains(v)) {
      fail(ErrorCode::kInvalidArgument, "endpoint out of range");
    }
    if (static_cast<int>(rewards.size()) != space.size()) {
      fail(ErrorCode::kInvalidArgument, "reward vector length != vertex count");
    }
    std::shared_ptr<const SubsetPathCache> cache;
    std::shared_ptr<const std::vector<R>> sums;
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (!cache_ || !(cache_->space() == space)) {
        cache_ = shared_subset_paths(space, limits_);
        sums_.reset();
      }
      if (!sums_ || !std::equal(rewards.begin(), rewards.end(),
                                sums_rewards_.begin(), sums_rewards_.end())) {
        sums_rewards_.assign(rewards.begin(), rewards.end());
        sums_ = std::make_shared<const std::vector<R>>(subset_sums(rewards));
      }
      cache = cache_;
      sums = sums_;
    }
    const SubsetPathTable& table = cache->table(u);
    const auto choice =
        best_subset_within(table, *sums, v, space(u, v) + excess_budget);
    // The direct walk always qualifies, so a choice exists.
    return MinExcessSolution{table.walk(choice->mask, v), 1, 1};
  }

 private:
  OracleLimits limits_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const SubsetPathCache> cache_;
  mutable std::vector<R> sums_rewards_;
  mutable std::shared_ptr<const std::vector<R>> sums_;
};

// Forwards to another solver and counts invocations.
template <typename R>
class CountingMinExcess final : public MinExcessSolver<R> {
 public:
  explicit CountingMinExcess(const MinExcessSolver<R>& inner) : inner_(inner) {}

  MinExcessSolution solve(const MetricSpace& space, std::span<const R> rewards,
                          Vertex u, Vertex v,
                          Distance excess_budget) const override {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return inner_.solve(space, rewards, u, v, excess_budget);
  }

  std::size_t calls() const { return calls_.load(); }

 private:
  const MinExcessSolver<R>& inner_;
  mutable std::atomic<std::size_t> calls_{0};
};

template <typename R>
MinExcessSolution solve_max_reward_within_excess(const MetricSpace& space,
                                                 std::span<const R> rewards,
                                                 Vertex u, Vertex v,
                                                 Distance excess_budget) {
  return ExactMinExcess<R>().solve(space, rewards, u, v, excess_budget);
}

}  // namespace orient

#endif  // ORIENT_MIN_EXCESS_HPP_
