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

#include "orient/instances.hpp"

#include <algorithm>
#include <string>

#include "orient/error.hpp"

namespace orient {
namespace {

void check_vertex(const MetricSpace& space, Vertex v, const char* role) {
  if (!space.contains(v)) {
    fail(ErrorCode::kInvalidArgument,
         std::string(role) + " vertex " + std::to_string(v) + " out of range");
  }
}

void check_rewards(const MetricSpace& space, const std::vector<Reward>& r) {
  if (static_cast<int>(r.size()) != space.size()) {
    fail(ErrorCode::kInvalidArgument, "reward vector length != vertex count");
  }
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) {
      fail(ErrorCode::kInvalidArgument,
           "negative reward at vertex " + std::to_string(i));
    }
  }
}

}  // namespace

void P2PInstance::validate() const {
  check_rewards(space, rewards);
  check_vertex(space, start, "start");
  check_vertex(space, end, "end");
}

void KnapOrientInstance::validate() const {
  check_rewards(space, rewards);
  check_vertex(space, start, "start");
  check_vertex(space, end, "end");
  if (static_cast<int>(sizes.size()) != space.size()) {
    fail(ErrorCode::kInvalidArgument, "size vector length != vertex count");
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 0) {
      fail(ErrorCode::kInvalidArgument,
           "negative size at vertex " + std::to_string(i));
    }
  }
  if (knapsack_budget < 0) {
    fail(ErrorCode::kInvalidArgument, "negative knapsack budget");
  }
}

SizeDistribution SizeDistribution::from_outcomes(
    std::vector<SizeOutcome> outcomes) {
  if (outcomes.empty()) {
    fail(ErrorCode::kInvalidArgument, "size distribution has empty support");
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const SizeOutcome& a, const SizeOutcome& b) {
              return a.size < b.size;
            });
  Rational total = 0;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].size < 0) {
      fail(ErrorCode::kInvalidArgument, "negative size in distribution");
    }
    if (outcomes[i].probability <= 0) {
      fail(ErrorCode::kInvalidArgument,
           "non-positive probability for size " +
               std::to_string(outcomes[i].size));
    }
    if (i > 0 && outcomes[i].size == outcomes[i - 1].size) {
      fail(ErrorCode::kInvalidArgument,
           "duplicate size " + std::to_string(outcomes[i].size) +
               " in distribution");
    }
    total += outcomes[i].probability;
  }
  if (total != 1) {
    fail(ErrorCode::kInvalidArgument,
         "probabilities sum to " + to_string(total) + ", expected 1");
  }
  return SizeDistribution(std::move(outcomes));
}

SizeDistribution SizeDistribution::deterministic(std::int64_t size) {
  if (size < 0) fail(ErrorCode::kInvalidArgument, "negative size");
  return SizeDistribution(std::vector<SizeOutcome>{{size, Rational(1)}});
}

Rational SizeDistribution::probability_at_most(std::int64_t limit) const {
  Rational p = 0;
  for (const SizeOutcome& o : outcomes_) {
    if (o.size > limit) break;
    p += o.probability;
  }
  return p;
}

Rational SizeDistribution::mean() const {
  Rational m = 0;
  for (const SizeOutcome& o : outcomes_) m += o.probability * o.size;
  return m;
}

void StochOrientInstance::validate() const {
  check_rewards(space, rewards);
  check_vertex(space, start, "start");
  check_vertex(space, terminal, "terminal");
  if (static_cast<int>(sizes.size()) != space.size()) {
    fail(ErrorCode::kInvalidArgument,
         "distribution vector length != vertex count");
  }
  if (budget < 0) fail(ErrorCode::kInvalidArgument, "negative budget");
}

void TWInstance::validate() const {
  check_rewards(space, rewards);
  check_vertex(space, root, "root");
  const auto n = static_cast<std::size_t>(space.size());
  if (release.size() != n || deadline.size() != n) {
    fail(ErrorCode::kInvalidArgument, "window vectors length != vertex count");
  }
  if (stochastic && waiting.size() != n) {
    fail(ErrorCode::kInvalidArgument,
         "waiting-time vector length != vertex count");
  }
  for (std::size_t v = 0; v < n; ++v) {
    const auto name = std::to_string(v);
    if (release[v] < 0) {
      fail(ErrorCode::kInvalidArgument, "negative release date at " + name);
    }
    if (deadline[v] < release[v]) {
      fail(ErrorCode::kInvalidArgument, "deadline before release at " + name);
    }
    if (deadline[v] < space(root, static_cast<Vertex>(v))) {
      fail(ErrorCode::kInvalidArgument,
           "deadline below root distance at " + name);
    }
  }
}

const SizeDistribution& TWInstance::waiting_time(Vertex v) const {
  static const SizeDistribution kZero = SizeDistribution::deterministic(0);
  if (!stochastic) return kZero;
  return waiting[static_cast<std::size_t>(v)];
}

}  // namespace orient
