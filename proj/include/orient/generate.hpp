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

#ifndef ORIENT_GENERATE_HPP_
#define ORIENT_GENERATE_HPP_

#include <cstdint>
#include <string_view>

#include "orient/instance_io.hpp"

namespace orient {

enum class Profile {
  kLine,     // points on a line, matrix form
  kGrid,     // integer points in a square, rounded-up Euclidean distances
  kClosure,  // random connected graph, edge-list form
};

std::string_view profile_name(Profile profile);
// Accepts "line", "grid", "closure" and the long forms "line-metric",
// "random-euclidean-grid", "random-closure".
Profile parse_profile(std::string_view name);

struct GeneratorOptions {
  // tw only: attach waiting-time distributions.
  bool stochastic_tw = false;
};

// Deterministic in all arguments. Stochastic instances keep distances small
// so that budgets stay at or below 20; probabilities are multiples of 1/16
// with at most three support points.
InstanceFile generate_instance(ProblemKind kind, int n, std::uint64_t seed,
                               Profile profile,
                               const GeneratorOptions& options = {});

}  // namespace orient

#endif  // ORIENT_GENERATE_HPP_
