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

#ifndef ORIENT_INSTANCE_IO_HPP_
#define ORIENT_INSTANCE_IO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "orient/instances.hpp"
#include "orient/knap.hpp"
#include "orient/metric.hpp"
#include "orient/oracles.hpp"
#include "orient/p2p.hpp"
#include "orient/stoch.hpp"
#include "orient/time_windows.hpp"

namespace orient {

using Json = nlohmann::ordered_json;

inline constexpr int kInstanceFormatVersion = 1;

enum class ProblemKind { kP2P, kKnap, kStoch, kTW };

std::string_view kind_name(ProblemKind kind);
// Throws Error(kParse) for unknown names.
ProblemKind parse_kind(std::string_view name);

// An instance as stored on disk: the typed problem plus vertex names and,
// when the metric came from a graph, the original edge list.
struct InstanceFile {
  int version = kInstanceFormatVersion;
  std::vector<std::string> names;
  std::optional<std::vector<WeightedEdge>> edges;
  std::optional<std::uint64_t> seed;
  std::variant<P2PInstance, KnapOrientInstance, StochOrientInstance, TWInstance>
      problem;

  ProblemKind kind() const;
  const MetricSpace& space() const;
  const std::string& name(Vertex v) const { return names[static_cast<std::size_t>(v)]; }
};

// Parses and validates the JSON schema. Errors are Error(kParse) naming the
// offending field (or line and column for malformed JSON).
InstanceFile parse_instance(std::string_view text);

// Canonical form: fixed key order, two-space indentation, trailing newline.
std::string serialize_instance(const InstanceFile& file);

Json rational_to_json(const Rational& value);
Json walk_to_json(const InstanceFile& file, const Walk& walk);
Json vertices_to_json(const InstanceFile& file, const std::vector<Vertex>& vertices);
Json policy_to_json(const InstanceFile& file, const NonAdaptivePolicy& policy);
Json visits_to_json(const InstanceFile& file, const std::vector<TWVisit>& visits);

}  // namespace orient

#endif  // ORIENT_INSTANCE_IO_HPP_
