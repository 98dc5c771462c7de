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

#ifndef ORIENT_METRIC_HPP_
#define ORIENT_METRIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace orient {

using Vertex = int;
using Distance = std::int64_t;

struct WeightedEdge {
  Vertex a = 0;
  Vertex b = 0;
  Distance weight = 0;
};

// Finite symmetric metric over dense vertex indices 0..n-1. Immutable once
// built. Instances produced by `metric_closure` and `from_matrix` always
// satisfy the metric axioms; `unchecked` exists so that `validate_metric`
// can be applied to arbitrary matrices.
class MetricSpace {
 public:
  MetricSpace() = default;

  // Throws Error(kInvalidArgument) naming the first violation.
  static MetricSpace from_matrix(const std::vector<std::vector<Distance>>& rows);
  static MetricSpace unchecked(int n, std::vector<Distance> row_major);

  int size() const { return n_; }
  Distance operator()(Vertex i, Vertex j) const {
    return dist_[static_cast<std::size_t>(i) * n_ + j];
  }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  Distance diameter() const;

  std::vector<std::vector<Distance>> rows() const;

  bool operator==(const MetricSpace&) const = default;

 private:
  MetricSpace(int n, std::vector<Distance> dist) : n_(n), dist_(std::move(dist)) {}

  int n_ = 0;
  std::vector<Distance> dist_;
};

struct MetricViolation {
  enum class Kind { kNegative, kDiagonal, kAsymmetric, kTriangle };
  Kind kind = Kind::kTriangle;
  // For kTriangle: dist(i,k) > dist(i,j) + dist(j,k). For kAsymmetric and
  // kNegative the pair is (i,j); for kDiagonal only i is meaningful.
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;

  std::string describe() const;
};

std::optional<MetricViolation> validate_metric(const MetricSpace& space);

// All-pairs shortest paths over an undirected edge list. Throws on negative
// weights, self-loops, out-of-range endpoints and disconnected graphs.
MetricSpace metric_closure(int n, std::span<const WeightedEdge> edges);

// Ordered vertex sequence; repeats are allowed.
struct Walk {
  std::vector<Vertex> vertices;

  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Walk&) const = default;
};

Distance walk_length(const MetricSpace& space, const Walk& walk);
Distance walk_excess(const MetricSpace& space, const Walk& walk);

// Joins two walks; a shared junction vertex is kept once.
Walk concat(const Walk& head, const Walk& tail);

// Walk u -> v with no intermediate stop (a single vertex when u == v).
Walk direct_walk(Vertex u, Vertex v);

// Vertices of the walk in order of first occurrence.
std::vector<Vertex> distinct_vertices(const Walk& walk);

}  // namespace orient

#endif  // ORIENT_METRIC_HPP_
