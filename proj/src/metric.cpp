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

#include "orient/metric.hpp"

#include <algorithm>
#include <limits>

#include "orient/error.hpp"

namespace orient {
namespace {

constexpr Distance kUnreachable = std::numeric_limits<Distance>::max() / 4;

void check_vertex(const MetricSpace& space, Vertex v) {
  if (!space.contains(v)) {
    fail(ErrorCode::kInvalidArgument,
         "vertex " + std::to_string(v) + " out of range");
  }
}

}  // namespace

MetricSpace MetricSpace::from_matrix(
    const std::vector<std::vector<Distance>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Distance> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      fail(ErrorCode::kInvalidArgument, "distance matrix is not square");
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  MetricSpace space(n, std::move(flat));
  if (auto violation = validate_metric(space)) {
    fail(ErrorCode::kInvalidArgument, violation->describe());
  }
  return space;
}

MetricSpace MetricSpace::unchecked(int n, std::vector<Distance> row_major) {
  if (n < 0 || row_major.size() != static_cast<std::size_t>(n) * n) {
    fail(ErrorCode::kInvalidArgument, "distance matrix is not square");
  }
  return MetricSpace(n, std::move(row_major));
}

Distance MetricSpace::diameter() const {
  Distance best = 0;
  for (Distance d : dist_) best = std::max(best, d);
  return best;
}

std::vector<std::vector<Distance>> MetricSpace::rows() const {
  std::vector<std::vector<Distance>> out(n_);
  for (int i = 0; i < n_; ++i) {
    out[i].assign(dist_.begin() + static_cast<std::ptrdiff_t>(i) * n_,
                  dist_.begin() + static_cast<std::ptrdiff_t>(i + 1) * n_);
  }
  return out;
}

std::string MetricViolation::describe() const {
  const auto s = [](Vertex v) { return std::to_string(v); };
  switch (kind) {
    case Kind::kNegative:
      return "negative distance between " + s(i) + " and " + s(j);
    case Kind::kDiagonal:
      return "nonzero self-distance at " + s(i);
    case Kind::kAsymmetric:
      return "asymmetric distances between " + s(i) + " and " + s(j);
    case Kind::kTriangle:
      return "triangle inequality violated: d(" + s(i) + "," + s(k) +
             ") > d(" + s(i) + "," + s(j) + ") + d(" + s(j) + "," + s(k) +
             ")";
  }
  return "unknown violation";
}

std::optional<MetricViolation> validate_metric(const MetricSpace& space) {
  using Kind = MetricViolation::Kind;
  const int n = space.size();
  for (int i = 0; i < n; ++i) {
    if (space(i, i) != 0) return MetricViolation{Kind::kDiagonal, i, i, i};
    for (int j = 0; j < n; ++j) {
      if (space(i, j) < 0) return MetricViolation{Kind::kNegative, i, j, j};
      if (space(i, j) != space(j, i)) {
        return MetricViolation{Kind::kAsymmetric, i, j, j};
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (space(i, k) > space(i, j) + space(j, k)) {
          return MetricViolation{Kind::kTriangle, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

MetricSpace metric_closure(int n, std::span<const WeightedEdge> edges) {
  if (n <= 0) fail(ErrorCode::kInvalidArgument, "graph has no vertices");
  std::vector<Distance> dist(static_cast<std::size_t>(n) * n, kUnreachable);
  const auto at = [&](int i, int j) -> Distance& {
    return dist[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) at(i, i) = 0;
  for (const WeightedEdge& e : edges) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
      fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (e.a == e.b) {
      fail(ErrorCode::kInvalidArgument,
           "self-loop at vertex " + std::to_string(e.a));
    }
    if (e.weight < 0) {
      fail(ErrorCode::kInvalidArgument,
           "negative weight on edge " + std::to_string(e.a) + "-" +
               std::to_string(e.b));
    }
    at(e.a, e.b) = std::min(at(e.a, e.b), e.weight);
    at(e.b, e.a) = at(e.a, e.b);
  }
  // Floyd-Warshall.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (at(i, k) == kUnreachable) continue;
      for (int j = 0; j < n; ++j) {
        const Distance via = at(i, k) + at(k, j);
        if (via < at(i, j)) at(i, j) = via;
      }
    }
  }
  for (int j = 1; j < n; ++j) {
    if (at(0, j) == kUnreachable) {
      fail(ErrorCode::kInvalidArgument,
           "graph is disconnected: vertex " + std::to_string(j) +
               " unreachable from vertex 0");
    }
  }
  return MetricSpace::unchecked(n, std::move(dist));
}

Distance walk_length(const MetricSpace& space, const Walk& walk) {
  if (walk.empty()) fail(ErrorCode::kInvalidArgument, "empty walk");
  Distance total = 0;
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    check_vertex(space, walk.vertices[i]);
    if (i > 0) total += space(walk.vertices[i - 1], walk.vertices[i]);
  }
  return total;
}

Distance walk_excess(const MetricSpace& space, const Walk& walk) {
  return walk_length(space, walk) - space(walk.front(), walk.back());
}

Walk concat(const Walk& head, const Walk& tail) {
  Walk out = head;
  auto it = tail.vertices.begin();
  if (!out.empty() && it != tail.vertices.end() && *it == out.back()) ++it;
  out.vertices.insert(out.vertices.end(), it, tail.vertices.end());
  return out;
}

Walk direct_walk(Vertex u, Vertex v) {
  if (u == v) return Walk{{u}};
  return Walk{{u, v}};
}

std::vector<Vertex> distinct_vertices(const Walk& walk) {
  std::vector<Vertex> out;
  for (Vertex v : walk.vertices) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

}  // namespace orient
