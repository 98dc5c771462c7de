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

#include "orient/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "orient/error.hpp"

namespace orient {
namespace {

struct Scale {
  std::int64_t line_span;
  std::int64_t grid_side;
  std::int64_t max_weight;
};

std::int64_t ceil_sqrt(std::int64_t s) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(s)));
  while (r * r > s) --r;
  while (r * r < s) ++r;
  return r;
}

MetricSpace line_metric(int n, const Scale& scale, CounterRng& rng) {
  std::vector<std::int64_t> x(n);
  for (auto& p : x) p = rng.uniform_int(0, scale.line_span);
  std::vector<Distance> flat;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) flat.push_back(x[i] > x[j] ? x[i] - x[j] : x[j] - x[i]);
  }
  return MetricSpace::unchecked(n, std::move(flat));
}

MetricSpace grid_metric(int n, const Scale& scale, CounterRng& rng) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pts(n);
  for (auto& p : pts) {
    p.first = rng.uniform_int(0, scale.grid_side);
    p.second = rng.uniform_int(0, scale.grid_side);
  }
  std::vector<Distance> flat;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::int64_t dx = pts[i].first - pts[j].first;
      const std::int64_t dy = pts[i].second - pts[j].second;
      flat.push_back(ceil_sqrt(dx * dx + dy * dy));
    }
  }
  return MetricSpace::unchecked(n, std::move(flat));
}

std::vector<WeightedEdge> random_graph(int n, const Scale& scale, CounterRng& rng) {
  std::vector<WeightedEdge> edges;
  for (int i = 1; i < n; ++i) {
    const auto j = static_cast<Vertex>(rng.uniform_int(0, i - 1));
    edges.push_back({j, i, rng.uniform_int(1, scale.max_weight)});
  }
  if (n >= 3) {
    const int extra = n / 2;
    for (int e = 0; e < extra; ++e) {
      const auto a = static_cast<Vertex>(rng.uniform_int(0, n - 1));
      auto b = static_cast<Vertex>(rng.uniform_int(0, n - 2));
      if (b >= a) ++b;
      edges.push_back({a, b, rng.uniform_int(1, scale.max_weight)});
    }
  }
  return edges;
}

// k distinct values from [0, hi], sorted.
std::vector<std::int64_t> distinct_values(int k, std::int64_t hi, CounterRng& rng) {
  std::vector<std::int64_t> out;
  while (static_cast<int>(out.size()) < k) {
    const std::int64_t v = rng.uniform_int(0, hi);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SizeDistribution sixteenths(std::int64_t max_size, CounterRng& rng) {
  const int k = static_cast<int>(rng.uniform_int(1, 3));
  const std::vector<std::int64_t> sizes = distinct_values(k, max_size, rng);
  // Cut points split 16 into k positive parts.
  std::vector<std::int64_t> cuts = distinct_values(k - 1, 14, rng);
  for (auto& c : cuts) c += 1;
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(16);
  std::vector<SizeOutcome> outcomes;
  for (int i = 0; i < k; ++i) {
    outcomes.push_back({sizes[i], make_rational(cuts[i + 1] - cuts[i], 16)});
  }
  return SizeDistribution::from_outcomes(std::move(outcomes));
}

std::uint64_t stream_for(ProblemKind kind, int n, Profile profile,
                         const GeneratorOptions& options) {
  return (static_cast<std::uint64_t>(kind) << 24) |
         (static_cast<std::uint64_t>(profile) << 16) |
         (static_cast<std::uint64_t>(options.stochastic_tw) << 12) |
         static_cast<std::uint64_t>(n);
}

}  // namespace

std::string_view profile_name(Profile profile) {
  switch (profile) {
    case Profile::kLine: return "line";
    case Profile::kGrid: return "grid";
    case Profile::kClosure: return "closure";
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  if (name == "line" || name == "line-metric") return Profile::kLine;
  if (name == "grid" || name == "random-euclidean-grid") return Profile::kGrid;
  if (name == "closure" || name == "random-closure") return Profile::kClosure;
  fail(ErrorCode::kInvalidArgument,
       "unknown profile '" + std::string(name) + "' (expected line, grid or closure)");
}

InstanceFile generate_instance(ProblemKind kind, int n, std::uint64_t seed,
                               Profile profile, const GeneratorOptions& options) {
  if (n < 1 || n > 4096) fail(ErrorCode::kInvalidArgument, "n must be in [1, 4096]");
  CounterRng rng(seed, stream_for(kind, n, profile, options));
  const bool small = kind == ProblemKind::kStoch ||
                     (kind == ProblemKind::kTW && options.stochastic_tw);
  const Scale scale = small ? Scale{std::min<std::int64_t>(n + 2, 10), 4, 3}
                            : Scale{4 * static_cast<std::int64_t>(n), 8, 9};

  InstanceFile file;
  file.seed = seed;
  for (int i = 0; i < n; ++i) file.names.push_back("v" + std::to_string(i));
  MetricSpace space;
  switch (profile) {
    case Profile::kLine: space = line_metric(n, scale, rng); break;
    case Profile::kGrid: space = grid_metric(n, scale, rng); break;
    case Profile::kClosure: {
      std::vector<WeightedEdge> edges = random_graph(n, scale, rng);
      space = metric_closure(n, edges);
      file.edges = std::move(edges);
      break;
    }
  }
  const Distance diam = space.diameter();
  const auto end_vertex = [&] { return static_cast<Vertex>(rng.uniform_int(0, n - 1)); };

  switch (kind) {
    case ProblemKind::kP2P: {
      P2PInstance p;
      p.rewards.resize(n);
      for (auto& r : p.rewards) r = rng.uniform_int(0, 10);
      p.start = 0;
      p.end = end_vertex();
      p.budget = space(p.start, p.end) + rng.uniform_int(0, diam + diam / 2);
      p.space = std::move(space);
      file.problem = std::move(p);
      break;
    }
    case ProblemKind::kKnap: {
      KnapOrientInstance k;
      k.rewards.resize(n);
      Rational total = 0;
      for (auto& r : k.rewards) {
        r = rng.uniform_int(0, 10);
        Rational s = rng.uniform_int(0, 3) == 0 ? make_rational(rng.uniform_int(1, 11), 2)
                                                : Rational(rng.uniform_int(0, 6));
        total += s;
        k.sizes.push_back(std::move(s));
      }
      k.start = 0;
      k.end = end_vertex();
      k.travel_budget = space(k.start, k.end) + rng.uniform_int(0, diam + diam / 2);
      k.knapsack_budget = make_rational(rng.uniform_int(0, floor_to_int64(total)), 1);
      if (rng.uniform_int(0, 3) == 0) k.knapsack_budget += Rational(1, 2);
      k.space = std::move(space);
      file.problem = std::move(k);
      break;
    }
    case ProblemKind::kStoch: {
      StochOrientInstance s;
      s.rewards.resize(n);
      for (auto& r : s.rewards) {
        r = rng.uniform_int(1, 10);
        s.sizes.push_back(sixteenths(6, rng));
      }
      s.start = 0;
      s.terminal = end_vertex();
      const Distance d = space(s.start, s.terminal);
      s.budget = std::max<std::int64_t>(d, std::min<std::int64_t>(20, d + rng.uniform_int(2, 14)));
      s.space = std::move(space);
      file.problem = std::move(s);
      break;
    }
    case ProblemKind::kTW: {
      TWInstance t;
      t.root = 0;
      t.stochastic = options.stochastic_tw;
      for (Vertex v = 0; v < n; ++v) {
        t.rewards.push_back(rng.uniform_int(1, 10));
        const std::int64_t release = rng.uniform_int(0, 2 * diam);
        const std::int64_t earliest = std::max<std::int64_t>(release, space(0, v));
        t.release.push_back(release);
        t.deadline.push_back(earliest + rng.uniform_int(0, 2 * diam + 2));
        if (t.stochastic) t.waiting.push_back(sixteenths(3, rng));
      }
      t.space = std::move(space);
      file.problem = std::move(t);
      break;
    }
  }
  std::visit([](const auto& p) { p.validate(); }, file.problem);
  return file;
}

}  // namespace orient
