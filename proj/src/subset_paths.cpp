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

#include "orient/subset_paths.hpp"

#include <algorithm>
#include <string>

#include "orient/error.hpp"

namespace orient {

SubsetPathTable::SubsetPathTable(const MetricSpace& space, Vertex source,
                                 const OracleLimits& limits)
    : n_(space.size()), source_(source) {
  if (n_ > limits.max_n_subset_dp || n_ > 30) {
    fail(ErrorCode::kCapExceeded,
         "subset DP limited to " + std::to_string(limits.max_n_subset_dp) +
             " vertices, got " + std::to_string(n_));
  }
  if (!space.contains(source)) {
    fail(ErrorCode::kInvalidArgument, "source vertex out of range");
  }
  const std::size_t masks = std::size_t{1} << n_;
  dp_.assign(masks * n_, kInfinite);
  parent_.assign(masks * n_, -1);
  close_.assign(masks * n_, kInfinite);
  close_via_.assign(masks * n_, -1);

  dp_[index(bit(source), source)] = 0;
  // Masks only grow, so increasing numeric order is a topological order.
  for (std::size_t m = 0; m < masks; ++m) {
    const auto mask = static_cast<VertexMask>(m);
    if (!has(mask, source)) continue;
    for (Vertex a = 0; a < n_; ++a) {
      const Distance base = dp_[index(mask, a)];
      if (base >= kInfinite) continue;
      for (Vertex b = 0; b < n_; ++b) {
        if (has(mask, b)) continue;
        const std::size_t next = index(mask | bit(b), b);
        const Distance cand = base + space(a, b);
        if (cand < dp_[next]) {
          dp_[next] = cand;
          parent_[next] = static_cast<std::int8_t>(a);
        }
      }
    }
    for (Vertex t = 0; t < n_; ++t) {
      Distance best = kInfinite;
      Vertex via = -1;
      for (Vertex a = 0; a < n_; ++a) {
        const Distance base = dp_[index(mask, a)];
        if (base >= kInfinite) continue;
        const Distance cand = base + space(a, t);
        if (cand < best) {
          best = cand;
          via = a;
        }
      }
      close_[index(mask, t)] = best;
      close_via_[index(mask, t)] = static_cast<std::int8_t>(via);
    }
  }
}

Walk SubsetPathTable::walk(VertexMask mask, Vertex target) const {
  if (!has(mask, source_)) {
    fail(ErrorCode::kInvalidArgument, "mask does not contain the source");
  }
  const Vertex via = close_via_[index(mask, target)];
  std::vector<Vertex> reversed;
  if (via != target) reversed.push_back(target);
  Vertex last = via;
  VertexMask m = mask;
  while (!(m == bit(source_) && last == source_)) {
    reversed.push_back(last);
    const Vertex prev = parent_[index(m, last)];
    m &= ~bit(last);
    last = prev;
  }
  reversed.push_back(source_);
  std::reverse(reversed.begin(), reversed.end());
  return Walk{std::move(reversed)};
}

SubsetPathCache::SubsetPathCache(const MetricSpace& space,
                                 const OracleLimits& limits)
    : space_(space), limits_(limits), tables_(space.size()) {}

const SubsetPathTable& SubsetPathCache::table(Vertex source) const {
  if (!space_.contains(source)) {
    fail(ErrorCode::kInvalidArgument, "source vertex out of range");
  }
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = tables_[static_cast<std::size_t>(source)];
  if (!slot) slot = std::make_unique<SubsetPathTable>(space_, source, limits_);
  return *slot;
}

std::shared_ptr<const SubsetPathCache> shared_subset_paths(
    const MetricSpace& space, const OracleLimits& limits) {
  constexpr std::size_t kCapacity = 8;
  static std::mutex mu;
  static std::vector<std::shared_ptr<const SubsetPathCache>> recent;
  if (space.size() > limits.max_n_subset_dp) {
    fail(ErrorCode::kCapExceeded,
         "subset DP limited to " + std::to_string(limits.max_n_subset_dp) +
             " vertices, got " + std::to_string(space.size()));
  }
  std::lock_guard<std::mutex> lock(mu);
  for (std::size_t i = 0; i < recent.size(); ++i) {
    if (recent[i]->space() == space) {
      auto hit = recent[i];
      recent.erase(recent.begin() + static_cast<std::ptrdiff_t>(i));
      recent.insert(recent.begin(), hit);
      return hit;
    }
  }
  auto fresh = std::make_shared<const SubsetPathCache>(space, limits);
  recent.insert(recent.begin(), fresh);
  if (recent.size() > kCapacity) recent.pop_back();
  return fresh;
}

}  // namespace orient
