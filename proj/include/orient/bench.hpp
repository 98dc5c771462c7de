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

#ifndef ORIENT_BENCH_HPP_
#define ORIENT_BENCH_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orient/generate.hpp"
#include "orient/instance_io.hpp"
#include "orient/numeric.hpp"
#include "orient/subset_paths.hpp"

namespace orient {

// One generated family paired with its algorithm and exact oracle:
//   p2p   solve_p2p            vs oracle_p2p_orienteering   floor 1/2
//   knap  solve_p2p_knap       vs oracle_knap_orient        floor 1/8
//   stoch randomized value     vs oracle_nonadaptive_stoch  floor 1/32
//   tw    solve_time_windows   vs oracle_time_windows       floor 1/(24(s+2))
struct SuiteSpec {
  std::string name;  // row id prefix; defaults to the kind name
  ProblemKind kind = ProblemKind::kP2P;
  int count = 0;
  int n_min = 2;
  int n_max = 8;
  std::vector<Profile> profiles = {Profile::kLine, Profile::kGrid, Profile::kClosure};
  std::uint64_t seed = 1;
  Rational epsilon = 1;  // tw only
};

struct BenchSpec {
  std::vector<SuiteSpec> suites;
  OracleLimits limits;
  int workers = 1;  // parallel rows; output is independent of this
};

// {"suites": [{"kind": "p2p", "count": 200, "n_min": 2, "n_max": 10,
//              "profiles": ["line"], "seed": 1, "epsilon": "1/4"}]}
BenchSpec parse_bench_spec(std::string_view text);

struct RatioRow {
  std::string id;
  std::string suite;
  ProblemKind kind = ProblemKind::kP2P;
  int n = 0;
  Profile profile = Profile::kLine;
  std::uint64_t seed = 0;
  std::string status;  // "ok", "skipped" or "error"
  Rational algorithm_value = 0;
  Rational oracle_value = 0;
  double ratio = 0.0;
  bool feasible = false;
  bool violation = false;
  double runtime_ms = 0.0;
  std::string note;
};

struct SuiteSummary {
  std::string name;
  Rational floor;
  int rows = 0;
  int evaluated = 0;
  int skipped = 0;
  double min_ratio = 1.0;
  double median_ratio = 1.0;
  int violations = 0;
};

struct RatioReport {
  std::vector<RatioRow> rows;  // sorted by id
  std::vector<SuiteSummary> suites;
  int violations = 0;

  bool passed() const { return violations == 0; }
};

Rational ratio_floor(ProblemKind kind, const Rational& epsilon);

RatioReport run_bench(const BenchSpec& spec);

// Human-readable table; runtimes are printed only when requested so that
// the default output is byte-for-byte reproducible.
std::string format_table(const RatioReport& report, bool timings = false);
// One JSON object per line: every row, then one summary line per suite.
std::string format_rows(const RatioReport& report, bool timings = false);

}  // namespace orient

#endif  // ORIENT_BENCH_HPP_
