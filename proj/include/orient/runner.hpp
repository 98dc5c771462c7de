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

#ifndef ORIENT_RUNNER_HPP_
#define ORIENT_RUNNER_HPP_

#include <cstdint>
#include <string>

#include "orient/instance_io.hpp"
#include "orient/numeric.hpp"

namespace orient {

// Front-end glue shared by the C API and the tests: run an algorithm,
// oracle or simulation on a parsed instance and describe the outcome as
// JSON, checking the relevant invariants on the way.
struct RunOptions {
  Rational epsilon = 1;
  bool stochastic = false;
  bool slack_report = false;
  std::uint64_t seed = 0;
  std::uint64_t replicates = 0;
  std::string oracle;  // empty selects the default oracle for the kind
};

struct RunResult {
  Json json;
  double value = 0.0;
  bool ok = true;  // every checked invariant held
};

RunResult run_solve(const InstanceFile& file, const RunOptions& options);
// p2p: "subset-dp" (default) or "enumeration"; stoch: "nonadaptive"
// (default) or "adaptive"; tw: "strict" (default) or "slack".
RunResult run_oracle(const InstanceFile& file, const RunOptions& options);
// stoch and tw only; replicates default to 10^5 when zero.
RunResult run_simulate(const InstanceFile& file, const RunOptions& options);

}  // namespace orient

#endif  // ORIENT_RUNNER_HPP_
