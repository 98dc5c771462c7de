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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "orient/bench.hpp"
#include "orient/error.hpp"
#include "orient/generate.hpp"
#include "orient/instance_io.hpp"

namespace orient {
namespace {

constexpr char kMinimal[] = R"({
  "version": 1,
  "kind": "p2p",
  "vertices": [
    {
      "name": "u",
      "reward": 0
    },
    {
      "name": "v",
      "reward": 3
    }
  ],
  "matrix": [
    [
      0,
      2
    ],
    [
      2,
      0
    ]
  ],
  "start": "u",
  "end": "v",
  "budget": 2
}
)";

std::string parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    return e.what();
  }
  ADD_FAILURE() << "parsed without error";
  return "";
}

std::string with_replaced(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return text.replace(at, from.size(), to);
}

constexpr char kStochPair[] = R"({"version": 1, "kind": "stoch",
  "vertices": [
    {"name": "a", "reward": 0, "distribution": [{"size": 0, "probability": 1}]},
    {"name": "b", "reward": 4,
     "distribution": [{"size": 1, "probability": "1/2"}, {"size": 2, "probability": "2/5"}]}
  ],
  "edges": [{"from": "a", "to": "b", "weight": 1}],
  "start": "a", "terminal": "a", "budget": 4})";

TEST(InstanceIoTest, MinimalP2PRoundTripsByteForByte) {
  const InstanceFile file = parse_instance(kMinimal);
  EXPECT_EQ(file.kind(), ProblemKind::kP2P);
  const auto& p = std::get<P2PInstance>(file.problem);
  EXPECT_EQ(p.budget, 2);
  EXPECT_EQ(p.rewards, (std::vector<Reward>{0, 3}));
  EXPECT_EQ(file.name(1), "v");
  EXPECT_EQ(serialize_instance(file), kMinimal);
}

TEST(InstanceIoTest, CanonicalizesFormatting) {
  const std::string compact = Json::parse(kMinimal).dump();
  EXPECT_EQ(serialize_instance(parse_instance(compact)), kMinimal);
}

TEST(InstanceIoTest, ProbabilitySumNamesTheVertex) {
  const std::string msg = parse_error(kStochPair);
  EXPECT_NE(msg.find("'b'"), std::string::npos) << msg;
  EXPECT_NE(msg.find("9/10"), std::string::npos) << msg;
  EXPECT_NE(msg.find("vertices[1].distribution"), std::string::npos) << msg;
}

TEST(InstanceIoTest, DecimalProbabilitiesAreExact) {
  const std::string text = with_replaced(kStochPair, R"("2/5")", "0.5");
  const InstanceFile file = parse_instance(text);
  const auto& s = std::get<StochOrientInstance>(file.problem);
  EXPECT_EQ(s.sizes[1].probability_at_most(1), Rational(1, 2));
}

TEST(InstanceIoTest, TriangleViolationReportsTheTriple) {
  const std::string text = R"({"version": 1, "kind": "p2p",
    "vertices": [{"name": "a", "reward": 0}, {"name": "b", "reward": 1},
                 {"name": "c", "reward": 0}],
    "matrix": [[0, 1, 5], [1, 0, 1], [5, 1, 0]],
    "start": "a", "end": "c", "budget": 5})";
  const std::string msg = parse_error(text);
  EXPECT_NE(msg.find("triangle"), std::string::npos) << msg;
  EXPECT_NE(msg.find("(a, b, c)"), std::string::npos) << msg;
}

TEST(InstanceIoTest, EdgeListsAreClosed) {
  const std::string text = R"({"version": 1, "kind": "p2p",
    "vertices": [{"name": "a", "reward": 0}, {"name": "b", "reward": 1},
                 {"name": "c", "reward": 0}],
    "edges": [{"from": "a", "to": "b", "weight": 1}, {"from": "b", "to": "c", "weight": 1},
              {"from": "a", "to": "c", "weight": 5}],
    "start": "a", "end": "c", "budget": 5})";
  const InstanceFile file = parse_instance(text);
  EXPECT_EQ(file.space()(0, 2), 2);
  ASSERT_TRUE(file.edges.has_value());
  EXPECT_EQ(file.edges->size(), 3u);
}

TEST(InstanceIoTest, MalformedJsonReportsLineAndColumn) {
  const std::string msg = parse_error("{\n  \"version\": 1,\n  \"kind\": \n}");
  EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
  EXPECT_NE(msg.find("column"), std::string::npos) << msg;
}

TEST(InstanceIoTest, SchemaErrorsNameTheField) {
  EXPECT_NE(parse_error(with_replaced(kMinimal, "\"budget\": 2", "\"budget\": 2, \"extra\": 1"))
                .find("extra"),
            std::string::npos);
  EXPECT_NE(parse_error(with_replaced(kMinimal, "\"end\": \"v\"", "\"end\": \"w\""))
                .find("end"),
            std::string::npos);
  EXPECT_NE(parse_error(with_replaced(kMinimal, "\"version\": 1", "\"version\": 7"))
                .find("version"),
            std::string::npos);
  EXPECT_NE(parse_error(with_replaced(kMinimal, "\"kind\": \"p2p\"", "\"kind\": \"tsp\""))
                .find("kind"),
            std::string::npos);
  const std::string dup = with_replaced(kMinimal, "\"name\": \"v\"", "\"name\": \"u\"");
  EXPECT_NE(parse_error(dup).find("duplicate"), std::string::npos) << parse_error(dup);
}

TEST(InstanceIoTest, RejectsUnreachableDeadline) {
  const std::string text = R"({"version": 1, "kind": "tw",
    "vertices": [{"name": "r", "reward": 0, "release": 0, "deadline": 0},
                 {"name": "a", "reward": 2, "release": 0, "deadline": 0}],
    "matrix": [[0, 1], [1, 0]], "root": "r"})";
  const std::string msg = parse_error(text);
  EXPECT_NE(msg.find("deadline"), std::string::npos) << msg;
}

TEST(InstanceIoTest, GeneratedInstancesRoundTrip) {
  for (ProblemKind kind : {ProblemKind::kP2P, ProblemKind::kKnap, ProblemKind::kStoch,
                           ProblemKind::kTW}) {
    for (Profile profile : {Profile::kLine, Profile::kGrid, Profile::kClosure}) {
      for (int n = 1; n <= 8; n += 3) {
        for (bool stochastic : {false, true}) {
          if (stochastic && kind != ProblemKind::kTW) continue;
          const InstanceFile file =
              generate_instance(kind, n, 40 + n, profile, GeneratorOptions{stochastic});
          const std::string once = serialize_instance(file);
          const InstanceFile again = parse_instance(once);
          ASSERT_EQ(serialize_instance(again), once) << once;
          ASSERT_EQ(again.kind(), kind);
          ASSERT_EQ(again.space().size(), n);
        }
      }
    }
  }
}

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(ORIENT_TEST_DATA_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// The documented example files, one per kind.
TEST(InstanceIoTest, DocumentedExamplesParse) {
  const InstanceFile p2p = parse_instance(read_data("p2p.json"));
  EXPECT_EQ(std::get<P2PInstance>(p2p.problem).budget, 3);
  const InstanceFile knap = parse_instance(read_data("knap.json"));
  const auto& k = std::get<KnapOrientInstance>(knap.problem);
  EXPECT_EQ(k.sizes[2], Rational(5, 2));
  EXPECT_EQ(k.space(0, 2), 3);
  const InstanceFile stoch = parse_instance(read_data("stoch.json"));
  EXPECT_EQ(std::get<StochOrientInstance>(stoch.problem).sizes[2].probability_at_most(0),
            Rational(3, 4));
  const InstanceFile tw = parse_instance(read_data("tw.json"));
  const auto& t = std::get<TWInstance>(tw.problem);
  EXPECT_TRUE(t.stochastic);
  EXPECT_EQ(t.release[2], 3);
  for (const InstanceFile* f : {&p2p, &knap, &stoch, &tw}) {
    const std::string once = serialize_instance(*f);
    EXPECT_EQ(serialize_instance(parse_instance(once)), once);
  }
}

TEST(GenerateTest, DeterministicInAllArguments) {
  const std::string a = serialize_instance(generate_instance(ProblemKind::kP2P, 5, 7, Profile::kGrid));
  const std::string b = serialize_instance(generate_instance(ProblemKind::kP2P, 5, 7, Profile::kGrid));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, serialize_instance(generate_instance(ProblemKind::kP2P, 5, 8, Profile::kGrid)));
  EXPECT_NE(a, serialize_instance(generate_instance(ProblemKind::kP2P, 5, 7, Profile::kLine)));
}

TEST(GenerateTest, LineProfileIsCollinear) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const InstanceFile file = generate_instance(ProblemKind::kP2P, 6, seed, Profile::kLine);
    const MetricSpace& d = file.space();
    // One end of a diameter is the leftmost point; sorting by distance from
    // it must give additive gaps.
    Vertex left = 0;
    Distance diameter = -1;
    for (Vertex v = 0; v < d.size(); ++v) {
      for (Vertex w = 0; w < d.size(); ++w) {
        if (d(v, w) > diameter) {
          diameter = d(v, w);
          left = v;
        }
      }
    }
    std::vector<Vertex> order(static_cast<std::size_t>(d.size()));
    for (Vertex v = 0; v < d.size(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](Vertex x, Vertex y) { return d(left, x) < d(left, y); });
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = i; j < order.size(); ++j) {
        ASSERT_EQ(d(order[i], order[j]), d(left, order[j]) - d(left, order[i]))
            << "seed " << seed;
      }
    }
  }
}

TEST(GenerateTest, DistributionsSumToOneInSixteenths) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const InstanceFile file = generate_instance(ProblemKind::kStoch, 6, seed, Profile::kClosure);
    const auto& s = std::get<StochOrientInstance>(file.problem);
    for (const SizeDistribution& dist : s.sizes) {
      Rational total = 0;
      ASSERT_LE(dist.outcomes().size(), 3u);
      for (const auto& o : dist.outcomes()) {
        total += o.probability;
        ASSERT_EQ(Rational(16) * o.probability, Rational(floor_to_int64(Rational(16) * o.probability)));
      }
      ASSERT_EQ(total, 1);
    }
  }
}

TEST(GenerateTest, OutputsPassValidation) {
  for (int i = 0; i < 200; ++i) {
    const auto kind = static_cast<ProblemKind>(i % 4);
    const auto profile = static_cast<Profile>((i / 4) % 3);
    const InstanceFile file =
        generate_instance(kind, 1 + i % 11, 1000 + i, profile, GeneratorOptions{i % 2 == 0});
    ASSERT_NO_THROW(parse_instance(serialize_instance(file))) << i;
  }
}

BenchSpec single_suite(ProblemKind kind, int count, int n_min, int n_max) {
  BenchSpec spec;
  SuiteSpec suite;
  suite.kind = kind;
  suite.count = count;
  suite.n_min = n_min;
  suite.n_max = n_max;
  spec.suites.push_back(suite);
  return spec;
}

TEST(BenchTest, EmptySpecPasses) {
  const RatioReport report = run_bench(parse_bench_spec(R"({"suites": []})"));
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(report.rows.empty());
}

TEST(BenchTest, P2PSuiteMeetsFloor) {
  const RatioReport report = run_bench(single_suite(ProblemKind::kP2P, 60, 2, 10));
  ASSERT_EQ(report.suites.size(), 1u);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.suites[0].evaluated, 60);
  EXPECT_GE(report.suites[0].min_ratio, 0.5);
  for (const RatioRow& row : report.rows) {
    EXPECT_TRUE(row.feasible) << row.id;
    EXPECT_LE(row.ratio, 1 + 1e-9) << row.id;
  }
}

TEST(BenchTest, OverCapRowsAreSkipped) {
  BenchSpec spec = single_suite(ProblemKind::kP2P, 6, 4, 5);
  spec.limits.max_n_subset_dp = 4;
  const RatioReport report = run_bench(spec);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.suites[0].skipped, 3);
  EXPECT_EQ(report.suites[0].evaluated, 3);
  for (const RatioRow& row : report.rows) {
    EXPECT_EQ(row.status, row.n > 4 ? "skipped" : "ok") << row.id;
  }
  BenchSpec capped = single_suite(ProblemKind::kP2P, 3, 4, 4);
  const RatioReport alone = run_bench(capped);
  EXPECT_EQ(alone.suites[0].min_ratio, report.suites[0].min_ratio);
}

TEST(BenchTest, RowsSortedAndIndependentOfWorkers) {
  BenchSpec spec = parse_bench_spec(
      R"({"suites": [{"kind": "knap", "count": 12, "n_max": 6, "name": "b"},
                     {"kind": "tw", "count": 12, "n_max": 5, "epsilon": "1/4", "name": "a"}]})");
  const std::string serial = format_rows(run_bench(spec), false);
  spec.workers = 4;
  const RatioReport parallel = run_bench(spec);
  EXPECT_EQ(format_rows(parallel, false), serial);
  EXPECT_TRUE(std::is_sorted(parallel.rows.begin(), parallel.rows.end(),
                             [](const RatioRow& x, const RatioRow& y) { return x.id < y.id; }));
  EXPECT_EQ(parallel.rows.front().id, "a/00000");
}

TEST(BenchTest, SpecErrors) {
  EXPECT_THROW(parse_bench_spec("[]"), Error);
  EXPECT_THROW(parse_bench_spec(R"({"suites": [{"kind": "p2p", "size": 3}]})"), Error);
  EXPECT_THROW(parse_bench_spec(R"({"suites": [{"kind": "p2p", "n_min": 5, "n_max": 2}]})"),
               Error);
  EXPECT_THROW(parse_bench_spec(R"({"suites": [], "workers": 0})"), Error);
}

TEST(BenchTest, RatioFloors) {
  EXPECT_EQ(ratio_floor(ProblemKind::kP2P, 1), Rational(1, 2));
  EXPECT_EQ(ratio_floor(ProblemKind::kKnap, 1), Rational(1, 8));
  EXPECT_EQ(ratio_floor(ProblemKind::kStoch, 1), Rational(1, 32));
  EXPECT_EQ(ratio_floor(ProblemKind::kTW, 1), Rational(1, 144));
  EXPECT_EQ(ratio_floor(ProblemKind::kTW, 3), Rational(1, 96));
}

}  // namespace
}  // namespace orient
