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

#include "orient/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "orient/error.hpp"
#include "orient/knap.hpp"
#include "orient/oracles.hpp"
#include "orient/p2p.hpp"
#include "orient/stoch.hpp"
#include "orient/time_windows.hpp"

namespace orient {
namespace {

constexpr double kRatioTolerance = 1e-9;

struct Outcome {
  Rational algorithm = 0;
  Rational oracle = 0;
  bool feasible = false;
  // Upper bound that the algorithm may not exceed (the oracle itself, or
  // the slackened oracle for time windows).
  Rational ceiling = 0;
  std::string note;
};

Outcome evaluate_p2p(const P2PInstance& inst, const OracleLimits& limits) {
  Outcome out;
  const PathResult opt = oracle_p2p_orienteering(inst, limits);
  const P2PSolution<Reward> sol = solve_p2p(inst);
  out.oracle = opt.reward;
  out.ceiling = opt.reward;
  out.algorithm = sol.reward;
  out.feasible = !sol.walk.empty() && sol.walk.front() == inst.start &&
                 sol.walk.back() == inst.end &&
                 walk_length(inst.space, sol.walk) <= inst.budget;
  return out;
}

Outcome evaluate_knap(const KnapOrientInstance& inst, const OracleLimits& limits) {
  Outcome out;
  const KnapRoute opt = oracle_knap_orient(inst, limits);
  const KnapRoute route = solve_p2p_knap(inst, nullptr, limits);
  out.oracle = opt.reward;
  out.ceiling = opt.reward;
  out.algorithm = route.reward;
  out.feasible = route_is_feasible(inst, route);
  return out;
}

Outcome evaluate_stoch(const StochOrientInstance& inst, const OracleLimits& limits) {
  Outcome out;
  const OrderValue opt = oracle_nonadaptive_stoch(inst, limits);
  StochOptions options;
  options.limits = limits;
  const NonAdaptivePolicy policy = solve_p2p_stoch(inst, options);
  const PolicyValue value = randomized_policy_value(inst, policy);
  out.oracle = opt.value;
  out.ceiling = opt.value;
  out.algorithm = value.value;
  if (!value.exact) out.note = "sampled value";
  out.feasible = !policy.path.empty() && policy.path.front() == inst.start &&
                 policy.path.back() == inst.terminal &&
                 walk_length(inst.space, policy.path) <= inst.budget;
  return out;
}

Outcome evaluate_tw(const TWInstance& inst, const Rational& epsilon,
                    const OracleLimits& limits) {
  Outcome out;
  const Rational slack = 1 + epsilon;
  const TWRoute opt = oracle_time_windows(inst, 1, limits);
  const TWRoute relaxed = oracle_time_windows(inst, slack, limits);
  const TWSolution sol = solve_time_windows(inst, epsilon);
  out.oracle = opt.reward;
  out.ceiling = relaxed.reward;
  out.algorithm = sol.reward;
  const auto verdicts = check_tw_feasibility(sol.visits, inst, slack);
  out.feasible = !sol.walk.empty() && sol.walk.front() == inst.root;
  for (const TWVerdict& v : verdicts) {
    if (!v.counted) {
      out.feasible = false;
      out.note = v.reason;
    }
  }
  return out;
}

double ratio_of(const Rational& alg, const Rational& opt) {
  if (opt == 0) return 1.0;
  return to_double(alg / opt);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double median(std::vector<double> v) {
  if (v.empty()) return 1.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

}  // namespace

Rational ratio_floor(ProblemKind kind, const Rational& epsilon) {
  switch (kind) {
    case ProblemKind::kP2P: return Rational(1, 2);
    case ProblemKind::kKnap: return Rational(1, 8);
    case ProblemKind::kStoch: return Rational(1, 32);
    case ProblemKind::kTW: {
      const int s = compute_margin_params(epsilon).s;
      return Rational(1, 24 * (s + 2));
    }
  }
  return 0;
}

BenchSpec parse_bench_spec(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("bench spec: ") + e.what());
  }
  const auto bad = [](const std::string& path, const std::string& msg) {
    fail(ErrorCode::kParse, "bench spec " + path + ": " + msg);
  };
  if (!root.is_object() || !root.contains("suites") || !root["suites"].is_array()) {
    bad("$", "expected {\"suites\": [...]}");
  }
  BenchSpec spec;
  for (const auto& item : root.items()) {
    if (item.key() != "suites" && item.key() != "workers") {
      bad("$", "unknown field '" + item.key() + "'");
    }
  }
  if (root.contains("workers")) {
    const Json& w = root["workers"];
    if (!w.is_number_integer() || w.get<int>() < 1) bad("workers", "expected a positive integer");
    spec.workers = w.get<int>();
  }
  const Json& suites = root["suites"];
  for (std::size_t i = 0; i < suites.size(); ++i) {
    const std::string at = "suites[" + std::to_string(i) + "]";
    const Json& s = suites[i];
    if (!s.is_object()) bad(at, "expected an object");
    for (const auto& item : s.items()) {
      static const char* const kKnown[] = {"name", "kind", "count", "n_min",
                                           "n_max", "profiles", "seed", "epsilon"};
      if (std::find(std::begin(kKnown), std::end(kKnown), item.key()) == std::end(kKnown)) {
        bad(at, "unknown field '" + item.key() + "'");
      }
    }
    SuiteSpec suite;
    try {
      if (!s.contains("kind")) bad(at, "missing field 'kind'");
      suite.kind = parse_kind(s["kind"].get<std::string>());
      suite.name = s.value("name", std::string(kind_name(suite.kind)));
      suite.count = s.value("count", 0);
      suite.n_min = s.value("n_min", suite.n_min);
      suite.n_max = s.value("n_max", suite.n_max);
      suite.seed = s.value("seed", suite.seed);
      if (s.contains("profiles")) {
        suite.profiles.clear();
        for (const Json& p : s["profiles"]) {
          suite.profiles.push_back(parse_profile(p.get<std::string>()));
        }
      }
      if (s.contains("epsilon")) {
        const Json& e = s["epsilon"];
        suite.epsilon = e.is_string() ? parse_rational(e.get<std::string>())
                                      : parse_rational(e.dump());
      }
    } catch (const Json::exception& e) {
      bad(at, e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kParse && std::string_view(e.what()).starts_with("bench spec")) {
        throw;
      }
      bad(at, e.what());
    }
    if (suite.count < 0) bad(at + ".count", "must be non-negative");
    if (suite.n_min < 1 || suite.n_max < suite.n_min) bad(at, "need 1 <= n_min <= n_max");
    if (suite.profiles.empty()) bad(at + ".profiles", "must not be empty");
    if (suite.epsilon <= 0) bad(at + ".epsilon", "must be positive");
    spec.suites.push_back(std::move(suite));
  }
  return spec;
}

namespace {

RatioRow evaluate_row(const SuiteSpec& suite, const SuiteSummary& summary, int i,
                      const OracleLimits& limits) {
  RatioRow row;
  row.suite = summary.name;
  char index[16];
  std::snprintf(index, sizeof index, "%05d", i);
  row.id = summary.name + "/" + index;
  row.kind = suite.kind;
  const int span = suite.n_max - suite.n_min + 1;
  row.n = suite.n_min + i % span;
  row.profile = suite.profiles[static_cast<std::size_t>(i / span) % suite.profiles.size()];
  row.seed = suite.seed + static_cast<std::uint64_t>(i);

  const auto started = std::chrono::steady_clock::now();
  try {
    const InstanceFile file = generate_instance(suite.kind, row.n, row.seed, row.profile);
    Outcome out;
    switch (suite.kind) {
      case ProblemKind::kP2P:
        out = evaluate_p2p(std::get<P2PInstance>(file.problem), limits);
        break;
      case ProblemKind::kKnap:
        out = evaluate_knap(std::get<KnapOrientInstance>(file.problem), limits);
        break;
      case ProblemKind::kStoch:
        out = evaluate_stoch(std::get<StochOrientInstance>(file.problem), limits);
        break;
      case ProblemKind::kTW:
        out = evaluate_tw(std::get<TWInstance>(file.problem), suite.epsilon, limits);
        break;
    }
    row.status = "ok";
    row.algorithm_value = out.algorithm;
    row.oracle_value = out.oracle;
    row.ratio = ratio_of(out.algorithm, out.oracle);
    row.feasible = out.feasible;
    row.note = out.note;
    const bool below_floor = out.oracle > 0 && out.algorithm < summary.floor * out.oracle;
    const bool above_ceiling =
        to_double(out.algorithm) > to_double(out.ceiling) * (1 + kRatioTolerance);
    if (below_floor) row.note = "ratio below floor " + to_string(summary.floor);
    if (above_ceiling) row.note = "value exceeds exact optimum";
    row.violation = !out.feasible || below_floor || above_ceiling;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kCapExceeded) {
      row.status = "skipped";
    } else {
      row.status = "error";
      row.violation = true;
    }
    row.note = e.what();
  }
  row.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return row;
}

}  // namespace

RatioReport run_bench(const BenchSpec& spec) {
  RatioReport report;
  for (const SuiteSpec& suite : spec.suites) {
    SuiteSummary summary;
    summary.name = suite.name.empty() ? std::string(kind_name(suite.kind)) : suite.name;
    summary.floor = ratio_floor(suite.kind, suite.epsilon);

    // Rows are independent; workers pull indices and write into fixed slots
    // so the result does not depend on scheduling.
    std::vector<RatioRow> rows(static_cast<std::size_t>(std::max(suite.count, 0)));
    std::atomic<int> next{0};
    auto work = [&] {
      for (int i = next++; i < suite.count; i = next++) {
        rows[static_cast<std::size_t>(i)] = evaluate_row(suite, summary, i, spec.limits);
      }
    };
    const int workers = std::clamp(spec.workers, 1, std::max(suite.count, 1));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    std::vector<double> ratios;
    for (RatioRow& row : rows) {
      ++summary.rows;
      if (row.status == "skipped") {
        ++summary.skipped;
      } else if (row.status == "ok") {
        ++summary.evaluated;
        ratios.push_back(row.ratio);
      }
      if (row.violation) ++summary.violations;
      report.rows.push_back(std::move(row));
    }
    if (!ratios.empty()) {
      summary.min_ratio = *std::min_element(ratios.begin(), ratios.end());
      summary.median_ratio = median(ratios);
    }
    report.violations += summary.violations;
    report.suites.push_back(std::move(summary));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const RatioRow& a, const RatioRow& b) { return a.id < b.id; });
  return report;
}

std::string format_table(const RatioReport& report, bool timings) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %3s %-8s %10s %10s %8s %-8s %-8s", "id", "n",
                "profile", "algorithm", "oracle", "ratio", "feasible", "status");
  os << line << (timings ? "  runtime_ms" : "") << "\n";
  for (const RatioRow& r : report.rows) {
    const bool ok = r.status == "ok";
    std::snprintf(line, sizeof line, "%-16s %3d %-8s %10s %10s %8s %-8s %-8s", r.id.c_str(),
                  r.n, std::string(profile_name(r.profile)).c_str(),
                  ok ? fixed(to_double(r.algorithm_value), 3).c_str() : "-",
                  ok ? fixed(to_double(r.oracle_value), 3).c_str() : "-",
                  ok ? fixed(r.ratio, 4).c_str() : "-",
                  ok ? (r.feasible ? "yes" : "NO") : "-", r.status.c_str());
    os << line;
    if (timings) os << "  " << fixed(r.runtime_ms, 2);
    if (r.violation) os << "  ! " << r.note;
    os << "\n";
  }
  for (const SuiteSummary& s : report.suites) {
    os << "suite " << s.name << ": rows " << s.rows << ", evaluated " << s.evaluated
       << ", skipped " << s.skipped << ", min ratio " << fixed(s.min_ratio, 4)
       << ", median ratio " << fixed(s.median_ratio, 4) << ", floor " << to_string(s.floor)
       << ", violations " << s.violations << "\n";
  }
  os << (report.passed() ? "PASS" : "FAIL") << " (" << report.violations
     << " violations)\n";
  return os.str();
}

std::string format_rows(const RatioReport& report, bool timings) {
  std::string out;
  for (const RatioRow& r : report.rows) {
    Json j;
    j["type"] = "row";
    j["id"] = r.id;
    j["suite"] = r.suite;
    j["kind"] = std::string(kind_name(r.kind));
    j["n"] = r.n;
    j["profile"] = std::string(profile_name(r.profile));
    j["seed"] = r.seed;
    j["status"] = r.status;
    if (r.status == "ok") {
      j["algorithm"] = rational_to_json(r.algorithm_value);
      j["oracle"] = rational_to_json(r.oracle_value);
      j["ratio"] = r.ratio;
      j["feasible"] = r.feasible;
    }
    j["violation"] = r.violation;
    if (timings) j["runtime_ms"] = r.runtime_ms;
    if (!r.note.empty()) j["note"] = r.note;
    out += j.dump() + "\n";
  }
  for (const SuiteSummary& s : report.suites) {
    Json j;
    j["type"] = "summary";
    j["suite"] = s.name;
    j["rows"] = s.rows;
    j["evaluated"] = s.evaluated;
    j["skipped"] = s.skipped;
    j["min_ratio"] = s.min_ratio;
    j["median_ratio"] = s.median_ratio;
    j["floor"] = rational_to_json(s.floor);
    j["violations"] = s.violations;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace orient
