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

// Command-line front end. Everything goes through the C API in orient.h.
//
//   orient solve {p2p|knap|stoch|tw} FILE [--epsilon E] [--stochastic]
//                [--slack-report] [--replicates N]
//   orient oracle {p2p|knap|stoch|tw} FILE [--which NAME] [--epsilon E]
//   orient simulate FILE [--replicates N] [--epsilon E] [--stochastic]
//   orient gen {p2p|knap|stoch|tw} --n N [--profile P] [--stochastic]
//   orient bench [--spec FILE | --kind K ...] [--workers N] [--timings]
//
// Global flags: --seed, --out, --format {table|rows}.
// Exit status: 0 success, 1 invariant failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "orient/orient.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "table";
};

struct InstanceDeleter {
  void operator()(orient_instance* p) const { orient_instance_free(p); }
};
struct ResultDeleter {
  void operator()(orient_result* p) const { orient_result_free(p); }
};
struct ReportDeleter {
  void operator()(orient_report* p) const { orient_report_free(p); }
};
using InstancePtr = std::unique_ptr<orient_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<orient_result, ResultDeleter>;
using ReportPtr = std::unique_ptr<orient_report, ReportDeleter>;

// Takes ownership of a string returned by the library.
std::string adopt(char* text) {
  std::string s = text ? text : "";
  orient_string_free(text);
  return s;
}

int status_exit(orient_status status, const std::string& context = "") {
  std::cerr << "orient: " << (context.empty() ? "" : context + ": ")
            << orient_status_name(status) << ": " << orient_last_error() << "\n";
  return status == ORIENT_INTERNAL ? kExitInvariant : kExitUsage;
}

bool read_input(const std::string& path, std::string* text) {
  if (path == "-") {
    text->assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  text->assign(std::istreambuf_iterator<char>(in), {});
  return true;
}

int emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(g.out, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "orient: cannot write " << g.out << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

std::string render_scalar(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(),
                                  [](const auto& e) { return e.is_string(); })) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : " ") + e.get<std::string>();
    return "[" + s + "]";
  }
  return v.dump();
}

// "table" output for a single result: one key per line, nested values
// printed compactly.
std::string render_table(const std::string& json) {
  const auto j = nlohmann::ordered_json::parse(json);
  std::size_t width = 0;
  for (const auto& item : j.items()) width = std::max(width, item.key().size());
  std::ostringstream os;
  for (const auto& item : j.items()) {
    if (item.value().is_array() && !item.value().empty() &&
        item.value().front().is_object()) {
      os << item.key() << ":\n";
      for (const auto& e : item.value()) os << "  " << e.dump() << "\n";
      continue;
    }
    os << item.key() << std::string(width - item.key().size() + 2, ' ')
       << render_scalar(item.value()) << "\n";
  }
  return os.str();
}

int load(const std::string& path, const std::string& expected_kind, InstancePtr* out) {
  std::string text;
  if (!read_input(path, &text)) {
    std::cerr << "orient: cannot read " << path << "\n";
    return kExitUsage;
  }
  orient_instance* raw = nullptr;
  const orient_status st = orient_instance_parse(text.data(), text.size(), &raw);
  if (st != ORIENT_OK) {
    return status_exit(st, path == "-" ? "<stdin>" : path);
  }
  out->reset(raw);
  if (!expected_kind.empty() && expected_kind != orient_instance_kind(raw)) {
    std::cerr << "orient: " << path << " holds a " << orient_instance_kind(raw)
              << " instance, not " << expected_kind << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

using RunFn = orient_status (*)(const orient_instance*, const orient_options*,
                                orient_result**);

int run_and_report(const Globals& g, const orient_instance* inst,
                   const orient_options& options, RunFn fn) {
  orient_result* raw = nullptr;
  const orient_status st = fn(inst, &options, &raw);
  if (st != ORIENT_OK) return status_exit(st);
  ResultPtr result(raw);
  char* json_raw = nullptr;
  if (orient_result_json(result.get(), &json_raw) != ORIENT_OK) {
    return status_exit(ORIENT_INTERNAL);
  }
  const std::string json = adopt(json_raw);
  const int wrote = emit(g, g.format == "rows" ? json + "\n" : render_table(json));
  if (wrote != kExitOk) return wrote;
  if (!orient_result_ok(result.get())) {
    std::cerr << "orient: invariant check failed\n";
    return kExitInvariant;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orienteering approximation algorithms and exact oracles", "orient"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for generators and simulation");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"table", "rows"}));
  app.set_version_flag("--version", std::string(orient_version()));

  const std::vector<std::string> kinds = {"p2p", "knap", "stoch", "tw"};
  std::string kind;
  std::string path;
  std::string epsilon = "1";
  std::string which;
  bool stochastic = false;
  bool slack_report = false;
  std::uint64_t replicates = 0;

  auto* solve = app.add_subcommand("solve", "Run the approximation algorithm");
  solve->add_option("kind", kind, "Problem kind")->required()->check(CLI::IsMember(kinds));
  solve->add_option("instance", path, "Instance file ('-' for stdin)")->required();
  solve->add_option("--epsilon", epsilon, "Deadline slack for tw, e.g. 1/4");
  solve->add_flag("--stochastic", stochastic, "tw: plan with stochastic waiting times");
  solve->add_flag("--slack-report", slack_report, "tw: report slack used per visit");
  solve->add_option("--replicates", replicates, "Also simulate this many runs");

  auto* oracle = app.add_subcommand("oracle", "Run an exact oracle");
  oracle->add_option("kind", kind, "Problem kind")->required()->check(CLI::IsMember(kinds));
  oracle->add_option("instance", path, "Instance file ('-' for stdin)")->required();
  oracle->add_option("--which", which,
                     "p2p: subset-dp|enumeration; stoch: nonadaptive|adaptive; "
                     "tw: strict|slack");
  oracle->add_option("--epsilon", epsilon, "Slack for the tw 'slack' oracle");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation of the policy");
  simulate->add_option("instance", path, "stoch or tw instance file")->required();
  simulate->add_option("--replicates", replicates, "Number of runs (default 100000)");
  simulate->add_option("--epsilon", epsilon, "Deadline slack for tw");
  simulate->add_flag("--stochastic", stochastic, "tw: plan with stochastic waiting times");

  int n = 0;
  std::string profile = "line";
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("kind", kind, "Problem kind")->required()->check(CLI::IsMember(kinds));
  gen->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(1, 4096));
  gen->add_option("--profile", profile, "line|grid|closure")
      ->check(CLI::IsMember({"line", "grid", "closure", "line-metric",
                             "random-euclidean-grid", "random-closure"}));
  gen->add_flag("--stochastic", stochastic, "tw: attach waiting-time distributions");

  std::string spec_path;
  std::string bench_kind;
  int count = 0;
  int n_min = 2;
  int n_max = 8;
  std::vector<std::string> profiles;
  bool timings = false;
  int workers = 0;
  auto* bench = app.add_subcommand("bench", "Ratio benchmark against the exact oracles");
  bench->add_option("--spec", spec_path, "Suite specification (JSON)");
  bench->add_option("--kind", bench_kind, "Single suite of this kind")
      ->check(CLI::IsMember(kinds));
  bench->add_option("--count", count, "Instances in the suite")->check(CLI::NonNegativeNumber);
  bench->add_option("--n-min", n_min, "Smallest n");
  bench->add_option("--n-max", n_max, "Largest n");
  bench->add_option("--profiles", profiles, "Generator profiles");
  bench->add_option("--epsilon", epsilon, "tw slack");
  bench->add_option("--workers", workers, "Parallel workers (output does not depend on this)")
      ->check(CLI::Range(1, 256));
  bench->add_flag("--timings", timings, "Include wall-clock runtimes (not reproducible)");
  bench->get_option("--spec")->excludes(bench->get_option("--kind"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  orient_options options;
  orient_options_init(&options);
  options.epsilon = epsilon.c_str();
  options.stochastic = stochastic ? 1 : 0;
  options.slack_report = slack_report ? 1 : 0;
  options.seed = g.seed;
  options.replicates = replicates;
  options.oracle = which.empty() ? nullptr : which.c_str();

  if (solve->parsed() || oracle->parsed() || simulate->parsed()) {
    InstancePtr inst;
    if (const int rc = load(path, simulate->parsed() ? "" : kind, &inst); rc != kExitOk) {
      return rc;
    }
    RunFn fn = solve->parsed() ? orient_solve : oracle->parsed() ? orient_oracle
                                                                 : orient_simulate;
    return run_and_report(g, inst.get(), options, fn);
  }

  if (gen->parsed()) {
    orient_instance* raw = nullptr;
    const orient_status st = orient_instance_generate(kind.c_str(), n, g.seed,
                                                      profile.c_str(), stochastic, &raw);
    if (st != ORIENT_OK) return status_exit(st);
    InstancePtr inst(raw);
    char* text = nullptr;
    if (orient_instance_serialize(inst.get(), &text) != ORIENT_OK) {
      return status_exit(ORIENT_INTERNAL);
    }
    return emit(g, adopt(text));
  }

  // bench
  std::string spec;
  if (!spec_path.empty()) {
    if (!read_input(spec_path, &spec)) {
      std::cerr << "orient: cannot read " << spec_path << "\n";
      return kExitUsage;
    }
  } else {
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    if (!bench_kind.empty()) {
      nlohmann::ordered_json s;
      s["kind"] = bench_kind;
      s["count"] = count;
      s["n_min"] = n_min;
      s["n_max"] = n_max;
      s["seed"] = g.seed;
      if (!profiles.empty()) s["profiles"] = profiles;
      s["epsilon"] = epsilon;
      suites.push_back(std::move(s));
    }
    spec = nlohmann::ordered_json{{"suites", suites}}.dump();
  }
  if (workers > 0) {
    auto root = nlohmann::ordered_json::parse(spec, nullptr, false);
    if (!root.is_object()) {
      std::cerr << "orient: bench spec is not a JSON object\n";
      return kExitUsage;
    }
    root["workers"] = workers;
    spec = root.dump();
  }
  orient_report* raw = nullptr;
  const orient_status st = orient_bench(spec.c_str(), &raw);
  if (st != ORIENT_OK) return status_exit(st);
  ReportPtr report(raw);
  char* text = nullptr;
  const orient_status fst = g.format == "rows"
                                ? orient_report_rows(report.get(), timings, &text)
                                : orient_report_table(report.get(), timings, &text);
  if (fst != ORIENT_OK) return status_exit(fst);
  if (const int rc = emit(g, adopt(text)); rc != kExitOk) return rc;
  return orient_report_passed(report.get()) ? kExitOk : kExitInvariant;
}
