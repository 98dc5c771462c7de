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

#include "orient/orient.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "orient/bench.hpp"
#include "orient/error.hpp"
#include "orient/generate.hpp"
#include "orient/instance_io.hpp"
#include "orient/runner.hpp"

struct orient_instance {
  orient::InstanceFile file;
  std::string kind;
};

struct orient_result {
  orient::RunResult result;
};

struct orient_report {
  orient::RatioReport report;
};

namespace {

thread_local std::string last_error;

orient_status set_error(orient_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
orient_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return ORIENT_OK;
  } catch (const orient::Error& e) {
    return set_error(static_cast<orient_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(ORIENT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(ORIENT_INTERNAL, e.what());
  } catch (...) {
    return set_error(ORIENT_INTERNAL, "unknown failure");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) orient::fail(orient::ErrorCode::kInvalidArgument, message);
}

orient::RunOptions convert(const orient_options* options) {
  orient::RunOptions out;
  if (!options) return out;
  if (options->epsilon) {
    out.epsilon = orient::parse_rational(options->epsilon);
    require(out.epsilon > 0, "epsilon must be positive");
  }
  out.stochastic = options->stochastic != 0;
  out.slack_report = options->slack_report != 0;
  out.seed = options->seed;
  out.replicates = options->replicates;
  if (options->oracle) out.oracle = options->oracle;
  return out;
}

template <typename Run>
orient_status run(const orient_instance* instance, const orient_options* options,
                  orient_result** out, Run runner) {
  return guarded([&] {
    require(instance && out, "null argument");
    *out = nullptr;
    auto result = std::make_unique<orient_result>();
    result->result = runner(instance->file, convert(options));
    *out = result.release();
  });
}

}  // namespace

extern "C" {

const char* orient_version(void) { return "1.0.0"; }

const char* orient_last_error(void) { return last_error.c_str(); }

const char* orient_status_name(orient_status status) {
  switch (status) {
    case ORIENT_OK: return "ok";
    case ORIENT_INVALID_ARGUMENT: return "invalid argument";
    case ORIENT_PARSE_ERROR: return "parse error";
    case ORIENT_INFEASIBLE: return "infeasible";
    case ORIENT_CAP_EXCEEDED: return "cap exceeded";
    case ORIENT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void orient_string_free(char* text) { std::free(text); }

void orient_options_init(orient_options* options) {
  if (options) *options = orient_options{nullptr, 0, 0, 0, 0, nullptr};
}

orient_status orient_instance_parse(const char* text, size_t length,
                                    orient_instance** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    auto inst = std::make_unique<orient_instance>();
    inst->file = orient::parse_instance(std::string_view(text, length));
    inst->kind = std::string(orient::kind_name(inst->file.kind()));
    *out = inst.release();
  });
}

orient_status orient_instance_generate(const char* kind, int n, uint64_t seed,
                                       const char* profile, int stochastic_tw,
                                       orient_instance** out) {
  return guarded([&] {
    require(kind && out, "null argument");
    *out = nullptr;
    orient::ProblemKind k;
    try {
      k = orient::parse_kind(kind);
    } catch (const orient::Error& e) {
      orient::fail(orient::ErrorCode::kInvalidArgument, e.what());
    }
    orient::GeneratorOptions options;
    options.stochastic_tw = stochastic_tw != 0;
    auto inst = std::make_unique<orient_instance>();
    inst->file = orient::generate_instance(
        k, n, seed, orient::parse_profile(profile ? profile : "line"), options);
    inst->kind = kind;
    *out = inst.release();
  });
}

orient_status orient_instance_serialize(const orient_instance* instance, char** out) {
  return guarded([&] {
    require(instance && out, "null argument");
    *out = copy_string(orient::serialize_instance(instance->file));
  });
}

const char* orient_instance_kind(const orient_instance* instance) {
  return instance ? instance->kind.c_str() : "";
}

int orient_instance_size(const orient_instance* instance) {
  return instance ? instance->file.space().size() : 0;
}

void orient_instance_free(orient_instance* instance) { delete instance; }

orient_status orient_solve(const orient_instance* instance, const orient_options* options,
                           orient_result** out) {
  return run(instance, options, out, orient::run_solve);
}

orient_status orient_oracle(const orient_instance* instance, const orient_options* options,
                            orient_result** out) {
  return run(instance, options, out, orient::run_oracle);
}

orient_status orient_simulate(const orient_instance* instance,
                              const orient_options* options, orient_result** out) {
  return run(instance, options, out, orient::run_simulate);
}

orient_status orient_result_json(const orient_result* result, char** out) {
  return guarded([&] {
    require(result && out, "null argument");
    *out = copy_string(result->result.json.dump());
  });
}

double orient_result_value(const orient_result* result) {
  return result ? result->result.value : 0.0;
}

int orient_result_ok(const orient_result* result) {
  return result && result->result.ok ? 1 : 0;
}

void orient_result_free(orient_result* result) { delete result; }

orient_status orient_bench(const char* spec_json, orient_report** out) {
  return guarded([&] {
    require(spec_json && out, "null argument");
    *out = nullptr;
    auto report = std::make_unique<orient_report>();
    report->report = orient::run_bench(orient::parse_bench_spec(spec_json));
    *out = report.release();
  });
}

orient_status orient_report_table(const orient_report* report, int timings, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = copy_string(orient::format_table(report->report, timings != 0));
  });
}

orient_status orient_report_rows(const orient_report* report, int timings, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    *out = copy_string(orient::format_rows(report->report, timings != 0));
  });
}

int orient_report_passed(const orient_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

size_t orient_report_row_count(const orient_report* report) {
  return report ? report->report.rows.size() : 0;
}

void orient_report_free(orient_report* report) { delete report; }

}  // extern "C"
