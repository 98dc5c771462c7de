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

/* C interface to the orienteering library. Objects are opaque handles owned
 * by the caller and released with the matching *_free function. Every call
 * that can fail returns an orient_status; on failure the message is available
 * from orient_last_error() on the same thread. Strings handed out through
 * char** parameters are NUL-terminated and released with orient_string_free. */

#ifndef ORIENT_ORIENT_H_
#define ORIENT_ORIENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ORIENT_BUILDING_LIBRARY)
#define ORIENT_API __attribute__((visibility("default")))
#else
#define ORIENT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum orient_status {
  ORIENT_OK = 0,
  ORIENT_INVALID_ARGUMENT = 1,
  ORIENT_PARSE_ERROR = 2,
  ORIENT_INFEASIBLE = 3,
  ORIENT_CAP_EXCEEDED = 4,
  ORIENT_INTERNAL = 5
} orient_status;

typedef struct orient_instance orient_instance;
typedef struct orient_result orient_result;
typedef struct orient_report orient_report;

typedef struct orient_options {
  const char* epsilon;     /* time windows; rational text, NULL means "1" */
  int stochastic;          /* time windows: plan with the stochastic subroutine */
  int slack_report;        /* time windows: per-visit slack usage */
  uint64_t seed;           /* simulation seed */
  uint64_t replicates;     /* simulation replicates; 0 disables simulation */
  const char* oracle;      /* oracle variant, NULL for the default */
} orient_options;

ORIENT_API const char* orient_version(void);
ORIENT_API const char* orient_last_error(void);
ORIENT_API const char* orient_status_name(orient_status status);
ORIENT_API void orient_string_free(char* text);
ORIENT_API void orient_options_init(orient_options* options);

/* Instances. */
ORIENT_API orient_status orient_instance_parse(const char* text, size_t length,
                                               orient_instance** out);
/* kind: p2p|knap|stoch|tw; profile: line|grid|closure. */
ORIENT_API orient_status orient_instance_generate(const char* kind, int n,
                                                  uint64_t seed,
                                                  const char* profile,
                                                  int stochastic_tw,
                                                  orient_instance** out);
ORIENT_API orient_status orient_instance_serialize(const orient_instance* instance,
                                                   char** out);
ORIENT_API const char* orient_instance_kind(const orient_instance* instance);
ORIENT_API int orient_instance_size(const orient_instance* instance);
ORIENT_API void orient_instance_free(orient_instance* instance);

/* Algorithms, exact oracles and simulation. Options may be NULL. */
ORIENT_API orient_status orient_solve(const orient_instance* instance,
                                      const orient_options* options,
                                      orient_result** out);
ORIENT_API orient_status orient_oracle(const orient_instance* instance,
                                       const orient_options* options,
                                       orient_result** out);
ORIENT_API orient_status orient_simulate(const orient_instance* instance,
                                         const orient_options* options,
                                         orient_result** out);

/* Canonical JSON description of the result (single line). */
ORIENT_API orient_status orient_result_json(const orient_result* result,
                                            char** out);
ORIENT_API double orient_result_value(const orient_result* result);
/* 1 when every checked invariant held (feasibility, simulator agreement). */
ORIENT_API int orient_result_ok(const orient_result* result);
ORIENT_API void orient_result_free(orient_result* result);

/* Ratio benchmark driven by a JSON suite specification. */
ORIENT_API orient_status orient_bench(const char* spec_json, orient_report** out);
ORIENT_API orient_status orient_report_table(const orient_report* report,
                                             int timings, char** out);
ORIENT_API orient_status orient_report_rows(const orient_report* report,
                                            int timings, char** out);
ORIENT_API int orient_report_passed(const orient_report* report);
ORIENT_API size_t orient_report_row_count(const orient_report* report);
ORIENT_API void orient_report_free(orient_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ORIENT_ORIENT_H_ */
