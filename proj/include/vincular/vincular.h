// Copyright 2026 The Vincular Authors
//
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

#ifndef VINCULAR_VINCULAR_H_
#define VINCULAR_VINCULAR_H_

#include <stddef.h>
#include <stdint.h>

#if defined(VINCULAR_BUILDING_LIBRARY)
#define VIN_API __attribute__((visibility("default")))
#else
#define VIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vin_status {
  VIN_OK = 0,
  VIN_VERIFY_FAILED = 1,  // the run completed and at least one check failed
  VIN_ERR_PARSE = 2,
  VIN_ERR_RANGE = 3,
  VIN_ERR_DATA = 4,
  VIN_ERR_ARGUMENT = 5,
  VIN_ERR_INTERNAL = 6,
} vin_status;

typedef struct vin_session vin_session;
typedef struct vin_pattern vin_pattern;

VIN_API const char* vin_version(void);
VIN_API const char* vin_status_string(vin_status status);
// Message of the last failed call on this thread, or "".
VIN_API const char* vin_last_error(void);

// A session holds a run configuration and the rendered output of the last
// run. Defaults: max_n 9, oracle on, jobs from VINCULAR_JOBS or the
// hardware, text output, embedded tables.
VIN_API vin_session* vin_session_new(void);
VIN_API void vin_session_free(vin_session* session);

VIN_API vin_status vin_session_set_max_n(vin_session* session, int max_n);
VIN_API vin_status vin_session_set_jobs(vin_session* session, unsigned jobs);
VIN_API vin_status vin_session_set_seed(vin_session* session, uint64_t seed);
VIN_API vin_status vin_session_set_oracle(vin_session* session, int enabled);
// "text", "json" or "csv".
VIN_API vin_status vin_session_set_format(vin_session* session,
                                          const char* format);
// NULL or "" selects the embedded tables.
VIN_API vin_status vin_session_set_data_path(vin_session* session,
                                             const char* path);

VIN_API const char* vin_session_last_error(const vin_session* session);
// Rendered report of the last successful run. Owned by the session.
VIN_API const char* vin_session_output(const vin_session* session);

// Runs return VIN_OK or VIN_VERIFY_FAILED with output set, or an error code
// with the output cleared.
VIN_API vin_status vin_run_check(vin_session* session, const char* permutation,
                                 const char* pattern);
// n <= 0 counts n = 1..max_n.
VIN_API vin_status vin_run_count(vin_session* session, const char* patterns,
                                 int n);
VIN_API vin_status vin_run_list(vin_session* session, const char* patterns,
                                int n);
VIN_API vin_status vin_run_classes(vin_session* session, int k);
VIN_API vin_status vin_run_classify(vin_session* session, int k);
// scope: lemmas, table, dedupe7, coverage, oracle, symmetry, all.
VIN_API vin_status vin_run_verify(vin_session* session, const char* scope,
                                  int table_id);

VIN_API vin_status vin_pattern_parse(const char* text, vin_pattern** out);
VIN_API void vin_pattern_free(vin_pattern* pattern);
// Canonical text of the pattern. Owned by the handle.
VIN_API const char* vin_pattern_format(const vin_pattern* pattern);
VIN_API vin_status vin_pattern_contains(const vin_pattern* pattern,
                                        const char* permutation, int* result);

// |S_n(P)| for a comma-separated pattern list.
VIN_API vin_status vin_count(const char* patterns, int n, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif  // VINCULAR_VINCULAR_H_
