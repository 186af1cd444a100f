// Copyright 2026 The Authors.
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

/* C interface to the matching library. Every call returns an mm_status;
 * on failure mm_last_error() describes the problem for the calling thread.
 * Reports are JSON documents owned by an mm_report handle. */
#ifndef MMATCH_MMATCH_H_
#define MMATCH_MMATCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MM_API __declspec(dllexport)
#else
#define MM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mm_status {
  MM_OK = 0,
  MM_ERR_INVALID_ARGUMENT = 1,
  MM_ERR_SCHEMA = 2,
  MM_ERR_INVARIANT = 3,
  MM_ERR_ELEMENT_OUT_OF_GROUP = 4,
  MM_ERR_ELEMENT_NOT_IN_GROUND = 5,
  MM_ERR_WINDOW_OVERFLOW = 6,
  MM_ERR_SIZE_MISMATCH = 7,
  MM_ERR_ZERO_IN_TARGET = 8,
  MM_ERR_RANK_MISMATCH = 9,
  MM_ERR_UNSUPPORTED = 10,
  MM_ERR_BUDGET = 11,
  MM_ERR_HYPOTHESIS = 12,
  MM_ERR_UNKNOWN_THEOREM = 13,
  MM_ERR_NOT_FOUND = 14,
  MM_ERR_INTERNAL = 15
} mm_status;

typedef struct mm_instance mm_instance;
typedef struct mm_report mm_report;

typedef struct mm_options {
  uint64_t budget; /* 0: no cap */
  uint64_t seed;
  int include_timing;
  int mutual;
  int witnesses;
} mm_options;

MM_API const char* mm_version(void);
MM_API const char* mm_status_name(mm_status status);
MM_API const char* mm_last_error(void);
MM_API void mm_options_init(mm_options* opts);

MM_API mm_status mm_instance_load(const char* path, mm_instance** out);
MM_API mm_status mm_instance_parse(const char* text, mm_instance** out);
MM_API void mm_instance_free(mm_instance* inst);

/* basis_json is a JSON array of elements, e.g. "[1,2]". */
MM_API mm_status mm_match(const mm_instance* inst, const char* m, const char* n,
                          const mm_options* opts, mm_report** out);
MM_API mm_status mm_match_basis(const mm_instance* inst, const char* m, const char* n,
                                const char* basis_json, const mm_options* opts, mm_report** out);
MM_API mm_status mm_group_match(const mm_instance* inst, const char* a, const char* b,
                                mm_report** out);
MM_API mm_status mm_classify_set(const mm_instance* inst, const char* set, mm_report** out);
MM_API mm_status mm_classify_matroid(const mm_instance* inst, const char* matroid,
                                     mm_report** out);
/* times > 0 computes the times-fold sumset of a and ignores b. */
MM_API mm_status mm_sumset(const mm_instance* inst, const char* a, const char* b, int times,
                           mm_report** out);
MM_API mm_status mm_rado(const mm_instance* inst, const char* n, const char* const* family,
                         size_t count, mm_report** out);
/* inst == NULL selects the exhaustive scope; bounds may be NULL. */
MM_API mm_status mm_verify(const char* theorem, const char* bounds, const mm_instance* inst,
                           const mm_options* opts, mm_report** out);
/* group may be NULL for the default window. */
MM_API mm_status mm_reproduce(const char* example, int n, const char* group,
                              const mm_options* opts, mm_report** out);
/* what: "sparse-paving" or "subgroups"; ground_json may be NULL for subgroups. */
MM_API mm_status mm_enumerate(const char* what, const char* group, const char* ground_json,
                              int rank, const mm_options* opts, mm_report** out);
/* Theorem ids as a JSON array. */
MM_API const char* mm_theorems_json(void);

MM_API const char* mm_report_json(const mm_report* report);
MM_API int mm_report_positive(const mm_report* report);
MM_API void mm_report_free(mm_report* report);

#ifdef __cplusplus
}
#endif

#endif /* MMATCH_MMATCH_H_ */
