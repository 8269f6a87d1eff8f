// Copyright 2026 The ruledarr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RULEDARR_H
#define RULEDARR_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define RA_API __declspec(dllexport)
#else
#define RA_API __attribute__((visibility("default")))
#endif

typedef enum ra_status {
  RA_OK = 0,
  RA_NULL_ARGUMENT = 1,
  RA_INVALID_ARGUMENT = 2,
  RA_PARSE_ERROR = 3,
  RA_PRECONDITION_VIOLATED = 4,
  RA_NON_NEGATIVE_E_ONLY = 5,
  RA_VALIDATION_FAILED = 6,
  RA_EMPTY_SINGULAR_LOCUS = 7,
  RA_AUDIT_FAILED = 8,
  RA_INCONSISTENT_CURVE_STATS = 9,
  RA_C0_DISJOINT_REQUIRED = 10,
  RA_B_NOT_AE = 11,
  RA_PARAMETER_RANGE = 12,
  RA_PROFILE_NOT_BINARY_26 = 13,
  RA_INTERNAL = 14,
  RA_UNKNOWN = 15
} ra_status;

typedef enum ra_format { RA_FORMAT_JSON = 0, RA_FORMAT_CSV = 1, RA_FORMAT_PRETTY = 2 } ra_format;

typedef struct ra_profile ra_profile;
typedef struct ra_incidence ra_incidence;
typedef struct ra_lines ra_lines;
typedef struct ra_grid ra_grid;
typedef struct ra_report ra_report;

RA_API const char* ra_version(void);
RA_API const char* ra_status_string(ra_status status);
/* Message of the last failed call on this thread; "" if none. */
RA_API const char* ra_last_error(void);

RA_API ra_status ra_profile_from_json(const char* text, ra_profile** out);
/* Canonical JSON of the profile; release with ra_string_free. */
RA_API ra_status ra_profile_to_json(const ra_profile* p, char** out);
RA_API void ra_profile_free(ra_profile* p);

RA_API ra_status ra_incidence_from_json(const char* text, ra_incidence** out);
RA_API void ra_incidence_free(ra_incidence* inc);

RA_API ra_status ra_lines_from_json(const char* text, ra_lines** out);
/* name is "klein" or "wiman". */
RA_API ra_status ra_lines_builtin(const char* name, ra_lines** out);
RA_API void ra_lines_free(ra_lines* lines);

/* NULL text gives the default grid. */
RA_API ra_status ra_grid_from_json(const char* text, ra_grid** out);
RA_API ra_status ra_grid_default(ra_grid** out);
/* axis is one of "g", "e", "a", "b_offset", "d". */
RA_API ra_status ra_grid_set_range(ra_grid* grid, const char* axis, int64_t lo, int64_t hi);
RA_API void ra_grid_free(ra_grid* grid);

RA_API ra_status ra_validate(const ra_profile* p, ra_report** out);
RA_API ra_status ra_hconst(const ra_profile* p, ra_report** out);
RA_API ra_status ra_cover(const ra_profile* p, ra_report** out);
RA_API ra_status ra_bounds(const ra_profile* p, ra_report** out);
RA_API ra_status ra_pullback(const ra_lines* lines, int64_t e, ra_report** out);
RA_API ra_status ra_pullback_profile(const ra_lines* lines, int64_t e, ra_profile** out);
RA_API ra_status ra_gallery(int64_t e, ra_report** out);
/* expected_h may be NULL. embedding_json ({"surface":..,"class":..}) may be NULL. */
RA_API ra_status ra_incidence_check(const ra_incidence* inc, const char* expected_h,
                                    const char* embedding_json, ra_report** out);
RA_API ra_status ra_bq_scan(const ra_grid* grid, unsigned workers, ra_report** out);

/* 1 when the report carries no validation or audit failure. */
RA_API int ra_report_ok(const ra_report* r);
/* *out is heap allocated; release with ra_string_free. */
RA_API ra_status ra_report_render(const ra_report* r, ra_format format, int places, char** out);
RA_API void ra_report_free(ra_report* r);
RA_API void ra_string_free(char* s);

/* Decimal strings; release with ra_string_free. */
RA_API ra_status ra_harbourne_constant(const ra_profile* p, char** num, char** den);
RA_API ra_status ra_incidence_rank(const ra_incidence* inc, uint64_t* out);

#ifdef __cplusplus
}
#endif

#endif
