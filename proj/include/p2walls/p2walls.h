////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of p2walls.                                             //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////
/*
 * C interface to the p2walls library.
 *
 * Characters and results are opaque handles owned by the caller and released
 * with the matching *_free function. Every command returns a p2w_status; on
 * P2W_OK (and on the soft statuses P2W_EXCLUSION_NONEMPTY,
 * P2W_SEARCH_BUDGET_EXCEEDED and P2W_TABLE_MISMATCH) *out receives a result
 * whose text is a JSON document, text report or SVG image. On any other
 * status *out is set to NULL and p2w_last_error() describes the failure.
 * All functions are thread-safe; p2w_last_error is per thread.
 */
#ifndef P2WALLS_P2WALLS_H
#define P2WALLS_P2WALLS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(P2WALLS_BUILDING)
#define P2W_API __declspec(dllexport)
#else
#define P2W_API __declspec(dllimport)
#endif
#else
#define P2W_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum p2w_status {
  P2W_OK = 0,
  P2W_PARSE_ERROR,
  P2W_NOT_INTEGRAL,
  P2W_NON_POSITIVE_RANK,
  P2W_INVALID_ARGUMENT,
  P2W_TREE_DEPTH_EXCEEDED,
  P2W_NO_STABLE_CHARACTER,
  P2W_ADMISSIBILITY_FAILED,
  P2W_NO_ADMISSIBLE,
  P2W_UNEXPECTED_POSITIVE_CHI,
  P2W_HEIGHT_ZERO_INPUT,
  P2W_NOT_SEMISTABLE_INPUT,
  P2W_DEPENDENT_CHARACTERS,
  P2W_NO_ROOT,
  P2W_EMPTY_GIESEKER_WALL,
  P2W_SEARCH_BUDGET_EXCEEDED,
  P2W_TABLE_MISMATCH,
  P2W_EXCLUSION_NONEMPTY,
  P2W_NULL_ARGUMENT,
  P2W_INTERNAL_ERROR
} p2w_status;

typedef struct p2w_char p2w_char;
typedef struct p2w_result p2w_result;

typedef struct p2w_options {
  int decimals;            /* places in decimal renderings, default 4 */
  int text;                /* nonzero: "key: value" text instead of JSON */
  int nested_walls;        /* interior walls drawn by p2w_wall_svg, default 3 */
  uint64_t max_candidates; /* exclusion search budget, default 1000000 */
} p2w_options;

P2W_API void p2w_options_init(p2w_options* opts);

/* Accepts "r,c1,ch2" or "r:mu:Delta". */
P2W_API p2w_status p2w_char_parse(const char* text, p2w_char** out);
P2W_API void p2w_char_free(p2w_char* ch);
/* "r,c1,ch2"; the string lives as long as the handle. */
P2W_API const char* p2w_char_text(const p2w_char* ch);
/* "r:mu:Delta"; the string lives as long as the handle. */
P2W_API const char* p2w_char_invariant_text(const p2w_char* ch);

P2W_API p2w_status p2w_classify(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_delta(const char* mu, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_extremal(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_wall(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_wall_svg(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_exclude(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_ample(const p2w_char* ch, const p2w_options* opts, p2w_result** out);
P2W_API p2w_status p2w_tables_verify(int which, const p2w_options* opts, p2w_result** out);
/* slopes: comma-separated rationals, or NULL / "" for c1/r with c1 = 1..r. */
P2W_API p2w_status p2w_sweep(int64_t rank_min, int64_t rank_max, const char* slopes, int count,
                             const p2w_options* opts, p2w_result** out);

P2W_API const char* p2w_result_text(const p2w_result* res);
P2W_API void p2w_result_free(p2w_result* res);

P2W_API const char* p2w_status_name(p2w_status status);
/* Process exit code the p2walls executable uses for a status. */
P2W_API int p2w_status_exit_code(p2w_status status);
P2W_API const char* p2w_last_error(void);
P2W_API const char* p2w_version(void);

#ifdef __cplusplus
}
#endif

#endif /* P2WALLS_P2WALLS_H */
