/* Copyright (C) 2026 The logsurf authors
 * SPDX-License-Identifier: Apache-2.0
 */

/* C interface to the logsurf library.
 *
 * Every entry point returns a status code. Results are JSON documents in
 * UTF-8 with exact rationals written as "p/q" strings; they are returned
 * through a char** that the caller releases with logsurf_string_free.
 * On LOGSURF_MATH_SIGNAL the result document is still produced and carries
 * a "signal" field (not_lc, not_big, no_configuration_zariski,
 * not_applicable). On LOGSURF_INVALID_INPUT no document is produced and
 * logsurf_last_error() names the offending field. The error text is
 * thread-local and valid until the next call on the same thread.
 */

#ifndef LOGSURF_LOGSURF_H
#define LOGSURF_LOGSURF_H

#include <stddef.h>

#if defined(_WIN32)
#define LOGSURF_API __declspec(dllexport)
#else
#define LOGSURF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum logsurf_status {
    LOGSURF_OK = 0,
    LOGSURF_MATH_SIGNAL = 1,
    LOGSURF_INVALID_INPUT = 2,
    LOGSURF_INTERNAL_ERROR = 3
} logsurf_status;

/* Opaque log pair: a surface configuration with a boundary. */
typedef struct logsurf_scene logsurf_scene;

LOGSURF_API const char* logsurf_version(void);
LOGSURF_API const char* logsurf_last_error(void);
LOGSURF_API void logsurf_string_free(char* s);

LOGSURF_API logsurf_status logsurf_scene_parse(const char* json, logsurf_scene** out);
LOGSURF_API void logsurf_scene_free(logsurf_scene* scene);
LOGSURF_API logsurf_status logsurf_scene_emit(const logsurf_scene* scene, char** out_json);
/* Intersection matrix and boundary of the scene, for comparisons. */
LOGSURF_API logsurf_status logsurf_scene_summary(const logsurf_scene* scene, char** out_json);

LOGSURF_API logsurf_status logsurf_scene_volume(const logsurf_scene* scene, char** out_json);
/* divisor: NULL or "K+B", or "name:coef,..." over K, curves and generators. */
LOGSURF_API logsurf_status logsurf_scene_zariski(const logsurf_scene* scene, const char* divisor, char** out_json);
LOGSURF_API logsurf_status logsurf_scene_lc_check(const logsurf_scene* scene, char** out_json);

/* chain: "2,3,6" (empty for a smooth point); hits: "i:mult:b,..." */
LOGSURF_API logsurf_status logsurf_different(const char* chain, const char* hits, char** out_json);
/* coeffset: "C0", "C1", "C2" or a JSON object. */
LOGSURF_API logsurf_status logsurf_tm(const char* coeffset, int m, char** out_json);
LOGSURF_API logsurf_status logsurf_sums(int target, int max_len, char** out_json);
LOGSURF_API logsurf_status logsurf_bounds(char** out_json);

LOGSURF_API logsurf_status logsurf_construct_even(int n, int emit_scene, char** out_json);
LOGSURF_API logsurf_status logsurf_construct_odd(int n, int emit_scene, char** out_json);
LOGSURF_API logsurf_status logsurf_construct_nklt(const logsurf_scene* scene, const char* b1, const char* b2, int s,
                                                  int emit_scene, char** out_json);
/* CSV table s,volume,volume_decimal for s = 1..max_s. */
LOGSURF_API logsurf_status logsurf_construct_nklt_table(const logsurf_scene* scene, const char* b1, const char* b2,
                                                        int max_s, char** out_csv);
LOGSURF_API logsurf_status logsurf_construct_iterated(int n, const int* s, size_t count, int emit_scene,
                                                      char** out_json);
/* targets: comma separated curve names; approach: "standard" (1-1/s) or "scaled" (b(1-1/s)). */
LOGSURF_API logsurf_status logsurf_construct_perturb(const logsurf_scene* scene, const char* targets,
                                                     const char* approach, int s, int emit_scene, char** out_json);
/* CSV table for s = from..to. */
LOGSURF_API logsurf_status logsurf_construct_perturb_table(const logsurf_scene* scene, const char* targets,
                                                           const char* approach, int from, int to, char** out_csv);

/* Runs the acceptance checks; LOGSURF_MATH_SIGNAL when any check fails. */
LOGSURF_API logsurf_status logsurf_verify(char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* LOGSURF_LOGSURF_H */
