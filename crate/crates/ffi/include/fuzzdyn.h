#ifndef FUZZDYN_H
#define FUZZDYN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FdMetric {
  FD_METRIC_INFTY = 0,
  FD_METRIC_SKOROKHOD = 1,
  FD_METRIC_SENDO = 2,
} FdMetric;

typedef enum FdStatus {
  FD_STATUS_OK = 0,
  FD_STATUS_NULL_ARGUMENT = 1,
  FD_STATUS_INVALID_UTF8 = 2,
  FD_STATUS_PARSE = 3,
  FD_STATUS_INVALID = 4,
  FD_STATUS_SPACE_MISMATCH = 5,
  FD_STATUS_NO_MIXING_ORACLE = 6,
  FD_STATUS_POST_CHECK_FAILED = 7,
  FD_STATUS_NON_POSITIVE_EPSILON = 8,
  FD_STATUS_BUFFER_TOO_SMALL = 9,
  FD_STATUS_PANIC = 10,
} FdStatus;

/**
 * Opaque handle to a validated step fuzzy set.
 */
typedef struct FdFuzzySet FdFuzzySet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a fuzzy set from JSON. On success `*out` receives a handle to be
 * released with `fd_fuzzy_set_free`.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum FdStatus fd_fuzzy_set_from_json(const char *json, struct FdFuzzySet **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `u` must come from this library and not be used afterwards.
 */
void fd_fuzzy_set_free(struct FdFuzzySet *u);

/**
 * Canonical JSON for a fuzzy set, in `*out`.
 *
 * # Safety
 * `u` must be a live handle and `out` a valid pointer.
 */
enum FdStatus fd_fuzzy_set_to_json(const struct FdFuzzySet *u, char **out);

/**
 * Writes the exact distance as `"p/q"` into `buf` (nul-terminated).
 * `*needed` receives the buffer size required, including the terminator;
 * if `len` is smaller the call fails with `FD_STATUS_BUFFER_TOO_SMALL`.
 *
 * # Safety
 * `u`, `v` must be live handles; `buf` must hold `len` bytes; `needed` may
 * be null.
 */
enum FdStatus fd_metric(enum FdMetric kind,
                        const struct FdFuzzySet *u,
                        const struct FdFuzzySet *v,
                        char *buf,
                        size_t len,
                        size_t *needed);

/**
 * Builds a transitivity witness from `u` towards `v` under the map
 * descriptor `map` (e.g. `"tent"`) with radius `eps` (e.g. `"1/8"`).
 * `*cert_json` receives the certificate; `*iterate`, if non-null, the
 * iterate `n`.
 *
 * # Safety
 * Strings must be nul-terminated; handles live; `cert_json` valid.
 */
enum FdStatus fd_witness(const char *map,
                         const struct FdFuzzySet *u,
                         const struct FdFuzzySet *v,
                         const char *eps,
                         char **cert_json,
                         uint64_t *iterate);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void fd_string_free(char *s);

/**
 * Message for the most recent failure on this thread; empty if none.
 * Valid until the next failing call on the same thread.
 */
const char *fd_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FUZZDYN_H */
