#ifndef GROSSONE_H
#define GROSSONE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GnStatus {
  GN_STATUS_OK = 0,
  GN_STATUS_NULL_ARGUMENT = 1,
  GN_STATUS_INVALID_UTF8 = 2,
  GN_STATUS_SYNTAX = 3,
  GN_STATUS_EVAL = 4,
  GN_STATUS_TYPE = 5,
  GN_STATUS_UNKNOWN_PARADOX = 6,
  GN_STATUS_PANIC = 7,
} GnStatus;

typedef enum GnClass {
  GN_CLASS_ZERO = 0,
  GN_CLASS_INFINITESIMAL = 1,
  GN_CLASS_FINITE = 2,
  GN_CLASS_FINITE_WITH_INFINITESIMAL = 3,
  GN_CLASS_INFINITE = 4,
} GnClass;

typedef enum GnParity {
  GN_PARITY_EVEN = 0,
  GN_PARITY_ODD = 1,
} GnParity;

/**
 * Opaque handle to an exact gross-number.
 */
typedef struct GnNumber GnNumber;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse and evaluate `src`, which must evaluate to a number.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
enum GnStatus gn_parse(const char *src, struct GnNumber **out);

struct GnNumber *gn_from_i64(int64_t v);

struct GnNumber *gn_grossone(void);

/**
 * # Safety
 * `n` must be null or a handle from this library.
 */
struct GnNumber *gn_clone(const struct GnNumber *n);

/**
 * # Safety
 * `n` must be null or a handle from this library not freed before.
 */
void gn_free(struct GnNumber *n);

/**
 * Canonical text of `n`, e.g. `2*G + 1`. Null if `n` is null.
 *
 * # Safety
 * `n` must be null or a valid handle. Free the result with `gn_string_free`.
 */
char *gn_format(const struct GnNumber *n);

/**
 * # Safety
 * `s` must be null or a string returned by this library not freed before.
 */
void gn_string_free(char *s);

/**
 * # Safety
 * `a`, `b` valid handles, `out` writable.
 */
enum GnStatus gn_add(const struct GnNumber *a, const struct GnNumber *b, struct GnNumber **out);

/**
 * # Safety
 * `a`, `b` valid handles, `out` writable.
 */
enum GnStatus gn_sub(const struct GnNumber *a, const struct GnNumber *b, struct GnNumber **out);

/**
 * # Safety
 * `a`, `b` valid handles, `out` writable.
 */
enum GnStatus gn_mul(const struct GnNumber *a, const struct GnNumber *b, struct GnNumber **out);

/**
 * Exact division; fails with `GN_STATUS_EVAL` when the quotient is not a
 * finite sum of terms.
 *
 * # Safety
 * `a`, `b` valid handles, `out` writable.
 */
enum GnStatus gn_div(const struct GnNumber *a, const struct GnNumber *b, struct GnNumber **out);

/**
 * # Safety
 * `a` valid handle, `out` writable.
 */
enum GnStatus gn_neg(const struct GnNumber *a, struct GnNumber **out);

/**
 * # Safety
 * `a` valid handle, `out` writable.
 */
enum GnStatus gn_pow_int(const struct GnNumber *a, int64_t k, struct GnNumber **out);

/**
 * Writes -1, 0 or 1 to `out`.
 *
 * # Safety
 * `a`, `b` valid handles, `out` writable.
 */
enum GnStatus gn_compare(const struct GnNumber *a, const struct GnNumber *b, int32_t *out);

/**
 * # Safety
 * `a` valid handle, `out` writable.
 */
enum GnStatus gn_classify(const struct GnNumber *a, enum GnClass *out);

/**
 * Parity of a gross-integer; `GN_STATUS_EVAL` for anything else.
 *
 * # Safety
 * `a` valid handle, `out` writable.
 */
enum GnStatus gn_parity(const struct GnNumber *a, enum GnParity *out);

/**
 * Substitute `G := t` and write the exact rational as text (`n` or `n/d`).
 *
 * # Safety
 * `a` valid handle, `out` writable. Free the result with `gn_string_free`.
 */
enum GnStatus gn_eval_at(const struct GnNumber *a, uint64_t t, char **out);

/**
 * Evaluate any expression of the language and write the printed value.
 *
 * # Safety
 * `src` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
 */
enum GnStatus gn_eval(const char *src, char **out);

/**
 * Same as `gn_eval` with the JSON form of the value.
 *
 * # Safety
 * `src` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
 */
enum GnStatus gn_eval_json(const char *src, char **out);

/**
 * JSON report of a named paradox with default parameters.
 *
 * # Safety
 * `name` NUL-terminated, `out` writable. Free the result with `gn_string_free`.
 */
enum GnStatus gn_paradox_json(const char *name, char **out);

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next call into the library from this thread.
 */
const char *gn_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GROSSONE_H */
