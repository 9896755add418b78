#ifndef RIORDAN_H
#define RIORDAN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum RiordanStatus {
  RIORDAN_STATUS_OK = 0,
  RIORDAN_STATUS_NULL_POINTER = 1,
  RIORDAN_STATUS_INVALID_UTF8 = 2,
  RIORDAN_STATUS_UNKNOWN_ID = 3,
  RIORDAN_STATUS_PARSE = 4,
  RIORDAN_STATUS_NORMALIZATION = 5,
  RIORDAN_STATUS_ORDER_MISMATCH = 6,
  RIORDAN_STATUS_OUT_OF_RANGE = 7,
  RIORDAN_STATUS_INSUFFICIENT_DATA = 8,
  RIORDAN_STATUS_VANISHING_HANKEL = 9,
  RIORDAN_STATUS_INVALID_ARGUMENT = 10,
  RIORDAN_STATUS_INTERNAL = 99,
} RiordanStatus;

// Opaque handle to an exact truncated exponential Riordan array.
typedef struct RiordanArray RiordanArray;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. The pointer is
// owned by the library and valid until the next failing call.
const char *riordan_last_error(void);

// Builds the catalog array `id` truncated at `order`.
//
// # Safety
// `id` must be a valid NUL-terminated string and `out` a valid pointer.
enum RiordanStatus riordan_array_from_catalog(const char *id,
                                              uintptr_t order,
                                              struct RiordanArray **out);

// Builds `[g, f]` from comma-separated ordinary coefficients, zero-padded
// to `order`.
//
// # Safety
// `g` and `f` must be valid NUL-terminated strings and `out` a valid pointer.
enum RiordanStatus riordan_array_from_series(const char *g,
                                             const char *f,
                                             uintptr_t order,
                                             struct RiordanArray **out);

// Group product `a * b`; both operands must have the same order.
//
// # Safety
// `a` and `b` must be live handles and `out` a valid pointer.
enum RiordanStatus riordan_array_multiply(const struct RiordanArray *a,
                                          const struct RiordanArray *b,
                                          struct RiordanArray **out);

// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum RiordanStatus riordan_array_inverse(const struct RiordanArray *a, struct RiordanArray **out);

// Number of rows, `order + 1`; 0 for a null handle.
//
// # Safety
// `a` must be null or a live handle.
uintptr_t riordan_array_dim(const struct RiordanArray *a);

// Entry `(n, k)` as a rational string such as `"-3"` or `"1/4"`.
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum RiordanStatus riordan_array_entry(const struct RiordanArray *a,
                                       uintptr_t n,
                                       uintptr_t k,
                                       char **out);

// `{"name", "order", "rows"}` with rational strings.
//
// # Safety
// `a` must be a live handle, `name` null or a valid string, `out` valid.
enum RiordanStatus riordan_array_to_json(const struct RiordanArray *a,
                                         const char *name,
                                         char **out);

// `{"matrix", "params"}` for the production matrix; `params` is null unless
// the matrix is tridiagonal. The matrix has `riordan_array_dim(a) - 1` rows.
//
// # Safety
// `a` must be a live handle and `out` a valid pointer.
enum RiordanStatus riordan_array_production_json(const struct RiordanArray *a, char **out);

// Hankel transform `h_0..h_n` of a comma-separated sequence, as a JSON
// array of rational strings. Needs `2n + 1` terms.
//
// # Safety
// `seq` must be a valid NUL-terminated string and `out` a valid pointer.
enum RiordanStatus riordan_hankel_transform(const char *seq, uintptr_t n, char **out);

// # Safety
// `a` must be null or a handle returned by this library, freed once.
void riordan_array_free(struct RiordanArray *a);

// # Safety
// `s` must be null or a string returned by this library, freed once.
void riordan_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIORDAN_H */
