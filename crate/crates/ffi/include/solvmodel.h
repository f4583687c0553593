#ifndef SOLVMODEL_H
#define SOLVMODEL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SmStatus {
  SM_STATUS_OK = 0,
  SM_STATUS_NULL_POINTER = 1,
  SM_STATUS_INVALID_UTF8 = 2,
  SM_STATUS_PARSE = 3,
  SM_STATUS_INVALID_ALGEBRA = 4,
  SM_STATUS_UNKNOWN_NAME = 5,
  SM_STATUS_COMPUTATION = 6,
  SM_STATUS_BUFFER_TOO_SMALL = 7,
  SM_STATUS_PANIC = 8,
} SmStatus;

// Validated Lie algebra together with the basis name of the complement of
// its nilradical, if one is known.
typedef struct SmAlgebra SmAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or NULL. The pointer
// stays valid until the next call into this library from the same thread.
const char *sm_last_error(void);

// Parse and validate a Lie algebra from its JSON file format.
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer.
enum SmStatus sm_algebra_from_json(const char *json, struct SmAlgebra **out);

// One of the bundled algebras: `benson_gordon`, `heisenberg3` or
// `abelian_<k>`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum SmStatus sm_algebra_builtin(const char *name, struct SmAlgebra **out);

// # Safety
// `algebra` must come from this library and not have been freed; NULL is
// ignored.
void sm_algebra_free(struct SmAlgebra *algebra);

// # Safety
// `algebra` must be a live handle and `out` a valid pointer.
enum SmStatus sm_algebra_dimension(const struct SmAlgebra *algebra, size_t *out);

// Betti numbers `b_0, …, b_n` of the algebra. `capacity` is the length of
// `betti`; `written` receives `n + 1` even when the buffer is too small.
//
// # Safety
// `betti` must point to `capacity` writable elements; `written` must be valid.
enum SmStatus sm_algebra_betti(const struct SmAlgebra *algebra,
                               size_t *betti,
                               size_t capacity,
                               size_t *written);

// Run the full audit. `s_name` selects the complement of the nilradical by
// basis name; NULL uses the one recorded with the algebra. On success
// `report_json` receives the report (free with [`sm_string_free`]) and
// `exit_code` the command-line exit status: 0 for a certificate, 2 when
// inconclusive.
//
// # Safety
// `algebra` must be a live handle, `s_name` NULL or a NUL-terminated string,
// and the output pointers valid.
enum SmStatus sm_audit_json(const struct SmAlgebra *algebra,
                            const char *s_name,
                            char **report_json,
                            int32_t *exit_code);

// # Safety
// `s` must be NULL or a string returned by this library.
void sm_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOLVMODEL_H */
