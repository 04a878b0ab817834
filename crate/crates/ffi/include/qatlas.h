#ifndef QATLAS_H
#define QATLAS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QatlasStatus {
  QATLAS_STATUS_OK = 0,
  QATLAS_STATUS_NULL_POINTER = 1,
  QATLAS_STATUS_INVALID_ARGUMENT = 2,
  QATLAS_STATUS_DOMAIN = 3,
  QATLAS_STATUS_PRECONDITION = 4,
  QATLAS_STATUS_BUDGET = 5,
  QATLAS_STATUS_INVARIANT = 6,
  QATLAS_STATUS_LOAD = 7,
  QATLAS_STATUS_UNKNOWN_STRUCTURE = 8,
  QATLAS_STATUS_BUFFER_TOO_SMALL = 9,
  QATLAS_STATUS_PANIC = 10,
} QatlasStatus;

/**
 * An Sp(6,2) closure.
 */
typedef struct QatlasGroup QatlasGroup;

/**
 * A validated set of cohomology tables.
 */
typedef struct QatlasTables QatlasTables;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next qatlas call on this thread.
 */
const char *qatlas_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *qatlas_version(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void qatlas_string_free(char *s);

/**
 * Number of structures of `kind`, computed by enumeration.
 *
 * # Safety
 * `kind` must be a nul-terminated string; `out` must be writable.
 */
enum QatlasStatus qatlas_count(const char *kind, uint64_t *out);

/**
 * Enumerates `kind` as a JSON array of sorted code tuples. The result is
 * written to `*out` and must be released with [`qatlas_string_free`].
 *
 * # Safety
 * `kind` must be a nul-terminated string; `out` must be writable.
 */
enum QatlasStatus qatlas_enumerate_json(const char *kind, char **out);

/**
 * Builds Sp(6,2) by closure, failing with [`QatlasStatus::Budget`] if more
 * than `budget` elements appear.
 *
 * # Safety
 * `out` must be writable.
 */
enum QatlasStatus qatlas_group_new(size_t budget, struct QatlasGroup **out);

/**
 * # Safety
 * `group` must come from [`qatlas_group_new`]; `out` must be writable.
 */
enum QatlasStatus qatlas_group_order(const struct QatlasGroup *group, uint64_t *out);

/**
 * Null is ignored.
 *
 * # Safety
 * `group` must come from [`qatlas_group_new`] and not have been freed.
 */
void qatlas_group_free(struct QatlasGroup *group);

/**
 * Orbit size and stabilizer order of a realized structure (`bitangent`,
 * `octad`, `steiner`, `gopel`, `aronhold`, `syzygetic`, `azygetic`).
 *
 * # Safety
 * `group` must come from [`qatlas_group_new`]; `structure` must be a
 * nul-terminated string; both outputs must be writable.
 */
enum QatlasStatus qatlas_orbit(const struct QatlasGroup *group,
                               const char *structure,
                               uint64_t *orbit_size,
                               uint64_t *stabilizer_order);

/**
 * Number of orbits on ordered pairs for a realized structure.
 *
 * # Safety
 * `structure` must be a nul-terminated string; `out` must be writable.
 */
enum QatlasStatus qatlas_pair_rank(const char *structure, uint64_t *out);

/**
 * Loads the cohomology tables. With `data_dir` null the built-in copies
 * are used; otherwise documents present in the directory replace them.
 *
 * # Safety
 * `data_dir` must be null or a nul-terminated string; `out` must be
 * writable.
 */
enum QatlasStatus qatlas_tables_load(const char *data_dir, struct QatlasTables **out);

/**
 * Null is ignored.
 *
 * # Safety
 * `tables` must come from [`qatlas_tables_load`] and not have been freed.
 */
void qatlas_tables_free(struct QatlasTables *tables);

/**
 * Poincaré polynomial of a structure quotient, coefficients in ascending
 * degree. `*len` receives the coefficient count even when the buffer is
 * too small.
 *
 * # Safety
 * `tables` must come from [`qatlas_tables_load`]; `structure` must be a
 * nul-terminated string; `coeffs` must hold `capacity` values; `len` must
 * be writable.
 */
enum QatlasStatus qatlas_poincare(const struct QatlasTables *tables,
                                  const char *structure,
                                  int64_t *coeffs,
                                  size_t capacity,
                                  size_t *len);

/**
 * Point-count polynomial in `q`, coefficients in ascending degree.
 *
 * # Safety
 * As for [`qatlas_poincare`].
 */
enum QatlasStatus qatlas_point_count(const struct QatlasTables *tables,
                                     const char *structure,
                                     int64_t *coeffs,
                                     size_t capacity,
                                     size_t *len);

/**
 * Number of audit findings, and how many of them are documented ones.
 *
 * # Safety
 * `tables` must come from [`qatlas_tables_load`]; outputs must be writable.
 */
enum QatlasStatus qatlas_audit(const struct QatlasTables *tables,
                               uint64_t *findings,
                               uint64_t *known);

/**
 * `e_x · e_y = sign · e_label` for labels `0..8`.
 *
 * # Safety
 * `sign` and `label` must be writable.
 */
enum QatlasStatus qatlas_octonion_multiply(uint8_t x, uint8_t y, int8_t *sign, uint8_t *label);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QATLAS_H */
