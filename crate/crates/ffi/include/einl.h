#ifndef EINL_H
#define EINL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes. `EINL_STATUS_OK` is zero; every other value is a failure.
 */
typedef enum EinlStatus {
  EINL_STATUS_OK = 0,
  EINL_STATUS_NULL_POINTER = 1,
  EINL_STATUS_INVALID_UTF8 = 2,
  EINL_STATUS_NOT_PRIME = 3,
  EINL_STATUS_TOO_LARGE = 4,
  EINL_STATUS_OUT_OF_RANGE = 5,
  EINL_STATUS_PARSE = 6,
  /*
   A proved identity failed to hold on the computed data.
   */
  EINL_STATUS_VIOLATION = 7,
  EINL_STATUS_PRECONDITION = 8,
  EINL_STATUS_UNSUPPORTED = 9,
  EINL_STATUS_IO = 10,
  EINL_STATUS_INTERNAL = 11,
  EINL_STATUS_PANIC = 12,
} EinlStatus;

/*
 Opaque handle to a truncated category instance.
 */
typedef struct EinlCategory EinlCategory;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message of the last failed call on this thread, or NULL. The pointer
 stays valid until the next `einl_*` call on this thread.
 */
const char *einl_last_error_message(void);

/*
 `FI_Γ` with `Γ` cyclic of order `gamma_order` (1 gives FI), objects `0..=max_object`.

 # Safety
 `out` must be NULL or valid for a pointer write.
 */
enum EinlStatus einl_category_fi_gamma(size_t gamma_order,
                                       size_t max_object,
                                       struct EinlCategory **out);

/*
 `FI_Γ` with `Γ` read from a multiplication-table file.

 # Safety
 `path` must be NULL or a NUL-terminated string; `out` must be NULL or
 valid for a pointer write.
 */
enum EinlStatus einl_category_fi_gamma_table(const char *path,
                                             size_t max_object,
                                             struct EinlCategory **out);

/*
 VI over `F_q`, `q` prime.

 # Safety
 `out` must be NULL or valid for a pointer write.
 */
enum EinlStatus einl_category_vi(uint32_t q, size_t max_object, struct EinlCategory **out);

/*
 VIC over `F_q`, `q` prime.

 # Safety
 `out` must be NULL or valid for a pointer write.
 */
enum EinlStatus einl_category_vic(uint32_t q, size_t max_object, struct EinlCategory **out);

/*
 Releases a handle. NULL is ignored.

 # Safety
 `cat` must be NULL or a handle from `einl_category_*` not yet freed.
 */
void einl_category_free(struct EinlCategory *cat);

/*
 `|C(i,j)|`, by enumeration under the guard.

 # Safety
 `cat` must be a live handle or NULL; `out` NULL or writable.
 */
enum EinlStatus einl_hom_set_size(const struct EinlCategory *cat, size_t i, size_t j, size_t *out);

/*
 Number of `H_{i,j}`-orbits on `C(i,j)`, `i < j`.

 # Safety
 `cat` must be a live handle or NULL; `out` NULL or writable.
 */
enum EinlStatus einl_orbit_count(const struct EinlCategory *cat, size_t i, size_t j, size_t *out);

/*
 Whether `G_j` is transitive on `C(i,j)` for every `i < j ≤ J`.

 # Safety
 `cat` must be a live handle or NULL; `out` NULL or writable.
 */
enum EinlStatus einl_check_transitivity(const struct EinlCategory *cat, bool *out);

/*
 Least `j₀` such that `μ_{i,j}` is bijective and `m_{i,j}` injective for
 all `j ∈ [j₀, J-1]`. `*found` is false when there is none.

 # Safety
 `cat` must be a live handle or NULL; `onset` and `found` NULL or writable.
 */
enum EinlStatus einl_bijectivity_onset(const struct EinlCategory *cat,
                                       size_t i,
                                       size_t *onset,
                                       bool *found);

/*
 Runs a CLI command (`check-conditions`, `orbits`, `stabilize`,
 `fg-torsion`) with a `key = value` configuration and returns the report.

 # Safety
 `command` and `config` must be NULL or NUL-terminated strings; `out`
 NULL or writable. A returned string must be freed with `einl_string_free`.
 */
enum EinlStatus einl_run_report(const char *command, const char *config, char **out);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string from `einl_run_report` not yet freed.
 */
void einl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EINL_H */
