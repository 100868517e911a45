#ifndef MLDEG_H
#define MLDEG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * How the reciprocal degree is computed.
 */
typedef enum MldReciprocalMethod {
  MLD_RECIPROCAL_METHOD_SLICE = 0,
  MLD_RECIPROCAL_METHOD_IMPLICITIZE = 1,
} MldReciprocalMethod;

/**
 * Result of every call. The first four values match the CLI exit codes.
 */
typedef enum MldStatus {
  MLD_STATUS_OK = 0,
  MLD_STATUS_INPUT_ERROR = 1,
  MLD_STATUS_NON_REGULAR = 2,
  MLD_STATUS_INCONCLUSIVE = 3,
  MLD_STATUS_NULL_POINTER = 4,
  MLD_STATUS_PANIC = 5,
} MldStatus;

/**
 * Opaque model handle.
 */
typedef struct MldModel MldModel;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer is
 * valid until the next failing call on this thread.
 */
const char *mld_last_error(void);

/**
 * Library version as a static nul-terminated string.
 */
const char *mld_version(void);

/**
 * Parses a JSON model spec into a new handle stored in `*out`.
 *
 * # Safety
 * `json` is a nul-terminated UTF-8 string; `out` is valid for a pointer write.
 */
enum MldStatus mld_model_from_json(const char *json, struct MldModel **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `model` is null or a handle not yet freed.
 */
void mld_model_free(struct MldModel *model);

/**
 * Matrix size `n` and dimension of the space.
 *
 * # Safety
 * `model` is a live handle; `n` and `dim` are valid for writes.
 */
enum MldStatus mld_model_shape(const struct MldModel *model, size_t *n, size_t *dim);

/**
 * ML degree report as JSON. Returns `Inconclusive` (with the report still
 * written) when the trials reach no majority.
 *
 * # Safety
 * `model` is a live handle; `out_json` is valid for a pointer write.
 */
enum MldStatus mld_ml_degree(const struct MldModel *model,
                             uint64_t seed,
                             uint32_t trials,
                             char **out_json);

/**
 * Reciprocal degree report as JSON.
 *
 * # Safety
 * `model` is a live handle; `out_json` is valid for a pointer write.
 */
enum MldStatus mld_reciprocal_degree(const struct MldModel *model,
                                     enum MldReciprocalMethod method,
                                     uint64_t seed,
                                     char **out_json);

/**
 * Zero-test report as JSON, over a random 31-bit prime drawn from `seed`.
 *
 * # Safety
 * `model` is a live handle; `out_json` is valid for a pointer write.
 */
enum MldStatus mld_zero_test(const struct MldModel *model, uint64_t seed, char **out_json);

/**
 * Releases a string returned by this library; null is ignored.
 *
 * # Safety
 * `s` is null or a string from this library not yet freed.
 */
void mld_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MLDEG_H */
