#ifndef TORICUBE_H
#define TORICUBE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible function.
 */
typedef enum TcStatus {
  TC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  TC_STATUS_NULL_ARGUMENT = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  TC_STATUS_INVALID_UTF8 = 2,
  /**
   * Problem JSON did not match the schema; the message names the field.
   */
  TC_STATUS_MALFORMED = 3,
  /**
   * Arguments were well formed but inconsistent, e.g. mismatched dimensions.
   */
  TC_STATUS_INVALID_INPUT = 4,
  /**
   * The ambient dimension or an exponent exceeds a supported bound.
   */
  TC_STATUS_LIMIT_EXCEEDED = 5,
  /**
   * An internal invariant failed. Please report it.
   */
  TC_STATUS_CONTRACT_VIOLATION = 6,
  /**
   * The caller's buffer is too short; the required length was written.
   */
  TC_STATUS_BUFFER_TOO_SMALL = 7,
  /**
   * A panic was caught at the boundary.
   */
  TC_STATUS_PANIC = 8,
} TcStatus;

/**
 * A CW decomposition of a toric cube.
 */
typedef struct TcComplex TcComplex;

/**
 * A monomial map `[0,1]^d -> [0,1]^n`.
 */
typedef struct TcMap TcMap;

/**
 * A binomial system `x^u <= x^v` over `[0,1]^n`.
 */
typedef struct TcSystem TcSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Description of the last failure on this thread, or an empty string after
 * a success. The pointer stays valid until the next call into this library
 * on the same thread.
 */
const char *tc_last_error_message(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` must be null or a string obtained from this library and not yet freed.
 */
void tc_string_free(char *s);

/**
 * Parses a `binomial_system` problem document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum TcStatus tc_system_from_json(const char *json, struct TcSystem **out);

/**
 * Parses a `monomial_map` problem document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a write.
 */
enum TcStatus tc_map_from_json(const char *json, struct TcMap **out);

/**
 * Serializes a system in the problem-file schema.
 *
 * # Safety
 * `system` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_system_to_json(const struct TcSystem *system, char **out);

/**
 * Serializes a map in the problem-file schema.
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_map_to_json(const struct TcMap *map, char **out);

/**
 * Binomial system cutting out the closure of the image of `map`.
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_implicitize(const struct TcMap *map, struct TcSystem **out);

/**
 * Monomial map whose image closure is the cube of `system`.
 *
 * # Safety
 * `system` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_parametrize(const struct TcSystem *system, struct TcMap **out);

/**
 * System cutting out the closure of the positive part of `system`.
 *
 * # Safety
 * `system` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_cubify(const struct TcSystem *system, struct TcSystem **out);

/**
 * Whether `system` already cuts out a toric cube.
 *
 * # Safety
 * `system` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_is_cube(const struct TcSystem *system, bool *out);

/**
 * CW decomposition of the closure of the image of `map`.
 *
 * # Safety
 * `map` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_from_map(const struct TcMap *map, struct TcComplex **out);

/**
 * CW decomposition of the cube of `system`.
 *
 * # Safety
 * `system` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_from_system(const struct TcSystem *system, struct TcComplex **out);

/**
 * Number of cells.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_cell_count(const struct TcComplex *complex, size_t *out);

/**
 * Cell counts by dimension. `*len` receives the vector's length; entries
 * are written to `buf` only when `cap` is large enough.
 *
 * # Safety
 * `complex` must be a live handle, `len` valid for a write, and `buf` valid
 * for `cap` writes (it may be null when `cap` is 0).
 */
enum TcStatus tc_complex_f_vector(const struct TcComplex *complex,
                                  size_t *buf,
                                  size_t cap,
                                  size_t *len);

/**
 * Euler characteristic of the whole complex.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_euler(const struct TcComplex *complex, int64_t *out);

/**
 * Number of fan refinements needed to make boundaries subcomplexes.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_refinements(const struct TcComplex *complex, size_t *out);

/**
 * The complex as the JSON document printed by `toricube cw`.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_to_json(const struct TcComplex *complex,
                                 bool char_domains,
                                 bool scaled_rays,
                                 char **out);

/**
 * Graphviz Hasse diagram of the closure poset.
 *
 * # Safety
 * `complex` must be a live handle; `out` must be valid for a write.
 */
enum TcStatus tc_complex_poset_dot(const struct TcComplex *complex, char **out);

/**
 * Releases a system handle. Null is ignored.
 *
 * # Safety
 * `system` must be null or a live handle, not used afterwards.
 */
void tc_system_free(struct TcSystem *system);

/**
 * Releases a map handle. Null is ignored.
 *
 * # Safety
 * `map` must be null or a live handle, not used afterwards.
 */
void tc_map_free(struct TcMap *map);

/**
 * Releases a complex handle. Null is ignored.
 *
 * # Safety
 * `complex` must be null or a live handle, not used afterwards.
 */
void tc_complex_free(struct TcComplex *complex);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TORICUBE_H */
