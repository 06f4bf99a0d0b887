#ifndef BROOKS_COLOR_H
#define BROOKS_COLOR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible function.
 */
typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_POINTER = 1,
  BC_STATUS_INVALID_UTF8 = 2,
  BC_STATUS_PARSE_ERROR = 3,
  BC_STATUS_INVALID_GRAPH = 4,
  BC_STATUS_MISSING_LIST = 5,
  BC_STATUS_HYPOTHESIS_VIOLATION = 6,
  BC_STATUS_INTERNAL_ERROR = 7,
  BC_STATUS_DEFECT = 8,
  BC_STATUS_UNSATISFIABLE = 9,
  BC_STATUS_LIMIT_EXCEEDED = 10,
  BC_STATUS_OUT_OF_RANGE = 11,
  BC_STATUS_PANIC = 12,
} BcStatus;

/**
 * A chordality verdict with its witness sequence.
 */
typedef struct BcCertificate BcCertificate;

/**
 * A vertex coloring, entries in ascending vertex order.
 */
typedef struct BcColoring BcColoring;

/**
 * A graph with an optional list assignment.
 */
typedef struct BcInstance BcInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL.
 *
 * The pointer stays valid until the next `bc_*` call on the same thread.
 */
const char *bc_last_error_message(void);

/**
 * Parses instance text (DIMACS edge format with optional `l` list lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum BcStatus bc_instance_parse(const char *text, struct BcInstance **out);

/**
 * Builds an instance from `vertex_count` ids and `edge_count` pairs stored
 * flat in `edges` (`2 * edge_count` entries).
 *
 * # Safety
 * The arrays must hold the stated number of elements (they may be NULL
 * when the count is zero); `out` must be writable.
 */
enum BcStatus bc_instance_from_edges(const uint32_t *vertices,
                                     size_t vertex_count,
                                     const uint32_t *edges,
                                     size_t edge_count,
                                     struct BcInstance **out);

/**
 * # Safety
 * `instance` must be NULL or a handle from this library not yet freed.
 */
void bc_instance_free(struct BcInstance *instance);

/**
 * # Safety
 * `instance` must be a live handle.
 */
size_t bc_instance_vertex_count(const struct BcInstance *instance);

/**
 * # Safety
 * `instance` must be a live handle.
 */
size_t bc_instance_edge_count(const struct BcInstance *instance);

/**
 * # Safety
 * `instance` must be a live handle.
 */
size_t bc_instance_max_degree(const struct BcInstance *instance);

/**
 * Sets the list of vertex `v`.
 *
 * # Safety
 * `instance` must be a live handle; `colors` must hold `len` values.
 */
enum BcStatus bc_instance_set_list(struct BcInstance *instance,
                                   uint32_t vertex,
                                   const int64_t *colors,
                                   size_t len);

/**
 * Replaces all lists with `{1, ..., k}`.
 *
 * # Safety
 * `instance` must be a live handle.
 */
enum BcStatus bc_instance_set_uniform(struct BcInstance *instance, size_t k);

/**
 * Serializes the instance; release the string with [`bc_string_free`].
 *
 * # Safety
 * `instance` must be a live handle; `out` must be writable.
 */
enum BcStatus bc_instance_emit(const struct BcInstance *instance, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void bc_string_free(char *s);

/**
 * Computes a chordality certificate.
 *
 * # Safety
 * `instance` must be a live handle; `out` must be writable.
 */
enum BcStatus bc_chordality(const struct BcInstance *instance, struct BcCertificate **out);

/**
 * True for an elimination order, false for a hole.
 *
 * # Safety
 * `certificate` must be a live handle.
 */
bool bc_certificate_is_chordal(const struct BcCertificate *certificate);

/**
 * # Safety
 * `certificate` must be a live handle.
 */
size_t bc_certificate_len(const struct BcCertificate *certificate);

/**
 * Copies up to `capacity` witness vertices into `buffer` and returns the
 * full length.
 *
 * # Safety
 * `certificate` must be a live handle; `buffer` must hold `capacity` values.
 */
size_t bc_certificate_vertices(const struct BcCertificate *certificate,
                               uint32_t *buffer,
                               size_t capacity);

/**
 * # Safety
 * `certificate` must be NULL or a live handle.
 */
void bc_certificate_free(struct BcCertificate *certificate);

/**
 * Colors the instance from its lists.
 *
 * # Safety
 * `instance` must be a live handle; `out` must be writable.
 */
enum BcStatus bc_color(const struct BcInstance *instance, struct BcColoring **out);

/**
 * Exhaustive search with at most `node_limit` tentative assignments.
 *
 * # Safety
 * `instance` must be a live handle; `out` must be writable.
 */
enum BcStatus bc_oracle(const struct BcInstance *instance,
                        uint64_t node_limit,
                        struct BcColoring **out);

/**
 * Creates a coloring from parallel arrays.
 *
 * # Safety
 * Both arrays must hold `len` values; `out` must be writable.
 */
enum BcStatus bc_coloring_from_arrays(const uint32_t *vertices,
                                      const int64_t *colors,
                                      size_t len,
                                      struct BcColoring **out);

/**
 * # Safety
 * `coloring` must be a live handle.
 */
size_t bc_coloring_len(const struct BcColoring *coloring);

/**
 * Reads entry `index` (ascending vertex order).
 *
 * # Safety
 * `coloring` must be a live handle; `vertex` and `color` must be writable.
 */
enum BcStatus bc_coloring_entry(const struct BcColoring *coloring,
                                size_t index,
                                uint32_t *vertex,
                                int64_t *color);

/**
 * # Safety
 * `coloring` must be NULL or a live handle.
 */
void bc_coloring_free(struct BcColoring *coloring);

/**
 * Checks properness and list membership.
 *
 * # Safety
 * Both handles must be live.
 */
enum BcStatus bc_verify(const struct BcInstance *instance, const struct BcColoring *coloring);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BROOKS_COLOR_H */
