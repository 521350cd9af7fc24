#ifndef FLIPWIDE_H
#define FLIPWIDE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define FW_OK 0

#define FW_ERR_OUT_OF_RANGE 1

#define FW_ERR_LOOP_REJECTED 2

#define FW_ERR_LOOP_QUERY 3

#define FW_ERR_DUPLICATE_VERTEX 4

#define FW_ERR_TOO_LARGE 5

#define FW_ERR_INVALID_PARAMETER 6

#define FW_ERR_MISSING_WITNESS 7

#define FW_ERR_PRECONDITION_FAILED 8

#define FW_ERR_BOUND_VIOLATED 9

#define FW_ERR_SIZE_REQUIREMENT_UNMET 10

#define FW_ERR_OVERFLOW 11

#define FW_ERR_INVALID_SPEC 12

#define FW_ERR_INVALID_PATH 13

#define FW_ERR_MALFORMED 14

/**
 * A required pointer argument was null.
 */
#define FW_ERR_NULL_POINTER 100

/**
 * A string argument was not valid UTF-8.
 */
#define FW_ERR_UTF8 101

/**
 * The library panicked; the call had no effect.
 */
#define FW_ERR_PANIC 102

#define FW_MODE_GUARANTEED 0

#define FW_MODE_BEST_EFFORT 1

/**
 * Distance reported by `fw_bfs` for unreachable vertices.
 */
#define FW_UNREACHABLE UINT32_MAX

/**
 * Opaque result of `fw_convert`.
 */
typedef struct FwConversion FwConversion;

/**
 * Opaque graph handle.
 */
typedef struct FwGraph FwGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success. Valid until the
 * next call on the same thread.
 */
const char *fw_last_error_message(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in `edges`
 * (`u0, v0, u1, v1, …`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values; `out` must be writable.
 */
int32_t fw_graph_from_edges(size_t n, const size_t *edges, size_t edge_count, struct FwGraph **out);

/**
 * Decodes a NUL-terminated graph6 string.
 *
 * # Safety
 * `text` must be a valid C string; `out` must be writable.
 */
int32_t fw_graph_from_graph6(const char *text, struct FwGraph **out);

/**
 * # Safety
 * `g` must come from this library and not be used afterwards. Null is ignored.
 */
void fw_graph_free(struct FwGraph *g);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t fw_graph_vertex_count(const struct FwGraph *g);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t fw_graph_edge_count(const struct FwGraph *g);

/**
 * Encodes as graph6; release the string with `fw_string_free`.
 *
 * # Safety
 * `g` must be a live handle; `out` must be writable.
 */
int32_t fw_graph_to_graph6(const struct FwGraph *g, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void fw_string_free(char *s);

/**
 * Single-source distances into `out`, which must hold `fw_graph_vertex_count(g)` values.
 * Unreachable vertices get `FW_UNREACHABLE`.
 *
 * # Safety
 * `g` must be a live handle; `out` must have room for every vertex.
 */
int32_t fw_bfs(const struct FwGraph *g, size_t source, uint32_t *out);

/**
 * Checks that `b ⊆ a ∖ s`, `|b| >= m`, and `b` is `r`-independent in `G ∖ s`. Writes 1 or 0
 * to `valid`.
 *
 * # Safety
 * Each array must hold the stated number of values; `valid` must be writable.
 */
int32_t fw_verify_widenable(const struct FwGraph *g,
                            const size_t *a,
                            size_t a_len,
                            const size_t *s,
                            size_t s_len,
                            const size_t *b,
                            size_t b_len,
                            uint32_t r,
                            size_t m,
                            int32_t *valid);

/**
 * Converts a flip witness `b` for the flips in `flips_json` (`[[A, B], …]`) into a deletion
 * witness. `mode` is `FW_MODE_GUARANTEED` or `FW_MODE_BEST_EFFORT`. A conversion that runs
 * but fails still returns `FW_OK`; inspect it with `fw_conversion_is_success`.
 *
 * # Safety
 * `flips_json` must be a valid C string, `b` must hold `b_len` values, `out` must be writable.
 */
int32_t fw_convert(const struct FwGraph *g,
                   const char *flips_json,
                   const size_t *b,
                   size_t b_len,
                   uint32_t r,
                   size_t m,
                   size_t t0,
                   int32_t mode,
                   struct FwConversion **out);

/**
 * # Safety
 * `c` must be null or a live handle.
 */
int32_t fw_conversion_is_success(const struct FwConversion *c);

/**
 * Number of deleted vertices; `*data` receives a pointer valid for the handle's lifetime.
 *
 * # Safety
 * `c` must be a live handle; `data` must be null or writable.
 */
size_t fw_conversion_deletion(const struct FwConversion *c, const size_t **data);

/**
 * Size of the final witness; `*data` receives a pointer valid for the handle's lifetime.
 *
 * # Safety
 * `c` must be a live handle; `data` must be null or writable.
 */
size_t fw_conversion_witness(const struct FwConversion *c, const size_t **data);

/**
 * Failure reason, empty on success. Valid for the handle's lifetime.
 *
 * # Safety
 * `c` must be a live handle.
 */
const char *fw_conversion_reason(const struct FwConversion *c);

/**
 * The conversion trace as JSON. Valid for the handle's lifetime.
 *
 * # Safety
 * `c` must be a live handle.
 */
const char *fw_conversion_trace_json(const struct FwConversion *c);

/**
 * # Safety
 * `c` must come from `fw_convert` and not be used afterwards. Null is ignored.
 */
void fw_conversion_free(struct FwConversion *c);

/**
 * `R^k(m, n)` by the binomial bound, as a decimal string released with `fw_string_free`.
 *
 * # Safety
 * `out` must be writable.
 */
int32_t fw_iterated_ramsey_upper(uint32_t k, uint64_t m, uint64_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLIPWIDE_H */
