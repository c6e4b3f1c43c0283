#ifndef CGC_H
#define CGC_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CgcStatus {
  CGC_STATUS_OK = 0,
  CGC_STATUS_NULL_POINTER = 1,
  CGC_STATUS_INVALID_ARGUMENT = 2,
  CGC_STATUS_PARSE_ERROR = 3,
  CGC_STATUS_DISCONNECTED = 4,
  // The budget ran out; any value written is a bound, not exact.
  CGC_STATUS_EXHAUSTED = 5,
  CGC_STATUS_BUFFER_TOO_SMALL = 6,
  CGC_STATUS_INTERNAL = 7,
} CgcStatus;

// Opaque graph handle.
typedef struct CgcGraph CgcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread; empty if none. Valid until
// the next failing call on the same thread.
const char *cgc_last_error(void);

// Graph on `n` vertices from `m` edges stored as `2m` endpoint indices.
//
// # Safety
// `edges` must point to `2 * m` readable values (or be null when `m == 0`);
// `status` may be null.
struct CgcGraph *cgc_graph_new(size_t n, const size_t *edges, size_t m, enum CgcStatus *status);

// Parses one graph6 string.
//
// # Safety
// `text` must be null or a NUL-terminated string; `status` may be null.
struct CgcGraph *cgc_graph_from_graph6(const char *text, enum CgcStatus *status);

// Generates a gadget by name: `Gk`, `G5k`, `G3k`, `edge-line`, `line` or
// `P9` (which ignores `k`).
//
// # Safety
// `name` must be null or a NUL-terminated string; `status` may be null.
struct CgcGraph *cgc_gadget(const char *name, uint32_t k, enum CgcStatus *status);

// Releases a handle; null is ignored.
//
// # Safety
// `g` must be null or a handle not yet freed.
void cgc_graph_free(struct CgcGraph *g);

// Vertex count, or 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t cgc_graph_order(const struct CgcGraph *g);

// Edge count, or 0 for null.
//
// # Safety
// `g` must be null or a live handle.
size_t cgc_graph_size(const struct CgcGraph *g);

// Writes the graph6 string with its NUL into `buf`. `needed` receives the
// required capacity including the NUL; pass a null `buf` to query it.
//
// # Safety
// `buf` must be null or hold `cap` writable bytes; `needed` may be null.
enum CgcStatus cgc_graph_to_graph6(const struct CgcGraph *g, char *buf, size_t cap, size_t *needed);

// `χ(G)`. A zero budget means unlimited.
//
// # Safety
// `g` must be null or a live handle; `out` must be null or writable.
enum CgcStatus cgc_chromatic_number(const struct CgcGraph *g,
                                    uint64_t budget_nodes,
                                    uint64_t budget_ms,
                                    uint32_t *out);

// `χ_c(G)`. A zero budget means unlimited.
//
// # Safety
// `g` must be null or a live handle; `out` must be null or writable.
enum CgcStatus cgc_connected_chromatic_number(const struct CgcGraph *g,
                                              uint64_t budget_nodes,
                                              uint64_t budget_ms,
                                              uint32_t *out);

// `Γ_c(G)`. A zero budget means unlimited.
//
// # Safety
// `g` must be null or a live handle; `out` must be null or writable.
enum CgcStatus cgc_connected_grundy_number(const struct CgcGraph *g,
                                           uint64_t budget_nodes,
                                           uint64_t budget_ms,
                                           uint32_t *out);

// Whether a connected greedy coloring with at most `k` colors exists,
// starting at `seed_vertex` with `seed_color` when `seed_color > 0`. On
// success `found` is 1 or 0. A zero budget means unlimited.
//
// # Safety
// `g` must be null or a live handle; `found` must be null or writable.
enum CgcStatus cgc_exists_cgc(const struct CgcGraph *g,
                              uint32_t k,
                              size_t seed_vertex,
                              uint32_t seed_color,
                              uint64_t budget_nodes,
                              uint64_t budget_ms,
                              int32_t *found);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CGC_H */
