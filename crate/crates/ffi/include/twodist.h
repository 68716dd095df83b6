#ifndef TWODIST_H
#define TWODIST_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum TwodistRegime {
  TWODIST_REGIME_A = 0,
  TWODIST_REGIME_B = 1,
  /**
   * Inferred from mad and maximum degree.
   */
  TWODIST_REGIME_AUTO = 2,
} TwodistRegime;

typedef enum TwodistStatus {
  TWODIST_STATUS_OK = 0,
  TWODIST_STATUS_NULL_POINTER = 1,
  TWODIST_STATUS_PARSE_ERROR = 2,
  TWODIST_STATUS_INVALID_ARGUMENT = 3,
  TWODIST_STATUS_INVALID_COLORING = 4,
  TWODIST_STATUS_IRREDUCIBLE = 5,
  TWODIST_STATUS_BUDGET_EXCEEDED = 6,
  TWODIST_STATUS_BUFFER_TOO_SMALL = 7,
  TWODIST_STATUS_PANIC = 8,
} TwodistStatus;

/**
 * Opaque graph handle.
 */
typedef struct TwodistGraph TwodistGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code. Never null.
 */
const char *twodist_status_message(enum TwodistStatus status);

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *twodist_last_error(void);

/**
 * Parses a NUL-terminated edge list (`u v` lines, optional `n <count>`).
 *
 * # Safety
 * `text` must be a valid C string and `out` a writable pointer.
 */
enum TwodistStatus twodist_graph_parse(const char *text, struct TwodistGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m` ids.
 *
 * # Safety
 * `edges` must point to `2 * m` readable values (may be null when `m` is 0)
 * and `out` must be writable.
 */
enum TwodistStatus twodist_graph_from_edges(size_t n,
                                            const size_t *edges,
                                            size_t m,
                                            struct TwodistGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void twodist_graph_free(struct TwodistGraph *g);

/**
 * Vertex count, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t twodist_graph_vertex_count(const struct TwodistGraph *g);

/**
 * Edge count, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t twodist_graph_edge_count(const struct TwodistGraph *g);

/**
 * Maximum degree, or 0 for null.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t twodist_graph_max_degree(const struct TwodistGraph *g);

/**
 * Exact maximum average degree as a reduced fraction `num/den`.
 *
 * # Safety
 * `g` must be a live handle; `num` and `den` must be writable.
 */
enum TwodistStatus twodist_mad(const struct TwodistGraph *g, int64_t *num, int64_t *den);

/**
 * Length of a shortest cycle; writes 0 for a forest.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum TwodistStatus twodist_girth(const struct TwodistGraph *g, size_t *out);

/**
 * Constructive 2-distance coloring with `delta + 2` colors, where `delta`
 * is the declared maximum degree (0 means the graph's own). Writes one
 * color per vertex into `colors` (capacity `len`) and the palette size to
 * `k_out`.
 *
 * # Safety
 * `g` must be a live handle, `colors` must hold `len` writable values and
 * `k_out` must be writable or null.
 */
enum TwodistStatus twodist_color(const struct TwodistGraph *g,
                                 enum TwodistRegime regime,
                                 size_t delta,
                                 size_t *colors,
                                 size_t len,
                                 size_t *k_out);

/**
 * Checks `len` colors (one per vertex, each below `k`). Writes the number
 * of conflicting pairs to `violations`; returns `InvalidColoring` when it is
 * positive or the coloring is malformed.
 *
 * # Safety
 * `g` must be a live handle, `colors` must hold `len` readable values and
 * `violations` must be writable or null.
 */
enum TwodistStatus twodist_verify(const struct TwodistGraph *g,
                                  const size_t *colors,
                                  size_t len,
                                  size_t k,
                                  size_t *violations);

/**
 * Exact chi2 by branch and bound within `budget` search nodes. On
 * `BudgetExceeded`, `lower` and `upper` receive the bounds reached.
 *
 * # Safety
 * `g` must be a live handle; the outputs must be writable or null.
 */
enum TwodistStatus twodist_exact_chi2(const struct TwodistGraph *g,
                                      uint64_t budget,
                                      size_t *chi2,
                                      size_t *lower,
                                      size_t *upper);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWODIST_H */
