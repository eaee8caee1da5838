#ifndef LOCDIM_H
#define LOCDIM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of [`locdim_loc_decide`].
 */
typedef enum LocdimDecision {
  LOCDIM_DECISION_COP_WIN = 0,
  LOCDIM_DECISION_ROBBER_WIN = 1,
  LOCDIM_DECISION_UNKNOWN = 2,
} LocdimDecision;

/**
 * Return code of every fallible call.
 */
typedef enum LocdimStatus {
  LOCDIM_STATUS_OK = 0,
  /**
   * A check ran and came out negative (e.g. a strategy was evaded).
   */
  LOCDIM_STATUS_VERIFICATION_FAILED = 1,
  LOCDIM_STATUS_BUDGET_EXHAUSTED = 2,
  LOCDIM_STATUS_INVALID_INPUT = 3,
  LOCDIM_STATUS_NULL_POINTER = 4,
  /**
   * A panic was caught at the boundary.
   */
  LOCDIM_STATUS_INTERNAL = 5,
} LocdimStatus;

/**
 * Opaque graph handle.
 */
typedef struct LocdimGraph LocdimGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *locdim_last_error(void);

/**
 * Frees a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void locdim_string_free(char *s);

/**
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_cycle(size_t n, struct LocdimGraph **out);

/**
 * Kneser graph K(k, n); automorphisms are attached for n ≤ 8.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_kneser(size_t k, size_t n, struct LocdimGraph **out);

/**
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_petersen(struct LocdimGraph **out);

/**
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_hoffman_singleton(struct LocdimGraph **out);

/**
 * Orthogonal polarity graph ER(q).
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_polarity(uint32_t q, struct LocdimGraph **out);

/**
 * Parses the graph JSON format.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_from_json(const char *json, struct LocdimGraph **out);

/**
 * Releases a graph. Null is ignored.
 *
 * # Safety
 * `g` must come from a constructor here and not have been freed.
 */
void locdim_graph_free(struct LocdimGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t locdim_graph_order(const struct LocdimGraph *g);

/**
 * # Safety
 * `g` must be a live handle; `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_to_json(const struct LocdimGraph *g, char **out);

/**
 * The graph's content hash as hex.
 *
 * # Safety
 * `g` must be a live handle; `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_graph_hash(const struct LocdimGraph *g, char **out);

/**
 * Whether `set[0..len]` resolves the graph.
 *
 * # Safety
 * `g` must be a live handle, `set` valid for `len` reads (may be null when
 * `len` is 0), `out` valid for a write.
 */
enum LocdimStatus locdim_is_resolving(const struct LocdimGraph *g,
                                      const size_t *set,
                                      size_t len,
                                      bool *out);

/**
 * Exact metric dimension. On budget exhaustion `*lower` and `*upper` still
 * hold the interval found and the status is `BudgetExhausted`.
 *
 * # Safety
 * `g` must be a live handle; `lower` and `upper` valid for writes.
 */
enum LocdimStatus locdim_metric_dimension(const struct LocdimGraph *g,
                                          uint64_t max_nodes,
                                          size_t *lower,
                                          size_t *upper);

/**
 * Decides whether `k` cops win the localization game. `*rounds` receives
 * the worst-case capture time on a cop win and 0 otherwise.
 *
 * # Safety
 * `g` must be a live handle; `out` and `rounds` valid for writes.
 */
enum LocdimStatus locdim_loc_decide(const struct LocdimGraph *g,
                                    size_t k,
                                    uint64_t max_nodes,
                                    enum LocdimDecision *out,
                                    uint32_t *rounds);

/**
 * Localization number as an interval; `lower == upper` when decided.
 *
 * # Safety
 * `g` must be a live handle; `lower` and `upper` valid for writes.
 */
enum LocdimStatus locdim_localization_number(const struct LocdimGraph *g,
                                             uint64_t max_nodes,
                                             size_t *lower,
                                             size_t *upper);

/**
 * Plays the staged Moore-graph strategy against every robber choice.
 * Returns `VerificationFailed` if any play escapes; `*rounds` receives the
 * worst-case capture time on success.
 *
 * # Safety
 * `g` must be a live handle; `rounds` valid for a write.
 */
enum LocdimStatus locdim_verify_moore_strategy(const struct LocdimGraph *g,
                                               uint32_t max_rounds,
                                               uint32_t *rounds);

/**
 * Bounds report for K(k, n) as JSON, formulas only.
 *
 * # Safety
 * `out` must be valid for a pointer write.
 */
enum LocdimStatus locdim_bounds_kneser_json(size_t k, size_t n, char **out);

/**
 * Bounds report for a graph as JSON, with solver values where cheap.
 *
 * # Safety
 * `g` must be a live handle; `out` valid for a pointer write.
 */
enum LocdimStatus locdim_bounds_graph_json(const struct LocdimGraph *g,
                                           uint64_t max_nodes,
                                           char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOCDIM_H */
