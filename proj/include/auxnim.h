/* C interface to the auxnim shared library: Sprague-Grundy evaluation for
 * selective compound Nim games, closed-form verification suites, grid
 * exports and periodicity experiments. All functions return a status code;
 * auxnim_last_error() describes the most recent failure on this thread. */

#ifndef AUXNIM_H
#define AUXNIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct auxnim_engine auxnim_engine;

typedef enum auxnim_status {
  AUXNIM_OK = 0,
  AUXNIM_ERR_INVALID_ARGUMENT = 1,
  AUXNIM_ERR_CAP_EXCEEDED = 2,
  AUXNIM_ERR_IO = 3,
  AUXNIM_ERR_INTERNAL = 4
} auxnim_status;

const char* auxnim_status_name(auxnim_status status);

/* Message for the most recent failing call on the calling thread; empty
 * string when the last call succeeded. */
const char* auxnim_last_error(void);

/* pile_cap == 0 selects the default cap (2^20). The engine owns a memo
 * table and is not thread-safe; confine each handle to one thread. */
auxnim_engine* auxnim_engine_new(uint64_t pile_cap);
void auxnim_engine_free(auxnim_engine* engine);
uint64_t auxnim_engine_pile_cap(const auxnim_engine* engine);
size_t auxnim_engine_memo_size(const auxnim_engine* engine);

/* Sprague-Grundy value of the selective compound of a heap of size aux with
 * the disjunctive sum of `piles`. */
auxnim_status auxnim_sg(auxnim_engine* engine, uint64_t aux,
                        const uint64_t* piles, size_t pile_count,
                        uint64_t* out_nimber);

/* Proven sandwich for the same position: aux + xor <= value <= aux + sum. */
auxnim_status auxnim_sg_bounds(uint64_t aux, const uint64_t* piles,
                               size_t pile_count, uint64_t* out_lower,
                               uint64_t* out_upper);

/* Hypergraph heap game: a move picks an edge with a non-empty heap and
 * reduces every non-empty heap in it independently by at least one. Edges
 * are passed flattened: edge_sizes[i] vertices (1-based) per edge. */
auxnim_status auxnim_nimh_sg(auxnim_engine* engine, uint32_t vertex_count,
                             const uint32_t* edge_vertices,
                             const size_t* edge_sizes, size_t edge_count,
                             const uint64_t* heaps, uint64_t* out_nimber);

/* Least auxiliary size from which the value equals the position's depth,
 * plus the proven bound that capped the scan. */
auxnim_status auxnim_afunction(auxnim_engine* engine, const uint64_t* piles,
                               size_t pile_count, uint64_t* out_a,
                               uint64_t* out_bound);

/* Line-oriented memo persistence (`aux|p1,...,pk|nimber`). Loading a missing
 * file is a no-op; a malformed line is an error. */
auxnim_status auxnim_cache_load(auxnim_engine* engine, const char* path);
auxnim_status auxnim_cache_save(const auxnim_engine* engine, const char* path);

typedef void (*auxnim_line_fn)(const char* line, void* user);

/* Runs one named verification suite; emits one line per counterexample plus
 * a summary line through line_fn. max_value == 0 selects the suite default.
 * out_passed is 1 when the suite found no counterexamples. */
auxnim_status auxnim_verify_suite(auxnim_engine* engine, const char* suite,
                                  uint64_t max_value, auxnim_line_fn line_fn,
                                  void* user, int* out_passed,
                                  uint64_t* out_checked);

/* Comma-separated list of the suite names. */
const char* auxnim_suite_names(void);

/* Heat-map export: cell (x, y) of [0, max_coord)^2 holds the value of
 * (aux, [x, y]). format is "csv" or "pgm". */
auxnim_status auxnim_grid_write(auxnim_engine* engine, uint64_t aux,
                                uint64_t max_coord, const char* format,
                                const char* path);

typedef struct auxnim_period_report {
  uint64_t preperiod; /* n0 */
  uint64_t period;    /* p; 0 when no candidate was found */
  int certified;
  uint64_t window_lo; /* range of n with value[n] == value[n+p] verified */
  uint64_t window_hi;
  uint64_t max_n;
} auxnim_period_report;

/* Subtraction game with removal set `amounts`, compounded selectively with a
 * heap of size k. The sequence reported is the compound's values. */
auxnim_status auxnim_subtraction_period(const uint64_t* amounts,
                                        size_t amount_count, uint64_t k,
                                        uint64_t max_n,
                                        auxnim_period_report* out);
auxnim_status auxnim_subtraction_sequence(const uint64_t* amounts,
                                          size_t amount_count, uint64_t k,
                                          uint64_t max_n,
                                          uint64_t* out_values /* max_n+1 */);

/* Octal heap games, e.g. "0.77". Periods are certified from a matching
 * window proven sufficient for eventual periodicity. */
auxnim_status auxnim_octal_period(const char* code, uint64_t max_n,
                                  auxnim_period_report* out);
auxnim_status auxnim_octal_sequence(const char* code, uint64_t max_n,
                                    uint64_t* out_values /* max_n+1 */);

/* Edge-removal game on a star with `pendants` leaf edges and a tail of n
 * edges. Periods are empirical, never certified. */
auxnim_status auxnim_starkayles_period(uint64_t pendants, uint64_t max_n,
                                       auxnim_period_report* out);
auxnim_status auxnim_starkayles_sequence(uint64_t pendants, uint64_t max_n,
                                         uint64_t* out_values /* max_n+1 */);

/* Selective compound of a heap of size k with a path of n edges under graph
 * moves. The state space is the partitions of n; max_n_cap == 0 selects the
 * default cap (30) and larger requests are refused. */
auxnim_status auxnim_kayles_aux_period(uint64_t k, uint64_t max_n,
                                       uint64_t max_n_cap,
                                       auxnim_period_report* out);
auxnim_status auxnim_kayles_aux_sequence(uint64_t k, uint64_t max_n,
                                         uint64_t max_n_cap,
                                         uint64_t* out_values /* max_n+1 */);

#ifdef __cplusplus
}
#endif

#endif /* AUXNIM_H */
