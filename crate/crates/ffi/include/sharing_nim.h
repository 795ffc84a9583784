#ifndef SHARING_NIM_H
#define SHARING_NIM_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum SnStatus {
  SN_OK = 0,
  SN_NULL_POINTER = 1,
  /**
   * A pile index, bound or argument is outside its valid range.
   */
  SN_OUT_OF_RANGE = 2,
  SN_ILLEGAL_MOVE = 3,
  /**
   * The position has no move of the requested kind.
   */
  SN_NO_MOVE = 4,
  /**
   * The requested table would exceed the entry budget.
   */
  SN_RESOURCE_LIMIT = 5,
  SN_PANIC = 6,
} SnStatus;

/**
 * Opaque nim-value table.
 */
typedef struct SnGrundyTable SnGrundyTable;

/**
 * Three pile sizes. Inputs may be in any order; outputs are ascending.
 */
typedef struct SnPosition {
  uint64_t piles[3];
} SnPosition;

/**
 * Move `k` tokens from rank `source` to rank `dest` of the sorted position.
 */
typedef struct SnMove {
  uint32_t source;
  uint32_t dest;
  uint64_t k;
} SnMove;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *sn_status_message(enum SnStatus status);

bool sn_is_p_position(struct SnPosition position);

bool sn_is_1_position(struct SnPosition position);

/**
 * True when no move is possible.
 */
bool sn_is_terminal(struct SnPosition position);

/**
 * Sorts the piles and subtracts the smallest from each.
 */
struct SnPosition sn_normalize(struct SnPosition position);

uint64_t sn_count_p_positions(uint64_t n);

uint8_t sn_f_indicator(uint64_t n);

/**
 * Exponent of 2 in `d`. `SnOutOfRange` for `d == 0`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum SnStatus sn_two_adic_valuation(uint64_t d, uint32_t *out);

/**
 * Applies `mv` to the sorted form of `position`.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum SnStatus sn_apply_move(struct SnPosition position, struct SnMove mv, struct SnPosition *out);

/**
 * First winning move, or `SnNoMove` at a P-position.
 *
 * # Safety
 * `out` must be null or valid for writes.
 */
enum SnStatus sn_winning_move(struct SnPosition position, struct SnMove *out);

/**
 * Writes up to `cap` winning moves to `out` and the total count to `len`.
 * `out` may be null when `cap` is 0.
 *
 * # Safety
 * `len` must be valid for writes and `out` valid for `cap` writes.
 */
enum SnStatus sn_winning_moves(struct SnPosition position,
                               struct SnMove *out,
                               size_t cap,
                               size_t *len);

/**
 * Builds the nim-value table for every class with largest gap `<= max_b`.
 *
 * # Safety
 * `out` must be null or valid for writes. The handle written there must be
 * released with [`sn_grundy_table_free`].
 */
enum SnStatus sn_grundy_table_build(uint64_t max_b, struct SnGrundyTable **out);

/**
 * Largest gap covered by `table`, or 0 for a null handle.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
uint64_t sn_grundy_table_max_b(const struct SnGrundyTable *table);

/**
 * Nim-value of `position` (any order, any translation).
 *
 * # Safety
 * `table` must be null or a live handle; `out` must be null or valid for writes.
 */
enum SnStatus sn_grundy_table_value(const struct SnGrundyTable *table,
                                    struct SnPosition position,
                                    uint32_t *out);

/**
 * Releases a table handle. Null is ignored.
 *
 * # Safety
 * `table` must be null or a handle from [`sn_grundy_table_build`] not yet freed.
 */
void sn_grundy_table_free(struct SnGrundyTable *table);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SHARING_NIM_H */
