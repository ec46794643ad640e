#ifndef BLOCKING_CA_H
#define BLOCKING_CA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BcaOutcome {
  BCA_OUTCOME_N = 0,
  BCA_OUTCOME_P = 1,
} BcaOutcome;

typedef enum BcaStatus {
  BCA_STATUS_OK = 0,
  BCA_STATUS_NULL_POINTER = 1,
  BCA_STATUS_INVALID_PARAMS = 2,
  BCA_STATUS_PARSE = 3,
  BCA_STATUS_ILLEGAL_POSITION = 4,
  BCA_STATUS_GUARD = 5,
  BCA_STATUS_OUTSIDE_DIAGRAM = 6,
  BCA_STATUS_IO = 7,
  BCA_STATUS_PANIC = 8,
  BCA_STATUS_BUFFER_TOO_SMALL = 9,
} BcaStatus;

typedef enum BcaWindowMode {
  BCA_WINDOW_MODE_ANCHORED = 0,
  BCA_WINDOW_MODE_ANY_CONTIGUOUS = 1,
} BcaWindowMode;

typedef struct BcaBoard BcaBoard;

typedef struct BcaDiagram BcaDiagram;

typedef struct BcaParams BcaParams;

typedef struct BcaSolver BcaSolver;

typedef struct BcaTape BcaTape;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. The pointer
 stays valid until the next failing call on the same thread.
 */
const char *bca_last_error_message(void);

/*
 Static NUL-terminated version string.
 */
const char *bca_version(void);

/*
 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum BcaStatus bca_params_new(size_t gamma,
                              size_t left,
                              size_t right,
                              size_t block,
                              struct BcaParams **out_params);

/*
 # Safety
 `params` must be NULL or a handle from [`bca_params_new`] not yet freed.
 */
void bca_params_free(struct BcaParams *params);

/*
 Full window width `gamma + left + right`, or 0 for NULL.

 # Safety
 `params` must be NULL or a live handle.
 */
size_t bca_params_delta(const struct BcaParams *params);

/*
 Parses `origin=<int> left=<0|1> right=<0|1> core=<bits>`.

 # Safety
 `line` must be a NUL-terminated string; `out_tape` valid for one write.
 */
enum BcaStatus bca_tape_parse(const char *line, struct BcaTape **out_tape);

/*
 A tape whose 1-cells are exactly `ones[0..len]`.

 # Safety
 `ones` must point to `len` readable values (may be NULL when `len` is 0).
 */
enum BcaStatus bca_tape_from_ones(const int64_t *ones, size_t len, struct BcaTape **out_tape);

/*
 `width` seeded random cells starting at `start`.

 # Safety
 `out_tape` must be valid for one write.
 */
enum BcaStatus bca_tape_random(uint64_t seed,
                               int64_t start,
                               size_t width,
                               struct BcaTape **out_tape);

/*
 1 exactly at cells `x >= threshold`.

 # Safety
 `out_tape` must be valid for one write.
 */
enum BcaStatus bca_tape_step(int64_t threshold, struct BcaTape **out_tape);

/*
 # Safety
 `tape` must be a live handle; `out_bit` valid for one write.
 */
enum BcaStatus bca_tape_get(const struct BcaTape *tape, int64_t x, uint8_t *out_bit);

/*
 Writes the one-line text form, NUL-terminated, into `buf`. With a NULL
 `buf` or too small `cap`, only `*needed` (bytes including the NUL) is
 set; the status is then `BufferTooSmall` unless `buf` was NULL.

 # Safety
 `buf` must be NULL or writable for `cap` bytes; `needed` valid for one
 write.
 */
enum BcaStatus bca_tape_to_string(const struct BcaTape *tape,
                                  char *buf,
                                  size_t cap,
                                  size_t *needed);

/*
 # Safety
 `tape` must be NULL or a live handle not yet freed.
 */
void bca_tape_free(struct BcaTape *tape);

/*
 Evolves `init` for `steps` rows.

 # Safety
 `init` and `params` must be live handles; `out_diagram` valid for one
 write.
 */
enum BcaStatus bca_diagram_evolve(const struct BcaTape *init,
                                  const struct BcaParams *params,
                                  size_t steps,
                                  struct BcaDiagram **out_diagram);

/*
 Number of steps held (rows are `0..=steps`), or 0 for NULL.

 # Safety
 `diagram` must be NULL or a live handle.
 */
size_t bca_diagram_steps(const struct BcaDiagram *diagram);

/*
 # Safety
 `diagram` must be a live handle; `out_bit` valid for one write.
 */
enum BcaStatus bca_diagram_cell(const struct BcaDiagram *diagram,
                                int64_t x,
                                int64_t t,
                                uint8_t *out_bit);

/*
 Copies row `t` out as a new tape handle.

 # Safety
 `diagram` must be a live handle; `out_tape` valid for one write.
 */
enum BcaStatus bca_diagram_row(const struct BcaDiagram *diagram,
                               size_t t,
                               struct BcaTape **out_tape);

/*
 Whether triangle `(x, y, h)` is CA-safe in `diagram`.

 # Safety
 `diagram` must be a live handle; `out_safe` valid for one write.
 */
enum BcaStatus bca_diagram_ca_safe(const struct BcaDiagram *diagram,
                                   int64_t x,
                                   int64_t y,
                                   int64_t h,
                                   uint8_t *out_safe);

/*
 # Safety
 `diagram` must be NULL or a live handle not yet freed.
 */
void bca_diagram_free(struct BcaDiagram *diagram);

/*
 A board from parameters and a terminal-level tape (both copied).

 # Safety
 `params` and `level0` must be live handles; `out_board` valid for one
 write.
 */
enum BcaStatus bca_board_new(const struct BcaParams *params,
                             const struct BcaTape *level0,
                             struct BcaBoard **out_board);

/*
 Parses board-file text: a params line then a tape line.

 # Safety
 `text` must be NUL-terminated; `out_board` valid for one write.
 */
enum BcaStatus bca_board_parse(const char *board_text, struct BcaBoard **out_board);

/*
 # Safety
 `board` must be NULL or a live handle not yet freed.
 */
void bca_board_free(struct BcaBoard *board);

/*
 A memoizing solver over a copy of `board`.

 # Safety
 `board` must be a live handle; `out_solver` valid for one write.
 */
enum BcaStatus bca_solver_new(const struct BcaBoard *board,
                              enum BcaWindowMode mode,
                              struct BcaSolver **out_solver);

/*
 Outcome of triangle `(x, y, h)`. Not thread-safe per handle.

 # Safety
 `solver` must be a live handle used by one thread at a time;
 `out_outcome` valid for one write.
 */
enum BcaStatus bca_solver_outcome(struct BcaSolver *solver,
                                  int64_t x,
                                  int64_t y,
                                  int64_t h,
                                  enum BcaOutcome *out_outcome);

/*
 # Safety
 `solver` must be NULL or a live handle not yet freed.
 */
void bca_solver_free(struct BcaSolver *solver);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BLOCKING_CA_H */
