/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef LCS_FFI_H
#define LCS_FFI_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Zero is success.
typedef enum LcsStatus {
  LCS_STATUS_OK = 0,
  LCS_STATUS_NULL_POINTER = 1,
  LCS_STATUS_INVALID_CONFIG = 2,
  LCS_STATUS_CAPACITY = 3,
  LCS_STATUS_INDEX_OUT_OF_RANGE = 4,
  LCS_STATUS_ALPHABET = 5,
  LCS_STATUS_BUFFER_TOO_SMALL = 6,
  LCS_STATUS_INVALID_INPUT = 7,
  LCS_STATUS_INTERNAL = 99,
} LcsStatus;

// Opaque pair of filled tables plus the parent sequence needed to trace back.
typedef struct LcsAlignment LcsAlignment;

// Opaque symbol string.
typedef struct LcsSequence LcsSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *lcs_last_error(void);

// Static description of a status code.
const char *lcs_status_str(enum LcsStatus status);

// Hardware concurrency as seen by the library.
size_t lcs_default_workers(void);

// Copy `len` bytes into a new sequence handle.
//
// # Safety
// `data` must point to `len` readable bytes (it may be NULL when `len` is 0)
// and `out` must be a valid pointer to writable storage.
enum LcsStatus lcs_sequence_new(const uint8_t *data, size_t len, struct LcsSequence **out);

// Seeded random sequence over `alphabet`.
//
// # Safety
// `alphabet` must point to `alphabet_len` readable bytes and `out` must be
// a valid pointer to writable storage.
enum LcsStatus lcs_sequence_generate(size_t len,
                                     const uint8_t *alphabet,
                                     size_t alphabet_len,
                                     uint64_t seed,
                                     struct LcsSequence **out);

// # Safety
// `seq` must be NULL or a live handle from this library.
size_t lcs_sequence_len(const struct LcsSequence *seq);

// Pointer to the sequence bytes, valid while the handle lives.
//
// # Safety
// `seq` must be NULL or a live handle from this library.
const uint8_t *lcs_sequence_data(const struct LcsSequence *seq);

// # Safety
// `seq` must be NULL or a live handle from this library.
enum LcsStatus lcs_sequence_validate_dna(const struct LcsSequence *seq);

// # Safety
// `seq` must be NULL or a handle from this library not yet freed.
void lcs_sequence_free(struct LcsSequence *seq);

// Fill the tables with the parallel wavefront.
//
// `workers` and `block_size` must both be at least 1.
//
// # Safety
// `parent` and `child` must be live sequence handles and `out` a valid
// pointer to writable storage.
enum LcsStatus lcs_fill(const struct LcsSequence *parent,
                        const struct LcsSequence *child,
                        size_t workers,
                        size_t block_size,
                        struct LcsAlignment **out);

// Fill the tables serially.
//
// # Safety
// As for [`lcs_fill`].
enum LcsStatus lcs_fill_serial(const struct LcsSequence *parent,
                               const struct LcsSequence *child,
                               struct LcsAlignment **out);

// `c[M][N]`, or 0 for a NULL handle.
//
// # Safety
// `a` must be NULL or a live alignment handle.
uint32_t lcs_alignment_length(const struct LcsAlignment *a);

// Fill wall time in seconds, or -1 for a NULL handle.
//
// # Safety
// `a` must be NULL or a live alignment handle.
double lcs_alignment_elapsed_seconds(const struct LcsAlignment *a);

// LCS length as a percentage of the child length.
//
// # Safety
// `a` must be a live alignment handle and `out` valid for writes.
enum LcsStatus lcs_alignment_similarity_percent(const struct LcsAlignment *a, double *out);

// Read `c[i][j]`.
//
// # Safety
// `a` must be a live alignment handle and `out` valid for writes.
enum LcsStatus lcs_alignment_cell(const struct LcsAlignment *a, size_t i, size_t j, uint32_t *out);

// Trace back from `(i, j)` into `buf`.
//
// The subsequence length is always stored in `*out_len`. When it exceeds
// `cap`, nothing is copied and `BUFFER_TOO_SMALL` is returned so the caller
// can retry with a larger buffer.
//
// # Safety
// `a` must be a live alignment handle, `buf` must have room for `cap` bytes
// (it may be NULL when `cap` is 0), and `out_len` must be valid for writes.
enum LcsStatus lcs_alignment_traceback(const struct LcsAlignment *a,
                                       size_t i,
                                       size_t j,
                                       uint8_t *buf,
                                       size_t cap,
                                       size_t *out_len);

// # Safety
// `a` must be NULL or an alignment handle not yet freed.
void lcs_alignment_free(struct LcsAlignment *a);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCS_FFI_H */
