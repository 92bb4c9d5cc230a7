#ifndef LANGFORD_FORGE_H
#define LANGFORD_FORGE_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes.
typedef enum LfStatus {
  LF_STATUS_OK = 0,
  LF_STATUS_NULL_POINTER = 1,
  LF_STATUS_INVALID_SEQUENCE = 2,
  LF_STATUS_INVALID_ARGUMENT = 3,
  LF_STATUS_TOO_LARGE = 4,
  LF_STATUS_BUFFER_TOO_SMALL = 5,
  LF_STATUS_INTERNAL = 6,
} LfStatus;

// A digraph on vertices `1..=order`.
typedef struct LfDigraph LfDigraph;

// A validated Langford, Skolem or extended Skolem sequence.
typedef struct LfSequence LfSequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *lf_last_error_message(void);

// Parses comma-separated symbols. Even length is read as a Langford
// sequence of the given defect (1 for Skolem); odd length as an extended
// Skolem sequence, for which `defect` must be 0 or 1.
//
// # Safety
// `text` must be a NUL-terminated string and `out` a writable pointer.
enum LfStatus lf_sequence_parse(const char *text, uint32_t defect, struct LfSequence **out);

// Same as [`lf_sequence_parse`] from an array of symbols.
//
// # Safety
// `values` must point to `len` readable integers and `out` be writable.
enum LfStatus lf_sequence_from_values(const uint32_t *values,
                                      size_t len,
                                      uint32_t defect,
                                      struct LfSequence **out);

// # Safety
// `seq` must be null or a handle from this library, not yet freed.
void lf_sequence_free(struct LfSequence *seq);

// Copies the symbols into `buf`. `len_out` receives the sequence length;
// when `cap` is smaller nothing is copied and `BufferTooSmall` is returned.
//
// # Safety
// `seq` must be a live handle, `buf` writable for `cap` integers (may be
// null when `cap` is 0) and `len_out` writable.
enum LfStatus lf_sequence_values(const struct LfSequence *seq,
                                 uint32_t *buf,
                                 size_t cap,
                                 size_t *len_out);

// Number of distinct nonzero symbols.
//
// # Safety
// `seq` must be a live handle and `out` writable.
enum LfStatus lf_sequence_order(const struct LfSequence *seq, size_t *out);

// Smallest symbol of a Langford sequence; 0 for extended sequences.
//
// # Safety
// `seq` must be a live handle and `out` writable.
enum LfStatus lf_sequence_defect(const struct LfSequence *seq, uint32_t *out);

// One-based position of the zero; 0 for Langford sequences.
//
// # Safety
// `seq` must be a live handle and `out` writable.
enum LfStatus lf_sequence_zero_pos(const struct LfSequence *seq, size_t *out);

// Comma text of the sequence; release with [`lf_string_free`].
//
// # Safety
// `seq` must be a live handle and `out` writable.
enum LfStatus lf_sequence_to_text(const struct LfSequence *seq, char **out);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void lf_string_free(char *s);

// Expands `seq` with images taken from `RS_n` in canonical order:
// `indices[k]` is the image of the `k`-th non-loop arc of the sequence's
// matching, arcs in lexicographic order. For extended input `loop_choice`
// (1 or 2) picks the loop image; it must be 0 for Langford input.
//
// # Safety
// `seq` must be a live handle, `indices` readable for `count` entries (may
// be null when `count` is 0) and `out` writable.
enum LfStatus lf_expand(const struct LfSequence *seq,
                        size_t n,
                        const size_t *indices,
                        size_t count,
                        uint8_t loop_choice,
                        struct LfSequence **out);

// `|S_n|`, which equals `|RS_n|`.
//
// # Safety
// `out` must be writable.
enum LfStatus lf_sn_count(size_t n, uint64_t *out);

// Member `index` of `RS_n` in canonical order.
//
// # Safety
// `out` must be writable.
enum LfStatus lf_rsn_member(size_t n, size_t index, struct LfDigraph **out);

// Loop-plus-digons rotation `1` or `2` of the canonically labeled `C_n`.
//
// # Safety
// `out` must be writable.
enum LfStatus lf_cycle_rotation(size_t n, uint8_t choice, struct LfDigraph **out);

// # Safety
// `g` must be null or a handle from this library, not yet freed.
void lf_digraph_free(struct LfDigraph *g);

// # Safety
// `g` must be a live handle and `out` writable.
enum LfStatus lf_digraph_order(const struct LfDigraph *g, size_t *out);

// Writes arcs as `(u, v)` pairs into `buf` (two entries per arc), in
// lexicographic order. `arcs_out` receives the arc count; when `cap` (in
// entries) is below twice that, nothing is copied and `BufferTooSmall` is
// returned.
//
// # Safety
// `g` must be a live handle, `buf` writable for `cap` entries (may be null
// when `cap` is 0) and `arcs_out` writable.
enum LfStatus lf_digraph_arcs(const struct LfDigraph *g, size_t *buf, size_t cap, size_t *arcs_out);

// Whether a Langford sequence of order `m` and defect `d` exists.
bool lf_langford_exists(uint64_t m, uint64_t d);

// Number of Langford sequences of order `m` and defect `d` (reversals
// counted separately), as a decimal string released with
// [`lf_string_free`]. Refuses orders above 16.
//
// # Safety
// `out` must be writable.
enum LfStatus lf_count_langford(size_t m, uint32_t d, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LANGFORD_FORGE_H */
