/* C interface to the ntlab binary-code analysis library. */

#ifndef NTLAB_H
#define NTLAB_H

/* Generated by cbindgen from the ntlab-capi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Success.
#define NTLAB_OK 0

// Malformed file or argument string.
#define NTLAB_ERR_PARSE -1

// Parameters outside the supported range of a construction.
#define NTLAB_ERR_UNSUPPORTED -2

// An enumeration budget would be exceeded.
#define NTLAB_ERR_BUDGET -3

// A required data file is absent.
#define NTLAB_ERR_MISSING_DATA -4

// Any other failure; consult `ntlab_last_error`.
#define NTLAB_ERR_OTHER -5

// A null handle or output pointer was passed.
#define NTLAB_ERR_NULL -6

// Opaque code handle.
typedef struct NtlabCode NtlabCode;

// Opaque permutation-group handle.
typedef struct NtlabGroup NtlabGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent error on this thread. The pointer stays
// valid until the next failing call on the same thread; do not free it.
const char *ntlab_last_error(void);

// Read a code file (`LINEAR`/`SET` format). Returns null on failure; see
// `ntlab_last_error`.
//
// # Safety
// `path` must be a valid NUL-terminated string.
struct NtlabCode *ntlab_code_read(const char *path);

// Construct a catalog code by family name (the CLI names: `golay24`,
// `rm1`, `qr`, `sp_quadric`, ...). Unused integer parameters are passed
// as -1; `plus` selects the quadric type (1 = plus, 0 = minus).
//
// # Safety
// `family` must be a valid NUL-terminated string.
struct NtlabCode *ntlab_code_construct(const char *family, int m, int t, int k, int r, int plus);

// # Safety
// `code` must come from a constructor of this library and not already be
// freed.
void ntlab_code_free(struct NtlabCode *code);

// Code length m, or NTLAB_ERR_NULL.
//
// # Safety
// `code` must be a live handle.
int ntlab_code_length(const struct NtlabCode *code);

// Dimension of a linear code; -1 for explicit word sets.
//
// # Safety
// `code` must be a live handle.
int ntlab_code_dimension(const struct NtlabCode *code);

// Number of codewords (valid while it fits 64 bits).
//
// # Safety
// `code` must be a live handle.
uint64_t ntlab_code_word_count(const struct NtlabCode *code);

// Exact minimum distance, or a negative error code.
//
// # Safety
// `code` must be a live handle.
int64_t ntlab_code_min_distance(const struct NtlabCode *code);

// Number of codewords of the given weight, or a negative error code.
//
// # Safety
// `code` must be a live handle.
int64_t ntlab_code_weight_count(const struct NtlabCode *code, int weight);

// Covering radius, or a negative error code.
//
// # Safety
// `code` must be a live handle.
int64_t ntlab_code_covering_radius(const struct NtlabCode *code);

// Read a permutation-group file (`PERM` format). Returns null on failure.
//
// # Safety
// `path` must be a valid NUL-terminated string.
struct NtlabGroup *ntlab_group_read(const char *path);

// # Safety
// `group` must come from this library and not already be freed.
void ntlab_group_free(struct NtlabGroup *group);

// Number of points the group acts on.
//
// # Safety
// `group` must be a live handle.
int ntlab_group_degree(const struct NtlabGroup *group);

// Group order as a decimal string; free with `ntlab_string_free`.
//
// # Safety
// `group` must be a live handle.
char *ntlab_group_order(const struct NtlabGroup *group);

// 1 when the group is 2-homogeneous on its points, 0 otherwise.
//
// # Safety
// `group` must be a live handle.
int ntlab_group_is_2_homogeneous(const struct NtlabGroup *group);

// 1 when the group is 2-transitive on its points, 0 otherwise.
//
// # Safety
// `group` must be a live handle.
int ntlab_group_is_2_transitive(const struct NtlabGroup *group);

// Certify 2-neighbour-transitivity. With `use_oracle` nonzero the
// brute-force orbit oracle must agree with the criterion (linear codes) or
// is used alone (word sets). Returns 1 for pass, 0 for fail, a negative
// error code on failure to decide.
//
// # Safety
// Both handles must be live.
int ntlab_check_2nt(const struct NtlabCode *code, const struct NtlabGroup *group, int use_oracle);

// Release a string returned by this library.
//
// # Safety
// `s` must come from `ntlab_group_order` (or another string-returning
// function here) and not already be freed.
void ntlab_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NTLAB_H */
