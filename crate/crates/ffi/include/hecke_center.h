#ifndef HECKE_CENTER_H
#define HECKE_CENTER_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_UTF8 = 2,
  HC_STATUS_INVALID_ARGUMENT = 3,
  HC_STATUS_PARSE = 4,
  HC_STATUS_ARITHMETIC = 5,
  HC_STATUS_TOO_LARGE = 6,
  HC_STATUS_NOT_CENTRAL = 7,
  HC_STATUS_VERIFICATION_FAILED = 8,
  HC_STATUS_INTERNAL = 9,
} HcStatus;

/**
 * Opaque element of the Hecke algebra.
 */
typedef struct HcElement HcElement;

/**
 * Opaque square or rectangular matrix over Q(q) with partition labels.
 */
typedef struct HcMatrix HcMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the most recent failure on this thread, or null.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *hc_last_error(void);

/**
 * Largest supported n.
 */
size_t hc_max_n(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hc_string_free(char *s);

/**
 * Transition matrix between two of the bases `m`, `e`, `h`, `p`, `s`.
 *
 * # Safety
 * `from` and `to` must be nul-terminated strings; `out` must be writable.
 */
enum HcStatus hc_transition_matrix(size_t n,
                                   const char *from,
                                   const char *to,
                                   struct HcMatrix **out);

/**
 * Character table of the `zeta` or `upsilon` family by `trace` or `ram`.
 *
 * # Safety
 * `family` and `method` must be nul-terminated strings; `out` must be writable.
 */
enum HcStatus hc_char_table(size_t n,
                            const char *family,
                            const char *method,
                            struct HcMatrix **out);

/**
 * Coordinates of a central family in the Gamma basis, one row per element.
 *
 * # Safety
 * `kind` must be a nul-terminated string; `out` must be writable.
 */
enum HcStatus hc_central_family(size_t n, const char *kind, struct HcMatrix **out);

/**
 * Specializes every entry at a rational value of q such as `2` or `-1/3`.
 *
 * # Safety
 * `m` must be a live matrix handle, `q` a nul-terminated string, `out` writable.
 */
enum HcStatus hc_matrix_evaluate(const struct HcMatrix *m, const char *q, struct HcMatrix **out);

/**
 * # Safety
 * `m` must be null or a live matrix handle.
 */
void hc_matrix_free(struct HcMatrix *m);

/**
 * Number of rows, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live matrix handle.
 */
size_t hc_matrix_rows(const struct HcMatrix *m);

/**
 * Number of columns, or 0 for a null handle.
 *
 * # Safety
 * `m` must be null or a live matrix handle.
 */
size_t hc_matrix_cols(const struct HcMatrix *m);

/**
 * Entry `(row, col)` as a canonical string, or in Q notation when `pretty`.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum HcStatus hc_matrix_entry(const struct HcMatrix *m,
                              size_t row,
                              size_t col,
                              bool pretty_form,
                              char **out);

/**
 * Row label `row` as a partition string such as `211`.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum HcStatus hc_matrix_row_label(const struct HcMatrix *m, size_t row, char **out);

/**
 * JSON document `{n, rows, cols, entries}`.
 *
 * # Safety
 * `m` must be a live matrix handle; `out` must be writable.
 */
enum HcStatus hc_matrix_to_json(const struct HcMatrix *m, bool pretty_form, char **out);

/**
 * Builds an element from the same spec grammar as the `element` command,
 * for example `zeta:22`, `word:1.2.1` or `family:n1:31`.
 *
 * # Safety
 * `spec` must be a nul-terminated string; `out` must be writable.
 */
enum HcStatus hc_element_new(size_t n, const char *spec, struct HcElement **out);

/**
 * # Safety
 * `e` must be null or a live element handle.
 */
void hc_element_free(struct HcElement *e);

/**
 * # Safety
 * `a` and `b` must be live element handles; `out` must be writable.
 */
enum HcStatus hc_element_add(const struct HcElement *a,
                             const struct HcElement *b,
                             struct HcElement **out);

/**
 * # Safety
 * `a` and `b` must be live element handles; `out` must be writable.
 */
enum HcStatus hc_element_mul(const struct HcElement *a,
                             const struct HcElement *b,
                             struct HcElement **out);

/**
 * Symmetric bilinear form `(a, b)` as a canonical string.
 *
 * # Safety
 * `a` and `b` must be live element handles; `out` must be writable.
 */
enum HcStatus hc_element_scalar_product(const struct HcElement *a,
                                        const struct HcElement *b,
                                        char **out);

/**
 * JSON map from one-line permutations to coefficients.
 *
 * # Safety
 * `e` must be a live element handle; `out` must be writable.
 */
enum HcStatus hc_element_to_json(const struct HcElement *e, bool pretty_form, char **out);

/**
 * Gamma coordinates of a central element as a JSON map from partitions
 * to coefficients. Fails with `NOT_CENTRAL` otherwise.
 *
 * # Safety
 * `e` must be a live element handle; `out` must be writable.
 */
enum HcStatus hc_element_gamma_json(const struct HcElement *e, char **out);

/**
 * Runs one verification and writes its JSON report. Returns
 * `VERIFICATION_FAILED` (with the report still written) when the check fails.
 *
 * # Safety
 * `theorem` must be a nul-terminated string; `out` must be writable.
 */
enum HcStatus hc_verify(const char *theorem, size_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HECKE_CENTER_H */
