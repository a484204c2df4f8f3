#ifndef LOOPSYM_H
#define LOOPSYM_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_POINTER = 1,
  LS_STATUS_INVALID_ARGUMENT = 2,
  LS_STATUS_PARSE = 3,
  LS_STATUS_DIVIDE_BY_ZERO = 4,
  LS_STATUS_HYPOTHESIS_NOT_MET = 5,
  LS_STATUS_INTERNAL = 6,
} LsStatus;

/**
 * Opaque polynomial handle.
 */
typedef struct LsPoly LsPoly;

/**
 * Opaque rational function handle.
 */
typedef struct LsRatFn LsRatFn;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failing call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *ls_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void ls_string_free(char *s);

/**
 * # Safety
 * `p` must be NULL or a handle returned by this library and not yet freed.
 */
void ls_poly_free(struct LsPoly *p);

/**
 * # Safety
 * `f` must be NULL or a handle returned by this library and not yet freed.
 */
void ls_ratfn_free(struct LsRatFn *f);

/**
 * `e_k^(r)` over `flows[0..flows_len]`, or over all flows when `flows` is NULL.
 *
 * # Safety
 * `flows` must be NULL or point to `flows_len` readable values; `out` must be writable.
 */
enum LsStatus ls_loop_e(size_t m,
                        size_t n,
                        size_t k,
                        int64_t r,
                        const uint32_t *flows,
                        size_t flows_len,
                        struct LsPoly **out);

/**
 * `h_k^(r)` over `flows[0..flows_len]`, or over all flows when `flows` is NULL.
 *
 * # Safety
 * As for `ls_loop_e`.
 */
enum LsStatus ls_loop_h(size_t m,
                        size_t n,
                        size_t k,
                        int64_t r,
                        const uint32_t *flows,
                        size_t flows_len,
                        struct LsPoly **out);

/**
 * `p_k`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LsStatus ls_power_sum(size_t m, size_t n, size_t k, struct LsPoly **out);

/**
 * `kappa^(r)` for flows `x != y`.
 *
 * # Safety
 * `out` must be writable.
 */
enum LsStatus ls_kappa(size_t m, size_t n, int64_t r, size_t x, size_t y, struct LsPoly **out);

/**
 * `s_lambda^(r)` as a tableau sum, `lambda = parts[0..len]`.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be NULL with `len == 0`); `out` must be writable.
 */
enum LsStatus ls_loop_schur(size_t m,
                            size_t n,
                            const uint32_t *parts,
                            size_t len,
                            int64_t r,
                            struct LsPoly **out);

/**
 * `s_lambda^(r)` as a Jacobi-Trudi determinant.
 *
 * # Safety
 * As for `ls_loop_schur`.
 */
enum LsStatus ls_jacobi_trudi(size_t m,
                              size_t n,
                              const uint32_t *parts,
                              size_t len,
                              int64_t r,
                              struct LsPoly **out);

/**
 * The alternant `a_alpha^(r)`, `alpha = alpha[0..len]` with `len == m`.
 *
 * # Safety
 * `alpha` must point to `len` readable values; `out` must be writable.
 */
enum LsStatus ls_alternant(size_t m,
                           size_t n,
                           const uint32_t *alpha,
                           size_t len,
                           int64_t r,
                           struct LsRatFn **out);

/**
 * Parse a polynomial from the JSON wire format.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LsStatus ls_poly_from_json(const char *json, struct LsPoly **out);

/**
 * Parse a rational function (`{"num":..,"den":..}`) from JSON.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum LsStatus ls_ratfn_from_json(const char *json, struct LsRatFn **out);

/**
 * JSON wire form; NULL if `p` is NULL. Free with `ls_string_free`.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
char *ls_poly_to_json(const struct LsPoly *p);

/**
 * Canonical text form; NULL if `p` is NULL. Free with `ls_string_free`.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
char *ls_poly_to_string(const struct LsPoly *p);

/**
 * JSON wire form; NULL if `f` is NULL. Free with `ls_string_free`.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
char *ls_ratfn_to_json(const struct LsRatFn *f);

/**
 * Text form `(num) / (den)`; NULL if `f` is NULL. Free with `ls_string_free`.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
char *ls_ratfn_to_string(const struct LsRatFn *f);

/**
 * Wrap a polynomial as a rational function (the polynomial is not consumed).
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum LsStatus ls_ratfn_from_poly(const struct LsPoly *p, struct LsRatFn **out);

/**
 * Exact equality of two polynomials.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum LsStatus ls_poly_equal(const struct LsPoly *a, const struct LsPoly *b, bool *out);

/**
 * Equality of two rational functions by cross-multiplication.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum LsStatus ls_ratfn_equal(const struct LsRatFn *a, const struct LsRatFn *b, bool *out);

/**
 * Apply `s_{word[0]} ... s_{word[len-1]}` to `f`.
 *
 * # Safety
 * `f` must be a live handle, `word` must point to `len` readable values,
 * and `out` must be writable.
 */
enum LsStatus ls_apply_word(const struct LsRatFn *f,
                            const uint32_t *word,
                            size_t len,
                            struct LsRatFn **out);

/**
 * Check `s_lambda^{(r-m+1)} a_delta^(r) = a_{lambda+delta}^(r)`.
 *
 * # Safety
 * `parts` must point to `len` readable values (or be NULL with `len == 0`);
 * `holds` must be writable.
 */
enum LsStatus ls_verify_roa(size_t m,
                            size_t n,
                            const uint32_t *parts,
                            size_t len,
                            int64_t r,
                            bool *holds);

/**
 * Check the loop Murnaghan-Nakayama rule for `p_k s_lambda^(r)`. Returns
 * `HypothesisNotMet` when `m < l(lambda) + k n` unless `force` is set.
 *
 * # Safety
 * As for `ls_verify_roa`.
 */
enum LsStatus ls_verify_mn(size_t m,
                           size_t n,
                           const uint32_t *parts,
                           size_t len,
                           size_t k,
                           int64_t r,
                           bool force,
                           bool *holds);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LOOPSYM_H */
