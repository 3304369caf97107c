#ifndef G3_H
#define G3_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible call.
 */
typedef enum G3Status {
  G3_STATUS_OK = 0,
  G3_STATUS_NULL_POINTER = 1,
  G3_STATUS_INVALID_ARGUMENT = 2,
  G3_STATUS_SYNTAX = 3,
  G3_STATUS_UNKNOWN_SYMBOL = 4,
  G3_STATUS_NON_INVERTIBLE = 5,
  G3_STATUS_NO_CONVERGENCE = 6,
  G3_STATUS_GRADE_OUT_OF_RANGE = 7,
  G3_STATUS_NOT_UNIT = 8,
  G3_STATUS_ZERO_ALPHA0 = 9,
  G3_STATUS_ZERO_SPINOR = 10,
  G3_STATUS_SOUTH_POLE = 11,
  G3_STATUS_NOT_NORMALIZED = 12,
  G3_STATUS_NOT_NULL = 13,
  G3_STATUS_DEGENERATE_OBSERVABLE = 14,
  G3_STATUS_NOT_TRANSVERSE = 15,
  G3_STATUS_CONSTRAINT_VIOLATED = 16,
  G3_STATUS_OUT_OF_RANGE = 17,
  G3_STATUS_PANIC = 99,
} G3Status;

/**
 * Parsed expression handle.
 */
typedef struct G3Expr G3Expr;

/**
 * Evolution trajectory handle.
 */
typedef struct G3Trajectory G3Trajectory;

/**
 * Coefficients over `[1, e1, e2, e3, e23, e13, e12, e123]`.
 */
typedef struct G3Multivector {
  double c[8];
} G3Multivector;

typedef struct G3Complex {
  double re;
  double im;
} G3Complex;

/**
 * Row-major 2×2 complex matrix.
 */
typedef struct G3Matrix2 {
  struct G3Complex m[4];
} G3Matrix2;

/**
 * The Pauli column `(a0, a1)`.
 */
typedef struct G3Ket {
  struct G3Complex a0;
  struct G3Complex a1;
} G3Ket;

typedef struct G3Vector3 {
  double x;
  double y;
  double z;
} G3Vector3;

/**
 * One row of an evolution trajectory. `has_flavor` is 0 when the
 * Hamiltonian is not transverse to e3, in which case `p_e` and `p_mu` are NaN.
 */
typedef struct G3Sample {
  double t;
  struct G3Ket ket;
  struct G3Vector3 a_hat;
  int32_t has_flavor;
  double p_e;
  double p_mu;
} G3Sample;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *g3_last_error(void);

/**
 * Geometric product `a b`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_mul(const struct G3Multivector *a,
                     const struct G3Multivector *b,
                     struct G3Multivector *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_add(const struct G3Multivector *a,
                     const struct G3Multivector *b,
                     struct G3Multivector *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_reverse(const struct G3Multivector *a, struct G3Multivector *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_inverse(const struct G3Multivector *a, struct G3Multivector *out);

/**
 * Exponential accurate to `tol`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_exp(const struct G3Multivector *a, double tol, struct G3Multivector *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_to_matrix(const struct G3Multivector *a, struct G3Matrix2 *out);

/**
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_from_matrix(const struct G3Matrix2 *m, struct G3Multivector *out);

/**
 * Ket as the ideal element `sqrt2 (a0 + a1 e1) u+`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_ket_embed(const struct G3Ket *k, struct G3Multivector *out);

/**
 * Point on the unit sphere for a non-zero ket.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_ket_a_hat(const struct G3Ket *k, struct G3Vector3 *out);

/**
 * Canonical parameters `rho, theta, phi, omega` of a non-zero ket.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_ket_canonical(const struct G3Ket *k,
                               double *out_params,
                               struct G3Vector3 *out_m_hat);

/**
 * `z = (a1 + i a2) / (1 + a3)` for a unit vector other than `-e3`.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_inverse_stereographic(const struct G3Vector3 *a_hat, struct G3Complex *out);

/**
 * `|<a|b>|^2` for normalized kets.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_transition_probability(const struct G3Ket *a, const struct G3Ket *b, double *out);

/**
 * Null vector components `z1, z2, z3` written to `out[0..3]`.
 *
 * # Safety
 * `k` must be valid and `out` must point to three writable `G3Complex`.
 */
enum G3Status g3_cartan_null(const struct G3Ket *k, struct G3Complex *out);

/**
 * One of the two spinors `±k` with null vector `z[0..3]`; the other is its negative.
 *
 * # Safety
 * `z` must point to three readable `G3Complex`; `out` must be valid.
 */
enum G3Status g3_cartan_inverse(const struct G3Complex *z, struct G3Ket *out);

/**
 * Spinor operator `psi` of a ket.
 *
 * # Safety
 * All pointers must be valid.
 */
enum G3Status g3_spinor_operator(const struct G3Ket *k, struct G3Multivector *out);

/**
 * Parses a NUL-terminated UTF-8 expression into a new handle.
 *
 * # Safety
 * `src` must be a valid C string and `out` valid for writes.
 */
enum G3Status g3_expr_parse(const char *src, struct G3Expr **out);

/**
 * # Safety
 * `e` must come from [`g3_expr_parse`] and `out` must be valid.
 */
enum G3Status g3_expr_eval(const struct G3Expr *e, struct G3Multivector *out);

/**
 * Releases a handle from [`g3_expr_parse`]. NULL is ignored.
 *
 * # Safety
 * `e` must be NULL or an unreleased handle.
 */
void g3_expr_free(struct G3Expr *e);

/**
 * Evolves `|0>` under `h[0] + h[1] e1 + h[2] e2 + h[3] e3` on `steps` equally
 * spaced times in `[0, t_max]`.
 *
 * # Safety
 * `h` must point to four readable doubles and `out` must be valid for writes.
 */
enum G3Status g3_evolve(const double *h,
                        double hbar,
                        double t_max,
                        size_t steps,
                        struct G3Trajectory **out);

/**
 * Number of rows, or 0 for NULL.
 *
 * # Safety
 * `t` must be NULL or a live handle.
 */
size_t g3_trajectory_len(const struct G3Trajectory *t);

/**
 * # Safety
 * `t` must be a live handle and `out` valid for writes.
 */
enum G3Status g3_trajectory_get(const struct G3Trajectory *t, size_t index, struct G3Sample *out);

/**
 * Releases a handle from [`g3_evolve`]. NULL is ignored.
 *
 * # Safety
 * `t` must be NULL or an unreleased handle.
 */
void g3_trajectory_free(struct G3Trajectory *t);

/**
 * Runs the property suites; writes 1 to `passed` when every suite passes.
 *
 * # Safety
 * `passed` must be valid for writes.
 */
enum G3Status g3_verify(uint64_t seed, size_t trials, int32_t *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* G3_H */
