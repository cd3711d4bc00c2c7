#ifndef BICOMPLEX_H
#define BICOMPLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Status codes returned by every fallible function.
 */
typedef enum BcStatus {
  BC_STATUS_OK = 0,
  BC_STATUS_NULL_POINTER = 1,
  BC_STATUS_INVALID_ARGUMENT = 2,
  BC_STATUS_SHAPE_MISMATCH = 3,
  BC_STATUS_NOT_SQUARE = 4,
  BC_STATUS_ZERO_DIVISOR = 5,
  BC_STATUS_SINGULAR = 6,
  BC_STATUS_NOT_POSITIVE = 7,
  BC_STATUS_NOT_PRODUCT = 8,
  BC_STATUS_ZERO_TRACE = 9,
  BC_STATUS_NOT_CP = 10,
  BC_STATUS_BAD_RANK = 11,
  BC_STATUS_BAD_FACTORIZATION = 12,
  BC_STATUS_PARSE_ERROR = 13,
  BC_STATUS_IO_ERROR = 14,
  BC_STATUS_PANIC = 15,
} BcStatus;

typedef enum BcRepr {
  BC_REPR_IDEMPOTENT = 0,
  BC_REPR_CARTESIAN = 1,
} BcRepr;

typedef enum BcTensorRoute {
  BC_TENSOR_ROUTE_IDEMPOTENT = 0,
  BC_TENSOR_ROUTE_CARTESIAN = 1,
} BcTensorRoute;

typedef enum BcPositivityMethod {
  BC_POSITIVITY_METHOD_COMPONENTS = 0,
  BC_POSITIVITY_METHOD_CARTESIAN = 1,
  BC_POSITIVITY_METHOD_EIGEN = 2,
} BcPositivityMethod;

typedef enum BcInverseMethod {
  BC_INVERSE_METHOD_COMPONENTWISE = 0,
  BC_INVERSE_METHOD_CARTESIAN = 1,
} BcInverseMethod;

/*
 Opaque list of Kraus operators.
 */
typedef struct BcKrausSet BcKrausSet;

/*
 Opaque linear map between matrix spaces.
 */
typedef struct BcMap BcMap;

/*
 Opaque bicomplex matrix.
 */
typedef struct BcMatrix BcMatrix;

/*
 Multiplication counts of `bc_dsp_apply`, per idempotent component.
 */
typedef struct BcOpCounts {
  uint64_t factored_mults[2];
  uint64_t direct_mults[2];
} BcOpCounts;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message describing the last failure on this thread; empty after a success.
 The pointer stays valid until the next call into this library.
 */
const char *bc_last_error(void);

/*
 Frees a string returned by this library.

 `s` must come from this library and not have been freed.
 */
void bc_string_free(char *s);

/*
 Cartesian `[x1, x2, x3, x4]` to idempotent `[Re λ1, Im λ1, Re λ2, Im λ2]`.

 Both pointers must reference four doubles.
 */
enum BcStatus bc_scalar_split(const double *cartesian, double *idempotent);

/*
 Idempotent `[Re λ1, Im λ1, Re λ2, Im λ2]` to cartesian `[x1, x2, x3, x4]`.

 Both pointers must reference four doubles.
 */
enum BcStatus bc_scalar_join(const double *idempotent, double *cartesian);

/*
 Builds a `rows x cols` matrix from `4 * rows * cols` doubles.

 `data` must reference `4 * rows * cols` doubles; `out` must be writable.
 */
enum BcStatus bc_matrix_new(size_t rows,
                            size_t cols,
                            const double *data,
                            enum BcRepr representation,
                            struct BcMatrix **out);

/*
 Identity matrix of size `n`.

 `out` must be writable.
 */
enum BcStatus bc_matrix_identity(size_t n, struct BcMatrix **out);

/*
 Parses a matrix from its JSON text.

 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum BcStatus bc_matrix_from_json(const char *json, struct BcMatrix **out);

/*
 Serialises a matrix as JSON. Free the result with `bc_string_free`.

 `m` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_matrix_to_json(const struct BcMatrix *m, enum BcRepr representation, char **out);

/*
 Releases a matrix handle. Null is ignored.

 `m` must come from this library and not have been freed.
 */
void bc_matrix_free(struct BcMatrix *m);

/*
 Number of rows, or 0 for a null handle.

 `m` must be null or a live matrix handle.
 */
size_t bc_matrix_rows(const struct BcMatrix *m);

/*
 Number of columns, or 0 for a null handle.

 `m` must be null or a live matrix handle.
 */
size_t bc_matrix_cols(const struct BcMatrix *m);

/*
 Copies the entries into `data`, which must hold `len >= 4 * rows * cols`
 doubles.

 `m` must be a live matrix handle; `data` must reference `len` doubles.
 */
enum BcStatus bc_matrix_entries(const struct BcMatrix *m,
                                enum BcRepr representation,
                                double *data,
                                size_t len);

/*
 `a ⊗_j b`.

 `a`, `b` must be live matrix handles; `out` must be writable.
 */
enum BcStatus bc_tensor(const struct BcMatrix *a,
                        const struct BcMatrix *b,
                        enum BcTensorRoute route,
                        struct BcMatrix **out);

/*
 Product `a b`.

 `a`, `b` must be live matrix handles; `out` must be writable.
 */
enum BcStatus bc_matmul(const struct BcMatrix *a, const struct BcMatrix *b, struct BcMatrix **out);

/*
 Trace as an idempotent scalar `[Re λ1, Im λ1, Re λ2, Im λ2]`.

 `a` must be a live matrix handle; `out` must reference four doubles.
 */
enum BcStatus bc_trace(const struct BcMatrix *a, double *out);

/*
 Hyperbolic positivity test.

 `a` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_is_hyperbolic_positive(const struct BcMatrix *a,
                                        double tol,
                                        enum BcPositivityMethod method,
                                        bool *out);

/*
 State test: hyperbolic positive with unit trace.

 `a` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_is_state(const struct BcMatrix *a, double tol, bool *out);

/*
 Triangular factor: upper `U` with `A = U^{*t} U`, or lower `L` with
 `A = L^{*t} L` when `lower` is set.

 `a` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_cholesky(const struct BcMatrix *a, double tol, bool lower, struct BcMatrix **out);

/*
 Rank-one decomposition, returned as an `n x r` matrix whose columns are the
 vectors `a_i` with `A = Σ a_i a_i^{*t}`. A zero matrix yields `r = 0` and a
 null handle.

 `a` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_rank_one(const struct BcMatrix *a, double tol, struct BcMatrix **out);

/*
 Eigenvalues of both idempotent components as `[re, im]` pairs:
 `out[0..2n]` for the first component, `out[2n..4n]` for the second.

 `a` must be a live matrix handle; `out` must reference `len` doubles.
 */
enum BcStatus bc_eigenvalues(const struct BcMatrix *a, double *out, size_t len);

/*
 Matrix inverse.

 `a` must be a live matrix handle; `out` must be writable.
 */
enum BcStatus bc_inverse(const struct BcMatrix *a,
                         enum BcInverseMethod method,
                         struct BcMatrix **out);

/*
 Recovers `A (n x n)` and `B (m x m)` from `M = A ⊗_j B` with the gauge
 `Tr Bℓ = 1`. `residual`, if not null, receives the two component
 reconstruction residuals; on `NotProduct` it receives the offending one in
 `residual[0]`.

 `mat` must be a live matrix handle; `out_a`, `out_b` must be writable;
 `residual` must be null or reference two doubles.
 */
enum BcStatus bc_recover_factors(const struct BcMatrix *mat,
                                 size_t n,
                                 size_t m,
                                 double tol,
                                 struct BcMatrix **out_a,
                                 struct BcMatrix **out_b,
                                 double *residual);

/*
 Kraus set from `count` operators of equal shape. The matrices are copied.

 `operators` must reference `count` live matrix handles; `out` must be
 writable.
 */
enum BcStatus bc_kraus_new(const struct BcMatrix *const *operators,
                           size_t count,
                           struct BcKrausSet **out);

/*
 Releases a Kraus set. Null is ignored.

 `k` must come from this library and not have been freed.
 */
void bc_kraus_free(struct BcKrausSet *k);

/*
 Number of operators, or 0 for a null handle.

 `k` must be null or a live Kraus handle.
 */
size_t bc_kraus_len(const struct BcKrausSet *k);

/*
 Copy of operator `index`.

 `k` must be a live Kraus handle; `out` must be writable.
 */
enum BcStatus bc_kraus_get(const struct BcKrausSet *k, size_t index, struct BcMatrix **out);

/*
 The map `A ↦ Σ V A V^{*t}`.

 `k` must be a live Kraus handle; `out` must be writable.
 */
enum BcStatus bc_map_from_kraus(const struct BcKrausSet *k, struct BcMap **out);

/*
 Parses a map file: either a Kraus set or component unit images.

 `json` must be a NUL-terminated string; `out` must be writable.
 */
enum BcStatus bc_map_from_json(const char *json, struct BcMap **out);

/*
 Serialises a map as unit-image JSON. Free the result with `bc_string_free`.

 `map` must be a live map handle; `out` must be writable.
 */
enum BcStatus bc_map_to_json(const struct BcMap *map, char **out);

/*
 Serialises a Kraus set as JSON. Free the result with `bc_string_free`.

 `k` must be a live Kraus handle; `out` must be writable.
 */
enum BcStatus bc_kraus_to_json(const struct BcKrausSet *k, char **out);

/*
 Component-wise transpose map on `n x n` matrices.

 `out` must be writable.
 */
enum BcStatus bc_map_transpose(size_t n, struct BcMap **out);

/*
 Releases a map. Null is ignored.

 `map` must come from this library and not have been freed.
 */
void bc_map_free(struct BcMap *map);

/*
 Complete positivity test via the Choi matrix.

 `map` must be a live map handle; `out` must be writable.
 */
enum BcStatus bc_map_is_cp(const struct BcMap *map, double tol, bool *out);

/*
 Trace preservation test.

 `map` must be a live map handle; `out` must be writable.
 */
enum BcStatus bc_map_is_tp(const struct BcMap *map, double tol, bool *out);

/*
 `φ(a)`.

 `map`, `a` must be live handles; `out` must be writable.
 */
enum BcStatus bc_map_apply(const struct BcMap *map,
                           const struct BcMatrix *a,
                           struct BcMatrix **out);

/*
 Choi matrix `Σ E_jk ⊗ φ(E_jk)`.

 `map` must be a live map handle; `out` must be writable.
 */
enum BcStatus bc_map_choi(const struct BcMap *map, struct BcMatrix **out);

/*
 Tensor product of two maps.

 `a`, `b` must be live map handles; `out` must be writable.
 */
enum BcStatus bc_map_tensor(const struct BcMap *a, const struct BcMap *b, struct BcMap **out);

/*
 Kraus operators of a completely positive map.

 `map` must be a live map handle; `out` must be writable.
 */
enum BcStatus bc_map_kraus(const struct BcMap *map, double tol, struct BcKrausSet **out);

/*
 `(a ⊗_j b) x` through the factored algorithm. `x` is a column matrix.
 `counts`, if not null, receives the multiplication counts of the factored
 and the direct algorithm.

 `a`, `b`, `x` must be live matrix handles; `out` must be writable;
 `counts` must be null or writable.
 */
enum BcStatus bc_dsp_apply(const struct BcMatrix *a,
                           const struct BcMatrix *b,
                           const struct BcMatrix *x,
                           struct BcMatrix **out,
                           struct BcOpCounts *counts);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BICOMPLEX_H */
