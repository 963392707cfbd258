/* Copyright 2026 The majq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* majq C API.
 *
 * All functions return a majq_status; MAJQ_OK means the out-parameters are
 * valid. On failure the out-parameters are untouched and a human-readable
 * message is available from majq_last_error() until the next majq call on
 * the same thread.
 *
 * Structured inputs and outputs travel as UTF-8 JSON strings:
 *   complex matrix  array of rows, each entry an [re, im] pair
 *                   (bare numbers are accepted on input as re-only)
 *   real matrix     array of rows of bare numbers
 *   real vector     flat array of bare numbers
 *   channel         { "dim": n, "kraus": [ matrix, ... ] }
 *   choi            { "dim": n, "choi": matrix }
 *
 * Strings returned through char** out-parameters are heap-allocated; release
 * them with majq_string_free. Handles are released with their matching
 * *_free; passing NULL to any *_free is a no-op.
 *
 * Boolean results are int out-parameters (0/1) so that a false predicate is
 * distinguishable from an error: majorizes on a non-majorizing pair is
 * MAJQ_OK with *result = 0, not an error status.
 */

#ifndef MAJQ_MAJQ_H_
#define MAJQ_MAJQ_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum majq_status {
  MAJQ_OK = 0,
  MAJQ_ERR_INVALID_ARGUMENT,
  MAJQ_ERR_NON_SQUARE,
  MAJQ_ERR_NON_HERMITIAN,
  MAJQ_ERR_NO_CONVERGENCE,
  MAJQ_ERR_BAD_SPECTRUM,
  MAJQ_ERR_LENGTH_MISMATCH,
  MAJQ_ERR_NOT_MAJORIZED,
  MAJQ_ERR_NOT_BISTOCHASTIC,
  MAJQ_ERR_NO_PERFECT_MATCHING,
  MAJQ_ERR_DIMENSION_MISMATCH,
  MAJQ_ERR_NOT_CP,
  MAJQ_ERR_NOT_TP,
  MAJQ_ERR_INVALID_STATE,
  MAJQ_ERR_NOT_UNITARY,
  MAJQ_ERR_LAMBDA_OUT_OF_RANGE,
  MAJQ_ERR_BAD_DIMENSION,
  MAJQ_ERR_SPECTRUM_DEGENERATE,
  MAJQ_ERR_NOT_UNITAL,
  MAJQ_ERR_UNKNOWN
} majq_status;

typedef enum majq_family {
  MAJQ_FAMILY_UNITARY = 0,
  MAJQ_FAMILY_TRANSPOSE = 1
} majq_family;

typedef struct majq_matrix majq_matrix;    /* dense complex matrix */
typedef struct majq_channel majq_channel;  /* Kraus-form quantum channel */

const char* majq_version(void);
const char* majq_status_name(majq_status status);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next majq call on the thread. */
const char* majq_last_error(void);

void majq_string_free(char* s);

/* ---- matrices ---------------------------------------------------------- */

majq_status majq_matrix_parse(const char* json, majq_matrix** out);
/* entries: row-major, length 2*rows*cols as (re, im) pairs. */
majq_status majq_matrix_create(size_t rows, size_t cols,
                               const double* entries, majq_matrix** out);
void majq_matrix_free(majq_matrix* m);
majq_status majq_matrix_to_json(const majq_matrix* m, char** out_json);
majq_status majq_matrix_rows(const majq_matrix* m, size_t* out);
majq_status majq_matrix_cols(const majq_matrix* m, size_t* out);

/* Descending eigenvalues of a Hermitian matrix; out_eigenvalues must hold
 * majq_matrix_rows(m) doubles. */
majq_status majq_hermitian_eigenvalues(const majq_matrix* m,
                                       double* out_eigenvalues);

majq_status majq_random_haar_unitary(size_t n, uint64_t seed,
                                     majq_matrix** out);
/* spectrum may be NULL: the spectrum is then drawn uniformly from the
 * probability simplex. */
majq_status majq_random_density(size_t n, const double* spectrum,
                                size_t spectrum_len, uint64_t seed,
                                majq_matrix** out);

/* ---- vector majorization ----------------------------------------------- */

/* tol <= 0 selects the built-in default for every tolerance parameter. */
majq_status majq_majorizes_vec(const char* u_json, const char* v_json,
                               double tol, int* out_result);
/* Bistochastic B with B v = u, as real-matrix JSON. Fails with
 * MAJQ_ERR_NOT_MAJORIZED when u does not majorize-from v. */
majq_status majq_hlp_witness(const char* u_json, const char* v_json,
                             char** out_json);
majq_status majq_is_bistochastic(const char* b_json, double tol,
                                 int* out_result);
/* { "terms": [ { "weight": w, "permutation": [images...] }, ... ] } */
majq_status majq_birkhoff(const char* b_json, double tol, char** out_json);
/* { "tag": "trace-form"|"scaled-permutation"|"other", ... } */
majq_status majq_classify_vector_map(const char* t_json, double tol,
                                     char** out_json);

/* ---- operator majorization --------------------------------------------- */

majq_status majq_majorizes_op(const majq_matrix* a, const majq_matrix* b,
                              double tol, int* out_result);
/* { "terms": [ { "weight": w, "unitary": matrix }, ... ] } */
majq_status majq_mixed_unitary_witness(const majq_matrix* a,
                                       const majq_matrix* b, char** out_json);

/* ---- channels ----------------------------------------------------------- */

majq_status majq_channel_parse(const char* json, majq_channel** out);
void majq_channel_free(majq_channel* phi);
majq_status majq_channel_to_json(const majq_channel* phi, char** out_json);
majq_status majq_channel_dim(const majq_channel* phi, size_t* out);
majq_status majq_channel_apply(const majq_channel* phi, const majq_matrix* rho,
                               majq_matrix** out);
/* Choi document { "dim": n, "choi": matrix }. */
majq_status majq_channel_choi(const majq_channel* phi, char** out_json);

majq_status majq_lambda_range(majq_family kind, size_t n, double* out_lo,
                              double* out_hi);
majq_status majq_make_constant(const majq_matrix* omega, majq_channel** out);
majq_status majq_make_dep_unitary(double lambda, const majq_matrix* unitary,
                                  majq_channel** out);
majq_status majq_make_dep_transpose(double lambda, const majq_matrix* unitary,
                                    majq_channel** out);
majq_status majq_random_unital_channel(size_t n, size_t kraus_count,
                                       uint64_t seed, majq_channel** out);

/* choi_json is a choi document. out_min_eigenvalue may be NULL. */
majq_status majq_choi_is_cp(const char* choi_json, double tol, int* out_result,
                            double* out_min_eigenvalue);
majq_status majq_kraus_from_choi(const char* choi_json, double tol,
                                 majq_channel** out);
/* { "tag": "constant"|"dep-unitary"|"dep-transpose"|"other", ... } */
majq_status majq_classify_channel(const majq_channel* phi, double tol,
                                  char** out_json);

/* ---- property engine ---------------------------------------------------- */

/* rho must be a valid density matrix; result is in bits. */
majq_status majq_von_neumann_entropy(const majq_matrix* rho, double* out);

/* All reports: { "trials", "failures", "seed", "elapsed_s",
 *                "counterexample": {...} | null }. */
majq_status majq_test_preservation(const majq_channel* phi, uint64_t trials,
                                   uint64_t seed, char** out_json);
majq_status majq_test_li(size_t n, uint64_t trials, uint64_t seed,
                         char** out_json);
majq_status majq_test_orbit(const majq_channel* phi, const majq_matrix* rho0,
                            uint64_t trials, uint64_t seed, char** out_json);
/* { "dim", "channel_samples", "trials_per_channel", "seed", "elapsed_s",
 *   "rows": [ { "id", "construction", "preserved", "failures", "class",
 *               "lambda", "residual" }, ... ] } */
majq_status majq_explore_conjecture(size_t d, uint64_t channel_samples,
                                    uint64_t trials_per_channel, uint64_t seed,
                                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* MAJQ_MAJQ_H_ */
