/*
 * Copyright 2026 the cjmoment authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of libcjm: complex Jacobi matrices, their moment functionals,
 * and a constructive solver for the associated moment problem on the complex
 * plane.
 *
 * Conventions:
 *   - every object is an opaque handle created by the library and released
 *     with the matching *_free function;
 *   - complex data crosses the boundary as interleaved doubles re0, im0,
 *     re1, im1, ...;
 *   - functions return CJM_OK or an error code; cjm_last_error_message()
 *     describes the most recent failure on the calling thread, and
 *     cjm_last_error_index() carries the offending entry index (or -1);
 *   - strings returned through char** are owned by the caller and released
 *     with cjm_string_free.
 */

#ifndef CJM_H
#define CJM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CJM_BUILD_SHARED)
#    define CJM_API __declspec(dllexport)
#  else
#    define CJM_API __declspec(dllimport)
#  endif
#else
#  define CJM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cjm_jacobi cjm_jacobi;    /* finite window of a complex Jacobi matrix */
typedef struct cjm_moments cjm_moments;  /* power moments s_0..s_K */
typedef struct cjm_measure cjm_measure;  /* atomic measure: atoms + weights */

typedef enum cjm_status {
  CJM_OK = 0,
  CJM_ERR_PARSE = 1,       /* malformed input file or string */
  CJM_ERR_VALIDATION = 2,  /* zero off-diagonal, bad normalization, size contract */
  CJM_ERR_BREAKDOWN = 3,   /* vanishing self-pairing during reconstruction */
  CJM_ERR_TOLERANCE = 4,   /* a verification ran and exceeded its tolerance */
  CJM_ERR_NUMERIC = 5,     /* convergence or internal consistency failure */
  CJM_ERR_ARGUMENT = 6     /* null pointers, out-of-range parameters */
} cjm_status;

CJM_API const char* cjm_version(void);
CJM_API const char* cjm_status_name(cjm_status status);

/* Thread-local details of the most recent error. */
CJM_API const char* cjm_last_error_message(void);
CJM_API const char* cjm_last_error_code_name(void);
CJM_API long cjm_last_error_index(void);

CJM_API void cjm_string_free(char* text);

/* ---- Jacobi windows ---- */

/* a: n_a interleaved complex off-diagonal entries, b: n_b = n_a + 1 diagonal
 * entries. Validation rejects zero off-diagonals and empty windows. */
CJM_API cjm_status cjm_jacobi_create(const double* a, size_t n_a, const double* b, size_t n_b,
                                     cjm_jacobi** out);
CJM_API cjm_status cjm_jacobi_parse_json(const char* text, cjm_jacobi** out);
CJM_API cjm_status cjm_jacobi_to_json(const cjm_jacobi* spec, char** out);
CJM_API void cjm_jacobi_free(cjm_jacobi* spec);

CJM_API size_t cjm_jacobi_window(const cjm_jacobi* spec);
/* a must hold 2*(window-1) doubles, b 2*window. */
CJM_API cjm_status cjm_jacobi_entries(const cjm_jacobi* spec, double* a, double* b);

/* Row-sum upper bound for the operator norm of the repeated-tail extension. */
CJM_API cjm_status cjm_jacobi_norm_bound(const cjm_jacobi* spec, double* out);

/* Moments s_n = (J^n e_0, e_0) for n <= K; needs K <= window - 1. `exact`
 * runs the band recurrence in rational arithmetic before rounding the
 * result. */
CJM_API cjm_status cjm_jacobi_moments(const cjm_jacobi* spec, size_t K, int exact,
                                      cjm_moments** out);

/* Eigenvalues of the n x n leading section as CSV text ("re,im" header). */
CJM_API cjm_status cjm_jacobi_spectrum_csv(const cjm_jacobi* spec, size_t n, char** out);

/* Intertwining residual and Gram-injectivity evidence at degree d, as a JSON
 * report {"intertwining_residual":..., "gram_min_sv":..., "degree":...}. */
CJM_API cjm_status cjm_jacobi_similarity_report(const cjm_jacobi* spec, size_t d, int exact,
                                                char** out);

/* ---- moment sequences ---- */

/* s: interleaved complex moments s_0..s_{count-1}; s_0 must equal 1. */
CJM_API cjm_status cjm_moments_create(const double* s, size_t count, cjm_moments** out);
CJM_API cjm_status cjm_moments_parse_json(const char* text, cjm_moments** out);
CJM_API cjm_status cjm_moments_to_json(const cjm_moments* s, char** out);
CJM_API void cjm_moments_free(cjm_moments* s);

CJM_API size_t cjm_moments_count(const cjm_moments* s);
CJM_API cjm_status cjm_moments_values(const cjm_moments* s, double* out);
CJM_API cjm_status cjm_moments_growth_radius(const cjm_moments* s, double* out);

/* Formal orthogonalization back to a Jacobi window of size n. `signs` is
 * either "principal" or a comma-separated +1/-1 list; `exact` demands exact
 * rational square roots. */
CJM_API cjm_status cjm_moments_reconstruct(const cjm_moments* s, size_t n, const char* signs,
                                           int exact, cjm_jacobi** out);

/* Constructive solver for the moment problem: atoms on the circle of radius
 * tau*rho reproducing s_0..s_K. Pass tau <= 0 for the default choice
 * 1.25 * max(growth radius, 1e-3). */
CJM_API cjm_status cjm_moments_solve(const cjm_moments* s, size_t K, double tau,
                                     cjm_measure** out);

/* ---- atomic measures ---- */

CJM_API cjm_status cjm_measure_parse_json(const char* text, cjm_measure** out);
CJM_API cjm_status cjm_measure_to_json(const cjm_measure* mu, char** out);
CJM_API void cjm_measure_free(cjm_measure* mu);

CJM_API size_t cjm_measure_atom_count(const cjm_measure* mu);
/* z: 2*count doubles, w: count doubles. */
CJM_API cjm_status cjm_measure_atoms(const cjm_measure* mu, double* z, double* w);

CJM_API cjm_status cjm_measure_moments(const cjm_measure* mu, size_t K, cjm_moments** out);

/* Compares the measure's moments against s for n <= K at the given
 * tolerance; report is a JSON object with per-n deviations. Returns
 * CJM_ERR_TOLERANCE when the comparison fails (the report is still
 * produced). */
CJM_API cjm_status cjm_measure_verify(const cjm_measure* mu, const cjm_moments* s, size_t K,
                                      double tol, char** report);

#ifdef __cplusplus
}
#endif

#endif /* CJM_H */
