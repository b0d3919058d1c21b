/* Copyright 2026 The Rubicon Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to librubicon: zero-free radii for perturbed binomial-basis
 * polynomials, a simultaneous root solver, exact inequality scans and the
 * Monte-Carlo falsification campaigns.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a rubicon_status; on failure the message is
 * available from rubicon_last_error() on the same thread until the next
 * call. Strings returned through char** are malloc()ed and must be released
 * with rubicon_string_free(). */

#ifndef RUBICON_RUBICON_H_
#define RUBICON_RUBICON_H_

#include <stddef.h>

#if defined(RUBICON_BUILDING_LIBRARY)
#define RUBICON_API __attribute__((visibility("default")))
#else
#define RUBICON_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rubicon_poly rubicon_poly;
typedef struct rubicon_roots rubicon_roots;

typedef enum {
  RUBICON_OK = 0,
  RUBICON_ERROR_INVALID_ARGUMENT = 1, /* malformed input or parameters */
  RUBICON_ERROR_DOMAIN = 2,           /* outside a mathematical domain */
  RUBICON_ERROR_FALSIFIED = 3,        /* a claimed property was refuted */
  RUBICON_ERROR_INTERNAL = 99
} rubicon_status;

typedef enum {
  RUBICON_BASIS_BINOMIAL = 0, /* f(z) = sum C(n,k) a_k z^k */
  RUBICON_BASIS_POWER = 1     /* f(z) = sum c_k z^k */
} rubicon_basis;

RUBICON_API const char* rubicon_version(void);
RUBICON_API const char* rubicon_last_error(void);
RUBICON_API void rubicon_string_free(char* s);

/* Polynomials. count = n + 1 coefficients, lowest degree first. */
RUBICON_API rubicon_status rubicon_poly_create(const double* re,
                                               const double* im, size_t count,
                                               rubicon_basis basis,
                                               rubicon_poly** out);
/* {"n": int, "basis": "binomial"|"power", "coeffs": [[re,im],...]} */
RUBICON_API rubicon_status rubicon_poly_from_json(const char* json,
                                                  rubicon_poly** out);
RUBICON_API rubicon_status rubicon_poly_to_json(const rubicon_poly* p,
                                                rubicon_basis basis,
                                                char** out);
RUBICON_API void rubicon_poly_free(rubicon_poly* p);

/* Nominal degree n, or -1 for a null handle. */
RUBICON_API int rubicon_poly_degree(const rubicon_poly* p);
/* Largest k with a_k != 0; -1 for the zero polynomial or a null handle. */
RUBICON_API int rubicon_poly_effective_degree(const rubicon_poly* p);
RUBICON_API rubicon_status rubicon_poly_coeff(const rubicon_poly* p, size_t k,
                                              rubicon_basis basis, double* re,
                                              double* im);
RUBICON_API rubicon_status rubicon_poly_evaluate(const rubicon_poly* p,
                                                 double re, double im,
                                                 double* out_re,
                                                 double* out_im);
/* z^n p(1/z). */
RUBICON_API rubicon_status rubicon_poly_reverse(const rubicon_poly* p,
                                                rubicon_poly** out);
/* Coefficient-wise binomial-basis product; the lower-degree factor is
 * zero-padded. */
RUBICON_API rubicon_status rubicon_poly_compose(const rubicon_poly* a,
                                                const rubicon_poly* b,
                                                rubicon_poly** out);

/* Roots. RUBICON_ERROR_DOMAIN for a constant polynomial. Non-convergence
 * is not an error; query rubicon_roots_converged(). */
RUBICON_API rubicon_status rubicon_roots_solve(const rubicon_poly* p,
                                               rubicon_roots** out);
RUBICON_API void rubicon_roots_free(rubicon_roots* r);
RUBICON_API size_t rubicon_roots_count(const rubicon_roots* r);
RUBICON_API int rubicon_roots_converged(const rubicon_roots* r);
RUBICON_API int rubicon_roots_iterations(const rubicon_roots* r);
RUBICON_API rubicon_status rubicon_roots_get(const rubicon_roots* r, size_t i,
                                             double* re, double* im,
                                             double* residual);
RUBICON_API rubicon_status rubicon_roots_min_modulus(const rubicon_roots* r,
                                                     double* out);

/* Best zero-free radius for R and a top-p perturbation with
 * |eps_k| <= eps_max. *applicable is 0 when no bound's hypotheses hold. */
RUBICON_API rubicon_status rubicon_bound(double R, int n, int p,
                                         double eps_max, double* radius,
                                         int* applicable);

/* Runs one command described by a config document
 *   {"command": "...", "seed": u64, "output": "...", "params": {k: "v"}}
 * with command one of bound, roots, compose, ineq, fuzz, sharpness.
 * *report receives the JSON report; *passed is 0 when the run found a
 * violation, a falsification or an undecided check. */
RUBICON_API rubicon_status rubicon_run(const char* config_json, char** report,
                                       int* passed);

#ifdef __cplusplus
}
#endif

#endif /* RUBICON_RUBICON_H_ */
