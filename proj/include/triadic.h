/* SPDX-License-Identifier: MIT
 *
 * C interface to the triadic local-integral library.
 *
 * Conventions:
 *   - Every function that can fail takes a tq_ctx* and returns a tq_status.
 *     TQ_OK means success; anything else is an error and the context stores
 *     a human-readable message retrievable with tq_last_error().
 *   - Structured inputs and outputs are JSON text.  Exact rational numbers
 *     travel as strings ("3/4", "-2"); no floating point is involved.
 *   - Output strings (char** parameters) are allocated by the library and
 *     must be released with tq_string_free().
 *   - A tq_ctx is NOT thread-safe; create one per thread.  Distinct contexts
 *     may be used concurrently.
 */
#ifndef TRIADIC_H
#define TRIADIC_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes.  Values mirror the library's internal error taxonomy and are
 * stable across releases. */
typedef enum tq_status {
  TQ_OK = 0,
  TQ_INVALID_ARGUMENT = 1,  /* malformed value outside a dedicated class   */
  TQ_UNSUPPORTED_PRIME = 2, /* p even, not prime, or out of scope          */
  TQ_PRECISION_EXCEEDED = 3,/* character depth K too small for a request   */
  TQ_NOT_IN_DOMAIN = 4,     /* point off the equal-value locus / V'        */
  TQ_DEPTH_MISMATCH = 5,    /* cyclotomic values from different contexts   */
  TQ_NOT_SPECIAL_LINEAR = 6,/* 2x2 slot with determinant != 1              */
  TQ_NOT_SYMPLECTIC = 7,    /* 6x6 matrix failing g J g^T = J              */
  TQ_NOT_SIMILITUDE = 8,    /* matrix not scaling the form                 */
  TQ_SINGULAR_MATRIX = 9,   /* inversion of a singular matrix              */
  TQ_UNSUPPORTED_FORM = 10, /* Gram matrix not unimodular at p             */
  TQ_RESOURCE_BOUND = 11,   /* enumeration beyond the built-in budget      */
  TQ_UNMATCHED_ORBIT = 12,  /* orbit element missing from the census       */
  TQ_PARSE = 13,            /* malformed JSON or number syntax             */
  TQ_INTERNAL = 14          /* broken internal invariant (library bug)     */
} tq_status;

/* Opaque handle holding per-call error state. */
typedef struct tq_ctx tq_ctx;

/* Create / destroy a context.  tq_ctx_new returns NULL only on allocation
 * failure.  tq_ctx_free(NULL) is a no-op. */
tq_ctx* tq_ctx_new(void);
void tq_ctx_free(tq_ctx* ctx);

/* Message for the most recent failing call on this context.  The pointer is
 * owned by the context and valid until the next call that uses it.  Returns
 * an empty string if no call has failed. */
const char* tq_last_error(const tq_ctx* ctx);

/* Release a string returned through a char** output parameter. */
void tq_string_free(char* s);

/* Library version, static storage. */
const char* tq_version(void);

/* ------------------------------------------------------------------------ *
 * Scalar computations                                                       *
 * ------------------------------------------------------------------------ */

/* Hilbert symbol (a, b)_p for nonzero rationals and an odd prime p.
 * a, b: rational strings.  *out receives -1 or +1. */
tq_status tq_hilbert(tq_ctx* ctx, const char* a, const char* b, long p,
                     int* out);

/* Quadratic character chi_Q(a) = (a, (-1)^{d/2} det Q)_p of the space given
 * by `space_json` = {"gram": [[...row strings...], ...]}. */
tq_status tq_chi(tq_ctx* ctx, const char* space_json, const char* a, long p,
                 int* out);

/* ------------------------------------------------------------------------ *
 * Weil representation                                                       *
 * ------------------------------------------------------------------------ */

/* Apply the operator of a determinant-1 2x2 matrix to a Schwartz function.
 * Request:
 *   {"p": 3,                        odd prime
 *    "depth": 6,                    optional character depth K (default 6)
 *    "space": {"gram": [[..]]},     even-dimensional unimodular Gram matrix
 *    "g": [["a","b"],["c","d"]],    rational entries, det = 1
 *    "function": {...}}             optional; defaults to the unit-lattice
 *                                   indicator.  Accepted input form:
 *   {"window": {"m": M, "n": N}, "values": [{"coset": ["x1",...],
 *                                            "value": "rat"}, ...]}
 * Response: the transformed function in the same schema; values that are not
 * rational carry {"order": N, "coeffs": [...]} in the root-of-unity basis. */
tq_status tq_weil_apply(tq_ctx* ctx, const char* request_json,
                        char** out_json);

/* ------------------------------------------------------------------------ *
 * Symplectic machinery                                                      *
 * ------------------------------------------------------------------------ */

/* Plucker coordinates of the bottom three rows of a 6x6 symplectic matrix.
 * Request: {"g": [[...6x6 rational strings...]], "p": 3}  ("p" optional).
 * Response: {"coordinates": ["..." x20]} plus, when p is given,
 *           {"cell": c, "norm": "p^-c as a rational string"}. */
tq_status tq_plucker(tq_ctx* ctx, const char* request_json, char** out_json);

/* Basic spherical function value.
 * Request: {"g": [[...6x6...]], "p": 3}.
 * Response: {"cell": c, "value": "rational"}. */
tq_status tq_basic_b(tq_ctx* ctx, const char* request_json, char** out_json);

/* ------------------------------------------------------------------------ *
 * Local integral                                                            *
 * ------------------------------------------------------------------------ */

/* Evaluate the local integral at a point of the equal-value locus.
 * Request:
 *   {"p": 3,
 *    "forms": [{"gram": [[..]]} x3],
 *    "point": {"slots": [["x","y"], ["x","y"], [..]]},
 *    "method": "closed" | "oracle" | "compare",
 *    "f1": {"cells": [{"cell": c, "coeff": "rat"}, ...]}}   (optional)
 * Response: {"method": ..., "value": "rational", "terms": n,
 *            "truncation": {...},
 *            "oracle_value": "..."(compare), "match": true(compare)}.
 * The closed/oracle truncation objects report how far enumeration went. */
tq_status tq_local_integral(tq_ctx* ctx, const char* request_json,
                            char** out_json);

/* ------------------------------------------------------------------------ *
 * Finite-field orbit census                                                 *
 * ------------------------------------------------------------------------ */

/* Decompose the isotropic 3-planes over F_q under the product group action.
 * Request: {"q": 2, "points": false}
 *   "points": also decompose the punctured-cone points above the planes
 *             (q <= 3) and report the plane/point comparison.
 * Response: {"planes": {...census...}, "points": {...}? } */
tq_status tq_orbits(tq_ctx* ctx, const char* request_json, char** out_json);

/* ------------------------------------------------------------------------ *
 * Self-verification                                                         *
 * ------------------------------------------------------------------------ */

/* Run verification suites.
 * Request:
 *   {"suites": ["padic", ...],   optional; empty or absent = all suites
 *    "p": 0,                     0 = both 3 and 5, else that prime
 *    "seed": 1,                  sampler seed (any unsigned 64-bit value)
 *    "threads": 1}               worker threads; never changes the output
 * Response: the full report; identical requests produce byte-identical
 * responses regardless of thread count.
 * Suites: padic, cyclotomic, weil-rep, symplectic, local-integral, orbits,
 * determinism. */
tq_status tq_verify(tq_ctx* ctx, const char* request_json, char** out_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TRIADIC_H */
