// SPDX-License-Identifier: MIT
//
// Weil index of a quadratic space over Q_p (odd p), computed exactly.
//
// The index gamma(Q) is the unit-modulus constant attached to the character
// second-degree character v -> psi(Q(v)); it is the stabilized value of the
// normalized Gaussian Riemann sums
//     gamma_k = p^{-k d} * sum_{v in (p^{-k}Z/p^k Z)^d} psi(Q(v)),
// divided by |det J|_p^{-1/2} (an exact power of p times the exact sqrt(p)
// from the quadratic Gauss sum when val_p(det J) is odd).  At odd p it is a
// 4th root of unity; for a self-dual (p-unimodular) Gram matrix it equals 1.
//
// Computation: congruence-diagonalize J over Z_p, then evaluate each 1-D
// factor by an exact root-of-unity histogram; stabilize over increasing k.

#pragma once

#include "triadic/cyclotomic.hpp"
#include "triadic/padic.hpp"

namespace triadic {

// Congruence diagonalization over Z_p: M J M^T = diag(d) with M in GL_d(Z_p)
// (p-integral entries, p-unit determinant) whenever J is p-integral; for
// general rational J the M stays p-unimodular and diag absorbs the
// denominators.  Exact; pivots are chosen by minimal p-adic valuation.
struct PadicDiagonalization {
  std::vector<Rat> diag;
  RatMat M;
};

PadicDiagonalization diagonalize_gram(const RatMat& J, long p);

// gamma(Q): exact Weil index.  Throws PrecisionExceeded if stabilization
// needs more character depth than ctx.K or more rounds than ctx.weil_k_max.
CycValue weil_index(const QuadraticSpace& V, const PAdicContext& ctx);

// Test oracle: the bare Riemann sum p^{-k d} sum psi(Q(v)) over
// (p^{-k} Z_p / p^k Z_p)^d, evaluated by brute force (p^{2kd} terms).  For a
// p-unimodular Gram matrix and k >= 1 this already equals gamma(Q).
CycValue weil_index_raw(const QuadraticSpace& V, const PAdicContext& ctx, int k);

}  // namespace triadic
