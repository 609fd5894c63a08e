// SPDX-License-Identifier: MIT
//
// p-adic context, Hilbert symbol, and quadratic spaces.
//
// A PAdicContext fixes the odd prime p and a working depth K: every additive
// character value the library produces lives in the cyclotomic field
// Q(zeta_N) with N = 4 * p^K.  K bounds how deep into denominators the
// character can see; operations that would need more depth throw
// PrecisionExceeded rather than silently truncating.
//
// A QuadraticSpace is a nondegenerate symmetric bilinear form on Q^d given by
// its Gram matrix J, with quadratic form
//     Q(v) = (1/2) * v J v^T        (row vectors),
// pairing <v, w> = v J w^T, and quadratic character
//     chi_Q(a) = ( a, (-1)^{d/2} det J )_p     (d even).

#pragma once

#include <memory>
#include <vector>

#include "triadic/matrix.hpp"
#include "triadic/rational.hpp"

namespace triadic {

struct PAdicContext {
  long p;              // odd prime
  int K;               // character depth: values live in Q(zeta_{4 p^K})
  long max_cells;      // densified Schwartz function size budget
  int weil_k_max;      // max stabilization depth for Weil index Gauss sums

  explicit PAdicContext(long p_, int K_ = 6, long max_cells_ = 2'000'000,
                        int weil_k_max_ = 4);

  // N = 4 * p^K, the root-of-unity order every character value embeds into.
  Int root_order() const;
};

// Hilbert symbol (a, b)_p in {-1, +1} for nonzero rationals, odd prime p.
// Closed form: with a = p^alpha u, b = p^beta w (u, w p-units),
//   (a,b)_p = leg(u)^beta * leg(w)^alpha * (-1)^{alpha beta (p-1)/2}.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

// Oracle used by tests: (a,b)_p = +1 iff z^2 = a x^2 + b y^2 has a primitive
// solution mod p^3 (exhaustive search; valuations first reduced mod 2).
int hilbert_symbol_oracle(const Rat& a, const Rat& b, long p);

class QuadraticSpace {
 public:
  // Gram matrix must be symmetric, even-dimensional, nondegenerate.
  explicit QuadraticSpace(RatMat gram);

  int dim() const { return d_; }
  const RatMat& gram() const { return J_; }
  const Rat& det() const { return det_; }

  // Q(v) = (1/2) v J v^T
  Rat q_value(const std::vector<Rat>& v) const;
  // <v, w> = v J w^T
  Rat pairing(const std::vector<Rat>& v, const std::vector<Rat>& w) const;

  // chi_Q(a) = (a, (-1)^{d/2} det J)_p
  int chi(const Rat& a, long p) const;

  // True if J has p-unit determinant and p-integral entries (self-dual
  // lattice at p); several character-theoretic ops require this.
  bool unimodular_at(long p) const;

  // Similitude test: returns lambda with  g J g^T = lambda J  (equivalently
  // g J^{-1} g^T J = lambda I).  Throws NotSimilitude if g is not one.
  Rat similitude(const RatMat& g) const;
  Rat similitude(const Mat2& g) const;  // d == 2 convenience

  // min valuation over entries of v (VAL_INF for v = 0).
  static long vec_val(const std::vector<Rat>& v, long p);

 private:
  RatMat J_;
  int d_;
  Rat det_;
};

// The three quadratic spaces of a triple, with the parity constraint
// sum d_i even baked in by the even-dimension requirement on each factor.
struct QuadTriple {
  std::vector<QuadraticSpace> spaces;  // size 3

  explicit QuadTriple(std::vector<QuadraticSpace> s);

  int total_dim() const;
};

}  // namespace triadic
