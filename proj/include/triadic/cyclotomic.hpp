// SPDX-License-Identifier: MIT
//
// Exact arithmetic in the cyclotomic field Q(zeta_N), N = 4 * p^K.
//
// A CycValue is a rational linear combination of powers of zeta_N, stored
// sparsely as (exponent, coefficient) pairs.  The canonical form writes the
// value in the power basis { zeta_N^e : 0 <= e < phi(N) }, which is a genuine
// basis of Q(zeta_N)/Q, so equality of canonical forms is equality in the
// field.  Reduction uses two rewriting rules:
//   (1) zeta^e = -zeta^{e - N/2}              for e >= N/2      (zeta^{N/2} = -1)
//   (2) for phi(N) <= e < N/2, writing e = phi(N) + r:
//       zeta^e = sum_{i=0}^{p-2} (-1)^{i+1} zeta^{r + 2 p^{K-1} i}
//       (from the minimal relation Phi_p(zeta_N^{4 p^{K-1}}) = 0 twisted by
//        zeta^r; all target exponents land strictly below phi(N)).
//
// The field contains i = zeta_N^{p^K} and zeta_{p^k} = zeta_N^{4 p^{K-k}} for
// all k <= K, hence every additive character value psi(x) with val_p(x) >= -K
// and every quadratic Gauss sum the library needs.
//
// Values remember (p, K); mixing values from different contexts throws
// DepthMismatch.  A pure rational (p = 0) promotes into any context.

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triadic/padic.hpp"
#include "triadic/rational.hpp"

namespace triadic {

class CycValue {
 public:
  CycValue() : p_(0), K_(0) {}                       // zero (pure rational)
  explicit CycValue(const Rat& r) : p_(0), K_(0) {   // rational constant
    if (r != 0) terms_.emplace_back(0, r);
  }

  // coeff * zeta_N^exp in the field of ctx (exp taken mod N).
  static CycValue monomial(const PAdicContext& ctx, long long exp,
                           const Rat& coeff);
  static CycValue zero() { return CycValue(); }
  static CycValue one() { return CycValue(Rat(1)); }

  long prime() const { return p_; }
  int depth() const { return K_; }

  bool is_zero() const;
  bool is_rational() const;       // canonicalizes lazily; true if in Q
  Rat rational_value() const;     // throws InvalidArgument if not rational

  CycValue operator+(const CycValue& o) const;
  CycValue operator-(const CycValue& o) const;
  CycValue operator-() const;
  CycValue operator*(const CycValue& o) const;
  CycValue& operator+=(const CycValue& o);
  CycValue& operator*=(const CycValue& o);
  CycValue operator*(const Rat& r) const;

  bool operator==(const CycValue& o) const;
  bool operator!=(const CycValue& o) const { return !(*this == o); }

  // Complex conjugation: zeta^e -> zeta^{-e}.
  CycValue conj() const;

  // Galois twist zeta -> zeta^s for s coprime to N (int64 s reduced mod N).
  CycValue galois(long long s) const;

  // Canonical power-basis coefficient vector, length phi(N) (or length 1 for
  // pure rationals).  Used by serialization.
  std::vector<Rat> coefficients() const;

  // Rebuild from a coefficient vector in the power basis of ctx.
  static CycValue from_coefficients(const PAdicContext& ctx,
                                    const std::vector<Rat>& coeffs);

  std::string to_string() const;  // human-readable, canonical form

  // Expose N = 4 p^K (0 for pure rationals) for serialization.
  long long root_order() const;

  // Force canonical form now (otherwise done lazily on comparisons).
  void canonicalize() const;

 private:
  friend class CycAccumulator;

  // Invariant: terms_ sorted by exponent, no zero coefficients, exponents in
  // [0, N).  canonical_ additionally means all exponents < phi(N).
  long p_;
  int K_;
  mutable std::vector<std::pair<long long, Rat>> terms_;
  mutable bool canonical_ = true;  // vacuously true for rationals

  void check_compatible(const CycValue& o) const;
  void promote(long p, int K);  // rational -> field of (p, K)
  long long n_value() const;          // N = 4 p^K
  long long phi_value() const;        // phi(N) = 2 (p-1) p^{K-1}
  void reduce_canonical() const;
  static void merge_terms(std::vector<std::pair<long long, Rat>>& t);
};

inline CycValue operator*(const Rat& r, const CycValue& v) { return v * r; }

// Histogram accumulator for large character sums: collects coefficients per
// exponent (sparsely -- the sums that matter touch at most p^K distinct
// roots), then emits a single CycValue.  Exact and much faster than repeated
// operator+= for sums with many repeated roots of unity.
class CycAccumulator {
 public:
  explicit CycAccumulator(const PAdicContext& ctx);

  // += coeff * zeta_N^exp
  void add(long long exp, const Rat& coeff);
  // += zeta_N^exp (integer fast path)
  void add(long long exp);
  CycValue value() const;

 private:
  long p_;
  int K_;
  long long N_;
  std::unordered_map<long long, long long> counts_;
  std::unordered_map<long long, Rat> rat_coeffs_;
};

// Additive character of Q_p evaluated exactly at a rational argument:
//   psi(x) = exp(2 pi i {x}_p),   {x}_p the p-adic fractional part,
// a root of unity of order dividing p^K.  Defined for every rational with
// val_p(x) >= -K (the prime-to-p part of the denominator is inverted mod the
// p-part); p-integral x gives 1.  Throws PrecisionExceeded if val_p(x) < -K.
CycValue psi(const PAdicContext& ctx, const Rat& x);

// Exponent-level variant: psi(x) = zeta_N^{psi_exponent(ctx, x)}.  Lets large
// sums feed a CycAccumulator without materializing per-term CycValues.
long long psi_exponent(const PAdicContext& ctx, const Rat& x);

// Exact square root of p inside Q(zeta_N), via the quadratic Gauss sum
//   g = sum_{x=1}^{p-1} leg(x) zeta_p^x,
// which satisfies g^2 = leg(-1) p.  For p = 1 mod 4, sqrt(p) = g; for
// p = 3 mod 4, sqrt(p) = -i g (both with the standard positive embedding).
CycValue sqrt_p(const PAdicContext& ctx);

}  // namespace triadic
