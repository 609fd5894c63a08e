// SPDX-License-Identifier: MIT
//
// Exact rational / integer scalar layer.
//
// All arithmetic in the library is exact.  We use GMP's C++ classes:
//   Int = arbitrary-precision integer, Rat = arbitrary-precision rational
// (always kept in lowest terms by GMP).  This header adds the handful of
// number-theoretic helpers the rest of the library needs: p-adic valuation,
// modular inverse, Legendre symbol, primality, and string round-tripping in
// the "num/den" format used by the JSON layer.

#pragma once

#include <gmpxx.h>

#include <climits>
#include <string>

#include "triadic/errors.hpp"

namespace triadic {

using Int = mpz_class;
using Rat = mpq_class;

// Sentinel valuation of 0 ("+infinity").  Large enough that no real valuation
// reaches it, small enough that modest sums of valuations cannot overflow.
inline constexpr long VAL_INF = LONG_MAX / 4;

// GMP's classes have no long long constructor; on LP64 long is 64-bit.
static_assert(sizeof(long) == 8, "library assumes 64-bit long");
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// p-adic valuation of a nonzero integer; VAL_INF for 0.
long val_p(const Int& n, long p);

// p-adic valuation of a rational: val(num) - val(den); VAL_INF for 0.
long val_p(const Rat& x, long p);

// x / p^val(x): the unit part u with x = p^val * u, u a p-adic unit.
// Requires x != 0.
Rat unit_part(const Rat& x, long p);

// a^{-1} mod m for gcd(a, m) = 1, m > 0.  Result in [0, m).
Int inv_mod(const Int& a, const Int& m);

// Legendre symbol (u/p) in {-1, 0, +1} for odd prime p.
int legendre(const Int& u, long p);

// Deterministic primality for word-sized inputs (wraps GMP).
bool is_prime(long n);

// Canonical "num/den" / "num" rendering used across JSON payloads.
std::string rat_to_string(const Rat& x);

// Parse "num", "num/den", or a plain integer string.  Throws Parse on junk.
Rat rat_from_string(const std::string& s);

// Residue of a p-integral rational x modulo p^k, as an integer in [0, p^k).
// Requires val_p(x) >= 0.  (x = a/b with b a p-unit; returns a * b^{-1} mod p^k.)
Int residue_mod(const Rat& x, const Int& pk, long p);

// p^k as an exact rational, any sign of k.
inline Rat pow_p(long p, long k) {
  Int pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(k >= 0 ? k : -k));
  return k >= 0 ? Rat(pw) : Rat(1, pw);
}

}  // namespace triadic
