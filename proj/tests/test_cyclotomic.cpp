#include <doctest.h>

#include "triadic/cyclotomic.hpp"
#include "triadic/errors.hpp"
#include "triadic/weil_index.hpp"

using namespace triadic;

namespace {

QuadraticSpace hyp() {
  return QuadraticSpace{RatMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
}
QuadraticSpace diag2(long a, long b) {
  return QuadraticSpace{RatMat{{Rat(a), Rat(0)}, {Rat(0), Rat(b)}}};
}
// Orthogonal sum of two 2-dimensional diagonal forms.
QuadraticSpace diag4(long a, long b, long c, long d) {
  RatMat g(4, std::vector<Rat>(4, Rat(0)));
  g[0][0] = Rat(a);
  g[1][1] = Rat(b);
  g[2][2] = Rat(c);
  g[3][3] = Rat(d);
  return QuadraticSpace{g};
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("psi is trivial on p-integral arguments") {
  PAdicContext ctx(3);
  CHECK(psi(ctx, Rat(0)) == CycValue(Rat(1)));
  CHECK(psi(ctx, Rat(7)) == CycValue(Rat(1)));
  CHECK(psi(ctx, Rat(-12)) == CycValue(Rat(1)));
  // 5/7 is 3-integral even though it is not an integer.
  CHECK(psi(ctx, Rat(5) / Rat(7)) == CycValue(Rat(1)));
}

TEST_CASE("psi is additive and conjugation inverts") {
  PAdicContext ctx(5);
  const Rat x = Rat(2) / Rat(25);
  const Rat y = Rat(3) / Rat(5);
  CHECK(psi(ctx, x + y) == psi(ctx, x) * psi(ctx, y));
  CHECK(psi(ctx, x).conj() == psi(ctx, -x));
  CHECK(psi(ctx, x) * psi(ctx, -x) == CycValue(Rat(1)));
}

TEST_CASE("psi at depth one generates a primitive p-th root") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    CycValue z = psi(ctx, Rat(1) / Rat(p));
    CHECK(z != CycValue(Rat(1)));
    // Sum over a full period vanishes.
    CycValue s = CycValue::zero();
    CycValue pow = CycValue(Rat(1));
    for (long k = 0; k < p; ++k) {
      s = s + pow;
      pow = pow * z;
    }
    CHECK(pow == CycValue(Rat(1)));  // z^p = 1
    CHECK(s.is_zero());
  }
}

TEST_CASE("psi rejects arguments deeper than the context") {
  PAdicContext ctx(3, 2);
  CHECK_NOTHROW(psi(ctx, Rat(1) / Rat(9)));
  CHECK_THROWS_AS(psi(ctx, Rat(1) / Rat(27)), Error);
}

TEST_CASE("accumulator matches the naive sum") {
  PAdicContext ctx(3);
  CycAccumulator acc(ctx);
  CycValue naive = CycValue::zero();
  // Deterministic spread of exponents of the ambient root of unity,
  // including collisions and a rational contribution.
  long long order = 4;
  for (int k = 0; k < ctx.K; ++k) order *= 3;
  for (long long k = 0; k < 40; ++k) {
    long long e = (k * k * 37 + 11 * k) % order;
    acc.add(e);
    naive = naive + CycValue::monomial(ctx, e, Rat(1));
  }
  acc.add(0, Rat(5) / Rat(2));
  naive = naive + CycValue(Rat(5) / Rat(2));
  CHECK(acc.value() == naive);
}

TEST_CASE("rational detection on collapsed sums") {
  PAdicContext ctx(5);
  CycValue z = psi(ctx, Rat(1) / Rat(5));
  CycValue s = CycValue::zero();
  for (long k = 0; k < 5; ++k) {
    CycValue pow = CycValue(Rat(1));
    for (long j = 0; j < k; ++j) pow = pow * z;
    s = s + pow;
  }
  // 1 + z + ... + z^4 = 0: a rational (indeed zero) element.
  CHECK(s.is_zero());
  CHECK(s.rational_value() == Rat(0));
  CycValue three = CycValue(Rat(3)) + CycValue::zero();
  CHECK(three.rational_value() == Rat(3));
}

TEST_CASE("weil index of the hyperbolic plane is one") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    CHECK(weil_index(hyp(), ctx) == CycValue(Rat(1)));
  }
}

TEST_CASE("weil index is an eighth root of unity of modulus one") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    for (const QuadraticSpace& V : {diag2(1, 1), diag2(1, -2), diag2(2, 3)}) {
      CycValue g = weil_index(V, ctx);
      CHECK((g * g.conj()) == CycValue(Rat(1)));  // unitary
      CycValue g8 = CycValue(Rat(1));
      for (int i = 0; i < 8; ++i) g8 = g8 * g;
      CHECK(g8 == CycValue(Rat(1)));  // eighth root of unity
    }
  }
}

TEST_CASE("weil index is multiplicative over orthogonal sums") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    CycValue g11 = weil_index(diag2(1, 1), ctx);
    CHECK(weil_index(diag4(1, 1, 1, 1), ctx) == g11 * g11);
    CycValue ga = weil_index(diag2(1, -2), ctx);
    CHECK(weil_index(diag4(1, -2, 1, 1), ctx) == ga * g11);
  }
}

TEST_CASE("raw gauss sums stabilize at depth one") {
  // The normalized Gauss sum over p^{-k} lattice cosets is independent of k
  // for unimodular forms; the closed form agrees with the honest sum.
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p, 6);
    for (const QuadraticSpace& V : {diag2(1, 1), diag2(1, -2)}) {
      CycValue closed = weil_index(V, ctx);
      CycValue raw1 = weil_index_raw(V, ctx, 1);
      CHECK(closed == raw1);
      CHECK(raw1 == weil_index_raw(V, ctx, 2));
    }
  }
}

}  // TEST_SUITE
