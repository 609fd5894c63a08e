#include <doctest.h>

#include <array>

#include "triadic/errors.hpp"
#include "triadic/padic.hpp"

using namespace triadic;

namespace {

RatMat hyp_gram() { return {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}; }
RatMat diag_gram(long a, long b) {
  return {{Rat(a), Rat(0)}, {Rat(0), Rat(b)}};
}

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("hilbert symbol pinned values") {
  // Units only at an odd prime: always +1.
  CHECK(hilbert_symbol(Rat(2), Rat(3), 5) == 1);
  CHECK(hilbert_symbol(Rat(-1), Rat(2), 7) == 1);
  // (p, u)_p = legendre(u): 2 is a non-square mod 3 and mod 5.
  CHECK(hilbert_symbol(Rat(3), Rat(2), 3) == -1);
  CHECK(hilbert_symbol(Rat(5), Rat(2), 5) == -1);
  // (p, p)_p = (-1, p)_p = legendre(-1).
  CHECK(hilbert_symbol(Rat(3), Rat(3), 3) == -1);
  CHECK(hilbert_symbol(Rat(5), Rat(5), 5) == 1);
  // Scaling by squares changes nothing.
  CHECK(hilbert_symbol(Rat(12), Rat(3), 3) ==
        hilbert_symbol(Rat(3), Rat(3), 3));
  CHECK(hilbert_symbol(Rat(1) / Rat(5), Rat(10), 5) ==
        hilbert_symbol(Rat(5), Rat(10), 5));
}

TEST_CASE("hilbert symbol properties on a grid") {
  const std::array<Rat, 8> vals = {Rat(1),  Rat(-1), Rat(2),        Rat(3),
                                   Rat(5),  Rat(6),  Rat(1) / Rat(3), Rat(-10)};
  for (long p : {3L, 5L, 7L}) {
    for (const Rat& a : vals)
      for (const Rat& b : vals) {
        int h = hilbert_symbol(a, b, p);
        CHECK(h == hilbert_symbol_oracle(a, b, p));  // brute-force witness
        CHECK(h == hilbert_symbol(b, a, p));          // symmetry
        // Bimultiplicativity.
        for (const Rat& c : {Rat(2), Rat(-15)})
          CHECK(hilbert_symbol(a * c, b, p) ==
                h * hilbert_symbol(c, b, p));
        // (a, -a) = 1 always.
        CHECK(hilbert_symbol(a, -a, p) == 1);
      }
  }
}

TEST_CASE("hilbert symbol rejects bad arguments") {
  CHECK_THROWS_AS(hilbert_symbol(Rat(0), Rat(1), 3), Error);
  CHECK_THROWS_AS(hilbert_symbol(Rat(1), Rat(1), 2), Error);
  CHECK_THROWS_AS(hilbert_symbol(Rat(1), Rat(1), 9), Error);
}

TEST_CASE("quadratic space basics on the hyperbolic plane") {
  QuadraticSpace V{hyp_gram()};
  CHECK(V.dim() == 2);
  CHECK(V.det() == Rat(-1));
  // Q(v) = v G v^T / 2 = x y.
  CHECK(V.q_value({Rat(3), Rat(4)}) == Rat(12));
  CHECK(V.q_value({Rat(1) / Rat(3), Rat(3)}) == Rat(1));
  // The bilinear pairing satisfies B(v, v) = 2 Q(v).
  std::vector<Rat> v = {Rat(2), Rat(5)};
  CHECK(V.pairing(v, v) == Rat(2) * V.q_value(v));
  CHECK(V.pairing({Rat(1), Rat(0)}, {Rat(0), Rat(1)}) == Rat(1));
}

TEST_CASE("chi is the discriminant character") {
  QuadraticSpace hyp{hyp_gram()};
  // Hyperbolic plane: disc = 1, chi trivial.
  const std::array<Rat, 5> args = {Rat(2), Rat(3), Rat(5),
                                   Rat(1) / Rat(15), Rat(-7)};
  for (const Rat& a : args) {
    CHECK(hyp.chi(a, 3) == 1);
    CHECK(hyp.chi(a, 5) == 1);
  }
  // x^2 + y^2 (halved): disc = -1; chi(a) = (a, -1)_p.
  QuadraticSpace d11{diag_gram(1, 1)};
  CHECK(d11.chi(Rat(3), 3) == -1);
  CHECK(d11.chi(Rat(9), 3) == 1);
  CHECK(d11.chi(Rat(5), 5) == 1);
  // chi is multiplicative.
  QuadraticSpace d1m2{diag_gram(1, -2)};
  for (long p : {3L, 5L}) {
    CHECK(d1m2.chi(Rat(6), p) * d1m2.chi(Rat(10), p) == d1m2.chi(Rat(60), p));
    CHECK_THROWS_AS(d1m2.chi(Rat(0), p), Error);
  }
}

TEST_CASE("unimodularity at a prime") {
  QuadraticSpace hyp{hyp_gram()};
  CHECK(hyp.unimodular_at(3));
  CHECK(hyp.unimodular_at(5));
  QuadraticSpace scaled{diag_gram(3, 1)};
  CHECK(!scaled.unimodular_at(3));
  CHECK(scaled.unimodular_at(5));
  RatMat fractional = {{Rat(1) / Rat(5), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(!QuadraticSpace{fractional}.unimodular_at(5));
}

TEST_CASE("similitude factors") {
  QuadraticSpace hyp{hyp_gram()};
  // diag(2, 1) scales Q = xy by 2 in row convention (v -> v g).
  CHECK(hyp.similitude(RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}}) == Rat(2));
  CHECK(hyp.similitude(RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == Rat(1));
  // A rotation is an isometry of x^2 + y^2.
  QuadraticSpace d11{diag_gram(1, 1)};
  RatMat rot = {{Rat(3) / Rat(5), Rat(4) / Rat(5)},
                {Rat(-4) / Rat(5), Rat(3) / Rat(5)}};
  CHECK(d11.similitude(rot) == Rat(1));
  // Shears are not similitudes of x^2 + y^2.
  CHECK_THROWS_AS(d11.similitude(RatMat{{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}),
                  Error);
}

TEST_CASE("vector valuation") {
  CHECK(QuadraticSpace::vec_val({Rat(3), Rat(9)}, 3) == 1);
  CHECK(QuadraticSpace::vec_val({Rat(1) / Rat(3), Rat(9)}, 3) == -1);
  CHECK(QuadraticSpace::vec_val({Rat(0), Rat(0)}, 3) == VAL_INF);
  CHECK(QuadraticSpace::vec_val({Rat(0), Rat(25)}, 5) == 2);
}

TEST_CASE("context validates the prime and bounds resources") {
  PAdicContext ctx(3);
  CHECK(ctx.p == 3);
  CHECK(ctx.root_order() == 4 * 729);  // 4 p^K with K = 6
  CHECK_THROWS_AS(PAdicContext(2), Error);
  CHECK_THROWS_AS(PAdicContext(15), Error);
}

TEST_CASE("a triple requires exactly three spaces") {
  std::vector<QuadraticSpace> two = {QuadraticSpace{hyp_gram()},
                                     QuadraticSpace{hyp_gram()}};
  CHECK_THROWS_AS(QuadTriple{two}, Error);
  std::vector<QuadraticSpace> three = {QuadraticSpace{hyp_gram()},
                                       QuadraticSpace{diag_gram(1, 1)},
                                       QuadraticSpace{diag_gram(1, -2)}};
  QuadTriple T{three};
  CHECK(T.total_dim() == 6);
}

}  // TEST_SUITE
