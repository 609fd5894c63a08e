#include <doctest.h>

#include "triadic/errors.hpp"
#include "triadic/rational.hpp"

using namespace triadic;

TEST_SUITE("rational") {

TEST_CASE("valuation of integers and rationals") {
  CHECK(val_p(Int(1), 3) == 0);
  CHECK(val_p(Int(3), 3) == 1);
  CHECK(val_p(Int(-9), 3) == 2);
  CHECK(val_p(Int(54), 3) == 3);  // 54 = 2 * 27
  CHECK(val_p(Int(0), 3) == VAL_INF);

  CHECK(val_p(Rat(1) / Rat(3), 3) == -1);
  CHECK(val_p(Rat(10) / Rat(9), 3) == -2);
  CHECK(val_p(Rat(45) / Rat(7), 5) == 1);
  CHECK(val_p(Rat(0), 5) == VAL_INF);
}

TEST_CASE("unit part recovers x / p^val") {
  const long p = 3;
  for (const char* s : {"1", "-2", "5/7", "9/2", "2/27", "-81", "50/3"}) {
    Rat x = rat_from_string(s);
    long v = val_p(x, p);
    Rat u = unit_part(x, p);
    CHECK(val_p(u, p) == 0);
    CHECK(u * pow_p(p, v) == x);
  }
}

TEST_CASE("pow_p handles negative exponents") {
  CHECK(pow_p(3, 0) == Rat(1));
  CHECK(pow_p(3, 4) == Rat(81));
  CHECK(pow_p(5, -2) == Rat(1) / Rat(25));
}

TEST_CASE("legendre symbol against small squares") {
  // Squares mod 7: 1, 2, 4.  Squares mod 5: 1, 4.
  CHECK(legendre(Int(1), 7) == 1);
  CHECK(legendre(Int(2), 7) == 1);
  CHECK(legendre(Int(3), 7) == -1);
  CHECK(legendre(Int(4), 7) == 1);
  CHECK(legendre(Int(5), 7) == -1);
  CHECK(legendre(Int(6), 7) == -1);
  CHECK(legendre(Int(2), 5) == -1);
  CHECK(legendre(Int(-1), 5) == 1);   // 5 = 1 mod 4
  CHECK(legendre(Int(-1), 3) == -1);  // 3 = 3 mod 4
  // Complete multiplicativity on units.
  for (long a = 1; a < 7; ++a)
    for (long b = 1; b < 7; ++b)
      CHECK(legendre(Int(a * b), 7) == legendre(Int(a), 7) * legendre(Int(b), 7));
}

TEST_CASE("residue_mod reduces denominators") {
  // 1/2 mod 9: the inverse of 2 mod 9 is 5.
  CHECK(residue_mod(Rat(1) / Rat(2), Int(9), 3) == Int(5));
  // 7/4 mod 25: 4^{-1} = 19 mod 25, 7 * 19 = 133 = 8 mod 25.
  CHECK(residue_mod(Rat(7) / Rat(4), Int(25), 5) == Int(8));
  // Integral input reduces directly.
  CHECK(residue_mod(Rat(31), Int(27), 3) == Int(4));
  // Negative values land in [0, p^k).
  CHECK(residue_mod(Rat(-1), Int(9), 3) == Int(8));
}

TEST_CASE("inv_mod and is_prime") {
  CHECK(inv_mod(Int(2), Int(9)) == Int(5));
  CHECK(inv_mod(Int(7), Int(25)) == Int(18));  // 7 * 18 = 126 = 1 mod 25
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(5));
  CHECK(is_prime(97));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));  // 7 * 13
}

TEST_CASE("string round trip canonicalizes") {
  CHECK(rat_to_string(rat_from_string("4/6")) == "2/3");
  CHECK(rat_to_string(rat_from_string("-10/5")) == "-2");
  CHECK(rat_to_string(Rat(0)) == "0");
  CHECK(rat_from_string("7") == Rat(7));
  CHECK(rat_from_string("-3/4") == Rat(-3) / Rat(4));
  CHECK_THROWS_AS(rat_from_string("x"), Error);
  CHECK_THROWS_AS(rat_from_string("1/0"), Error);
}

TEST_CASE("to_int builds big integers from machine words") {
  CHECK(to_int(12) == Int(12));
  CHECK(to_int(-3) == Int(-3));
  CHECK(Rat(to_int(7)) / Rat(to_int(2)) == rat_from_string("7/2"));
}

}  // TEST_SUITE
