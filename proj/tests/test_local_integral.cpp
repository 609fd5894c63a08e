#include <doctest.h>

#include <array>
#include <vector>

#include "triadic/errors.hpp"
#include "triadic/local_integral.hpp"

using namespace triadic;

namespace {

QuadraticSpace hyp() {
  return QuadraticSpace{RatMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
}
QuadraticSpace d1m2() {
  return QuadraticSpace{RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(-2)}}};
}
QuadraticSpace hh() {
  RatMat g(4, std::vector<Rat>(4, Rat(0)));
  g[0][1] = g[1][0] = g[2][3] = g[3][2] = Rat(1);
  return QuadraticSpace{g};
}

QuadTriple triple_hyp() {
  std::vector<QuadraticSpace> s = {hyp(), hyp(), hyp()};
  return QuadTriple{s};
}
QuadTriple triple_mixed() {
  std::vector<QuadraticSpace> s = {hyp(), d1m2(), hh()};
  return QuadTriple{s};
}

PointV point3(std::vector<Rat> a, std::vector<Rat> b, std::vector<Rat> c) {
  PointV v;
  v.slots[0] = std::move(a);
  v.slots[1] = std::move(b);
  v.slots[2] = std::move(c);
  return v;
}

}  // namespace

TEST_SUITE("local_integral") {

TEST_CASE("regression: pinned values on the hyperbolic triple") {
  QuadTriple T = triple_hyp();
  struct Case {
    long p;
    PointV v;
    Rat expect;
  };
  const std::vector<Case> cases = {
      {3, point3({Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}),
       Rat(1)},
      {5, point3({Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}),
       Rat(1)},
      {3, point3({Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)}),
       Rat(4)},
      {5, point3({Rat(5), Rat(25)}, {Rat(5), Rat(25)}, {Rat(5), Rat(25)}),
       Rat(5)},
      {3, point3({Rat(9), Rat(9)}, {Rat(9), Rat(9)}, {Rat(9), Rat(9)}),
       Rat(12)},
      {3, point3({Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}),
       Rat(1)},
      {3, point3({Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(0)}),
       Rat(6)},
  };
  for (const Case& c : cases) {
    ClosedResult r = local_integral_closed(T, c.v, c.p);
    CHECK(r.value == c.expect);
    CHECK(r.terms >= 1);
  }
}

TEST_CASE("regression: closed form agrees with the summation oracle") {
  // Two deeper points, one per triple shape, cross-checked the slow way.
  {
    QuadTriple T = triple_hyp();
    PointV v = point3({Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)});
    ClosedResult c = local_integral_closed(T, v, 3);
    OracleResult o =
        local_integral_oracle(T, v, default_cell_function(T, v, 3), 3);
    CHECK(c.value == Rat(4));
    CHECK(o.rational == Rat(4));
    CHECK(o.value == CycValue(Rat(4)));
  }
  {
    QuadTriple T = triple_mixed();
    PointV v = point3({Rat(1), Rat(9)}, {Rat(6), Rat(3)},
                      {Rat(3), Rat(3), Rat(0), Rat(0)});
    ClosedResult c = local_integral_closed(T, v, 3);
    OracleResult o =
        local_integral_oracle(T, v, default_cell_function(T, v, 3), 3);
    CHECK(c.value == Rat(-2));
    CHECK(o.rational == Rat(-2));
  }
}

TEST_CASE("point profiles") {
  QuadTriple T = triple_hyp();
  PointV v = point3({Rat(3), Rat(3)}, {Rat(9), Rat(1)}, {Rat(1), Rat(9)});
  PointProfile pr = profile_point(T, v, 3);
  CHECK(pr.ord == std::array<long, 3>{1, 0, 0});
  CHECK(pr.q_values[0] == Rat(9));
  CHECK(pr.total_q == Rat(27));
  CHECK(pr.common_q == Rat(9));
  CHECK(pr.zero_count == 0);
  CHECK(pr.zero_slot == -1);
  CHECK(pr.integral);
  CHECK(pr.on_locus);
  CHECK(pr.in_v_prime);

  PointV z = point3({Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(0)});
  PointProfile zr = profile_point(T, z, 3);
  CHECK(zr.zero_count == 1);
  CHECK(zr.zero_slot == 0);
  CHECK(zr.ord[0] == VAL_INF);
  CHECK(zr.on_locus);  // all values are 0

  PointV off = point3({Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)});
  CHECK(!profile_point(T, off, 3).on_locus);
}

TEST_CASE("domain errors") {
  QuadTriple T = triple_hyp();
  // Unequal slot values: not on the locus.
  PointV off = point3({Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(3), Rat(1)});
  CHECK_THROWS_AS(local_integral_closed(T, off, 3), Error);
  // Two zero slots leave the admissible open set.
  PointV zz = point3({Rat(0), Rat(0)}, {Rat(0), Rat(0)}, {Rat(1), Rat(0)});
  CHECK_THROWS_AS(local_integral_closed(T, zz, 3), Error);
  CHECK_THROWS_AS(required_cell_cutoff(T, zz, 3), Error);
  // Even or composite primes are rejected.
  PointV ok = point3({Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)});
  CHECK_THROWS_AS(local_integral_closed(T, ok, 2), Error);
  CHECK_THROWS_AS(local_integral_closed(T, ok, 15), Error);
  // A non-unimodular slot form is not supported.
  RatMat scaled = {{Rat(3), Rat(0)}, {Rat(0), Rat(1)}};
  std::vector<QuadraticSpace> s = {QuadraticSpace{scaled}, hyp(), hyp()};
  QuadTriple bad{s};
  PointV w = point3({Rat(1), Rat(1)}, {Rat(2), Rat(1)}, {Rat(2), Rat(1)});
  CHECK_THROWS_AS(local_integral_closed(bad, w, 3), Error);
}

TEST_CASE("off-lattice points integrate to zero") {
  QuadTriple T = triple_hyp();
  PointV v = point3({Rat(1) / Rat(3), Rat(3)}, {Rat(1), Rat(1)},
                    {Rat(1), Rat(1)});
  ClosedResult c = local_integral_closed(T, v, 3);
  CHECK(c.value == Rat(0));
  CHECK(c.terms == 0);
  OracleResult o =
      local_integral_oracle(T, v, default_cell_function(T, v, 3), 3);
  CHECK(o.rational == Rat(0));
  CHECK(required_cell_cutoff(T, v, 3) < 0);
}

TEST_CASE("cell functions") {
  CellFunction zero;
  CHECK(zero.max_cell() == -1);
  CHECK(zero.eval(0) == Rat(0));
  CellFunction d = CellFunction::delta(3);
  CHECK(d.eval(3) == Rat(1));
  CHECK(d.eval(2) == Rat(0));
  CHECK(d.max_cell() == 3);
  CellFunction b = CellFunction::basic(3, 4);
  CHECK(b.eval(0) == Rat(1));
  CHECK(b.eval(1) == Rat(1));
  CHECK(b.eval(2) == Rat(10));
  CHECK(b.eval(3) == Rat(10));
  CHECK(b.eval(4) == Rat(91));
  CHECK(b.eval(5) == Rat(0));  // beyond the cutoff
  CHECK(b.eval(-2) == Rat(0));
  CHECK(CellFunction::basic(3, -1).max_cell() == -1);
  // Setting a zero coefficient erases the cell.
  CellFunction e = CellFunction::delta(2);
  e.set(2, Rat(0));
  CHECK(e.max_cell() == -1);
  CHECK_THROWS_AS(e.set(-1, Rat(1)), Error);
}

TEST_CASE("modulus weight of torus triples") {
  const long p = 3;
  CHECK(modulus_weight({Rat(1), Rat(1), Rat(1)}, p) == Rat(1));
  CHECK(modulus_weight({Rat(3), Rat(1), Rat(1)}, p) == Rat(1) / Rat(9));
  CHECK(modulus_weight({Rat(3), Rat(3), Rat(3)}, p) == Rat(1) / Rat(729));
  CHECK(modulus_weight({Rat(1) / Rat(3), Rat(1), Rat(1)}, p) == Rat(9));
}

TEST_CASE("the f1 truncation matches the reachable depth") {
  QuadTriple T = triple_hyp();
  PointV v = point3({Rat(9), Rat(9)}, {Rat(9), Rat(9)}, {Rat(9), Rat(9)});
  CHECK(required_cell_cutoff(T, v, 3) == 2);
  CellFunction f = default_cell_function(T, v, 3);
  CHECK(f.max_cell() == 2);
  CHECK(f.eval(2) == Rat(10));  // 1 + 3^2
  // The zero-slot cutoff ignores the vanishing slot.
  PointV z = point3({Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(0)});
  CHECK(required_cell_cutoff(T, z, 3) == 1);
}

TEST_CASE("absolute value of the integrand is dominated by the closed bound") {
  QuadTriple T = triple_hyp();
  for (const PointV& v :
       {point3({Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}),
        point3({Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)}),
        point3({Rat(0), Rat(0)}, {Rat(3), Rat(0)}, {Rat(3), Rat(0)})}) {
    AbsBoundReport r = abs_integral_bound_check(T, v, 3);
    CHECK(r.holds);
    CHECK(r.integral >= Rat(0));
    CHECK(r.integral <= r.bound);
  }
  // The zero-slot branch is taken exactly when a slot vanishes.
  AbsBoundReport z = abs_integral_bound_check(
      T, point3({Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), Rat(0)}), 3);
  CHECK(z.zero_branch);
  AbsBoundReport nz = abs_integral_bound_check(
      T, point3({Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}), 3);
  CHECK(!nz.zero_branch);
}

TEST_CASE("oracle sub-reductions hold on a pinned point") {
  QuadTriple T = triple_hyp();
  PointV v = point3({Rat(3), Rat(3)}, {Rat(3), Rat(3)}, {Rat(3), Rat(3)});
  CHECK(unit_average_subcheck(T, v, {0, 0, 0}, 0, 3));
  CHECK(unit_average_subcheck(T, v, {1, 0, 0}, -1, 3));
  PAdicContext ctx(3, 4);
  CHECK(weil_n_phase_subcheck(T, v, Rat(1) / Rat(3), ctx));
  CHECK(weil_n_phase_subcheck(T, v, Rat(2), ctx));
}

}  // TEST_SUITE
