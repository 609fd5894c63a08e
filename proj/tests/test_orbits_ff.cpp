#include <doctest.h>

#include <map>
#include <string>

#include "triadic/errors.hpp"
#include "triadic/orbits_ff.hpp"

using namespace triadic;

namespace {

// Closed-form orbit sizes: group order (q(q^2-1))^3 divided by the
// parametric stabilizer orders q^2(q-1), q^2(q-1)(q^2-1), and (q(q-1))^3.
std::map<std::string, long long> expected_sizes(long q) {
  long long open_orbit = q * (q - 1) * (q - 1) * (q + 1) * (q + 1) * (q + 1);
  long long mixed = q * (q - 1) * (q + 1) * (q + 1);
  long long closed = (q + 1) * (q + 1) * (q + 1);
  return {{"000", open_orbit},
          {"100", mixed},
          {"010", mixed},
          {"001", mixed},
          {"111", closed}};
}

}  // namespace

TEST_SUITE("orbits_ff") {

TEST_CASE("census over F_2 matches the exact decomposition") {
  OrbitReport r = orbit_decompose(2);
  CHECK(r.q == 2);
  CHECK(r.lagrangian_count == 135);
  CHECK(r.group_order == 216);
  REQUIRE(r.orbits.size() == 5u);
  std::map<std::string, long long> sizes, stabs;
  long long total = 0;
  for (const OrbitInfo& o : r.orbits) {
    sizes[o.label] = o.size;
    stabs[o.label] = o.stabilizer_order;
    total += o.size;
    CHECK(o.size * o.stabilizer_order == r.group_order);
    CHECK(o.parametric_order == o.stabilizer_order);
  }
  CHECK(total == 135);
  CHECK(sizes == std::map<std::string, long long>{
                     {"000", 54}, {"100", 18}, {"010", 18}, {"001", 18},
                     {"111", 27}});
  CHECK(stabs == std::map<std::string, long long>{
                     {"000", 4}, {"100", 12}, {"010", 12}, {"001", 12},
                     {"111", 8}});
}

TEST_CASE("census over F_3 and F_5 matches the closed forms") {
  for (long q : {3L, 5L}) {
    OrbitReport r = orbit_decompose(q);
    long long expect_count = (q + 1) * (q * q + 1) * (q * q * q + 1);
    CHECK(r.lagrangian_count == expect_count);
    long long g1 = q * (q * q - 1);
    CHECK(r.group_order == g1 * g1 * g1);
    auto sizes = expected_sizes(q);
    long long total = 0;
    for (const OrbitInfo& o : r.orbits) {
      CHECK(o.size == sizes.at(o.label));
      CHECK(o.size * o.stabilizer_order == r.group_order);
      CHECK(o.parametric_order == o.stabilizer_order);
      total += o.size;
    }
    CHECK(total == expect_count);
  }
}

TEST_CASE("enumeration agrees with the product formula") {
  CHECK(enumerate_lagrangians(2).size() == 135u);
  CHECK(enumerate_lagrangians(3).size() == 1120u);
  CHECK(enumerate_lagrangians(5).size() == 19656u);
}

TEST_CASE("rref representatives are canonical keys") {
  // The coordinate plane spanned by the last three basis vectors.
  std::array<std::array<long, 6>, 3> rows = {{{0, 0, 0, 1, 0, 0},
                                              {0, 0, 0, 0, 1, 0},
                                              {0, 0, 0, 0, 0, 1}}};
  FqLagrangian a = rref_lagrangian(3, rows);
  // Scaling and row operations do not change the reduced form.
  std::array<std::array<long, 6>, 3> messy = {{{0, 0, 0, 2, 1, 0},
                                               {0, 0, 0, 0, 2, 2},
                                               {0, 0, 0, 0, 0, -1}}};
  CHECK(a == rref_lagrangian(3, messy));
  std::array<std::array<long, 6>, 3> rank2 = {{{0, 0, 0, 1, 0, 0},
                                               {0, 0, 0, 2, 0, 0},
                                               {0, 0, 0, 0, 0, 3}}};
  CHECK_THROWS_AS(rref_lagrangian(3, rank2), Error);
}

TEST_CASE("parametric stabilizers match brute force") {
  CHECK(verify_parametric_stabilizers(2));
  CHECK(verify_parametric_stabilizers(3));
}

TEST_CASE("pointed cone orbits biject with plane orbits") {
  for (long q : {2L, 3L}) {
    XPointReport r = xpoints_decompose(q);
    CHECK(r.q == q);
    CHECK(r.xpoint_count ==
          (q - 1) * (q + 1) * (q * q + 1) * (q * q * q + 1));
    CHECK(r.orbit_count == 5);
    CHECK(r.covers);
    CHECK(r.bijection);
    CHECK(r.n0_contained);
    for (const XOrbitInfo& o : r.orbits) CHECK(o.matches_plane_orbit);
  }
}

TEST_CASE("only prime fields are implemented") {
  CHECK_THROWS_AS(orbit_decompose(4), Error);
  CHECK_THROWS_AS(orbit_decompose(1), Error);
  CHECK_THROWS_AS(enumerate_lagrangians(9), Error);
}

}  // TEST_SUITE
