// SPDX-License-Identifier: MIT
//
// Finite-field verification of the isotropic-plane orbit picture.
//
// Over F_q (prime q <= 5) this module enumerates all maximal isotropic
// (Lagrangian) 3-dimensional subspaces of the symplectic F_q^6 — there are
// (q+1)(q^2+1)(q^3+1) of them — and decomposes the set under the right
// action of SL2(F_q)^3 embedded block-diagonally.  Expected picture: five
// orbits, one through each of the labelled planes W_a, with stabilizers
// matching the closed-form parametric shapes.  Everything is exact integer
// arithmetic mod q; orbit closure is a breadth-first sweep with generators
// n(1), w per slot, keyed by the canonical reduced-row-echelon basis.
//
// The companion decomposition works one level up: points are nonzero pure
// wedges (rows of the Plucker embedding, all F_q^x-scalings), the finite
// model of the quotient by the derived parabolic rather than the parabolic.
// The natural forgetful map between the two orbit sets should be a
// bijection, which the report verifies by exact counting.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "triadic/symplectic.hpp"

namespace triadic {

// A Lagrangian subspace of F_q^6 in canonical (reduced row echelon) form.
struct FqLagrangian {
  long q = 0;
  std::array<std::array<uint8_t, 6>, 3> rows{};

  // 54-bit packing (subspaces compare equal iff keys do, q fixed).
  uint64_t key() const;
  bool operator==(const FqLagrangian& o) const { return key() == o.key(); }
};

// Reduced row echelon form mod q of an integer 3x6 matrix (entries may be
// any longs; they are reduced).  Throws InvalidArgument on rank < 3.
FqLagrangian rref_lagrangian(long q, const std::array<std::array<long, 6>, 3>& m);

// Complete duplicate-free enumeration.  Count is (q+1)(q^2+1)(q^3+1).
// q must be a prime <= 5 (ResourceBound beyond, InvalidArgument otherwise).
std::vector<FqLagrangian> enumerate_lagrangians(long q);

struct OrbitInfo {
  const char* label;            // "000", "100", "010", "001", "111"
  long long size;               // orbit cardinality from the BFS closure
  long long stabilizer_order;   // brute-force count over all of SL2(F_q)^3
  long long parametric_order;   // closed-form order of the labelled shape
  FqLagrangian representative;  // W_label reduced mod q
};

struct OrbitReport {
  long q;
  long long lagrangian_count;
  long long group_order;  // (q (q^2 - 1))^3
  std::vector<OrbitInfo> orbits;  // in fixed label order
};

// Decompose the Lagrangians under SL2(F_q)^3.  Orbits are seeded at the five
// labelled planes; if any subspace remains outside their union, the orbit
// picture has genuinely changed and UnmatchedOrbit is thrown.  Every entry
// satisfies size * stabilizer_order == group_order.
OrbitReport orbit_decompose(long q);

// Exhaustive check that the closed-form stabilizer shapes instantiated over
// F_q are exactly the brute-force stabilizers of the labelled planes: each
// parametric member stabilizes, and the counts match the parametric order
// polynomial for every label.  (Group equality follows from containment
// plus order equality.)
bool verify_parametric_stabilizers(long q);

struct XOrbitInfo {
  const char* label;
  long long size;
  long long stabilizer_order;
  bool matches_plane_orbit;  // size == (q-1) * size of the plane orbit
};

struct XPointReport {
  long q;
  long long xpoint_count;    // (q-1) * lagrangian_count, verified by listing
  long long orbit_count;     // number of seeded orbits (expected 5)
  bool covers;               // the seeded orbits exhaust all points
  bool bijection;            // matches_plane_orbit for every label
  bool n0_contained;         // trace-zero unipotent triples fix the open seed
  std::vector<XOrbitInfo> orbits;
};

// Decompose the scaled Plucker points under the same action (q <= 3;
// ResourceBound beyond).  Verifies the point count, the five-orbit picture
// seeded at the labelled representatives, the orbit-set bijection with the
// plane decomposition, and that the trace-zero unipotent family fixes the
// open-orbit representative pointwise.
XPointReport xpoints_decompose(long q);

}  // namespace triadic
