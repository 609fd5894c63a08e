// SPDX-License-Identifier: MIT
//
// The rank-3 symplectic group, a triple product of SL2 embedded in it, and
// the Plucker/cell machinery for the quotient by the Siegel parabolic.
//
// Conventions (row vectors, right action):
//   - J_alt = [[0, I3], [-I3, 0]];  g symplectic  <=>  g J_alt g^T = J_alt.
//   - The i-th SL2 factor (i = 1, 2, 3) embeds into rows/columns {i, i+3}:
//     (i,i) = a, (i,i+3) = b, (i+3,i) = c, (i+3,i+3) = d  (1-based).
//   - The base isotropic 3-plane is W = <e4, e5, e6>.  A coset P g of the
//     stabilizer of W is encoded by the wedge of the bottom three rows of g:
//     20 coordinates indexed by lexicographic column triples.
//   - norm(g) = max_i |Plucker_i(g)|_p; the "cell" of g is
//     cell(g) = -log_q norm(g) = min_i val_p(Plucker_i(g)),
//     constant on K-double-cosets for K = Sp6(Z_p), with representative
//     c(x) = diag(x^{-c}, 1, 1, x^c, 1, 1) at cell c.
//   - The basic function depends only on the cell:
//     b(g) = 0 if cell < 0, else sum over 0 <= 2j <= cell of q^{2j}.
//
// The five labelled planes W_a (a in {000,100,010,001,111}) and the group
// elements gamma_a moving W to them drive both the stabilizer tests and the
// finite-field orbit analysis.

#pragma once

#include <array>
#include <string>

#include "triadic/matrix.hpp"
#include "triadic/rational.hpp"

namespace triadic {

// J_alt = [[0, I3], [-I3, 0]].
Mat6 symplectic_form();

class Sp6Element {
 public:
  explicit Sp6Element(Mat6 M);  // throws NotSymplectic unless M J M^T = J

  static Sp6Element identity();

  const Mat6& mat() const { return M_; }
  Sp6Element operator*(const Sp6Element& o) const;
  Sp6Element inverse() const;  // g^{-1} = -J g^T J, exact

 private:
  struct Unchecked {};
  Sp6Element(Mat6 M, Unchecked) : M_(std::move(M)) {}
  Mat6 M_;
};

// 2x2 generators of SL2.
Mat2 sl2_n(const Rat& t);  // [[1, t], [0, 1]]
Mat2 sl2_t(const Rat& a);  // [[a, 0], [0, 1/a]]
Mat2 sl2_w();              // [[0, 1], [-1, 0]]

// SL2 x SL2 x SL2 -> Sp6 block embedding (throws NotSpecialLinear).
Sp6Element embed_triple(const std::array<Mat2, 3>& g);

using Vec20 = std::array<Rat, 20>;

// Lexicographic column triples (0-based) indexing Plucker coordinates.
extern const std::array<std::array<int, 3>, 20> kPluckerTriples;

// Wedge of the bottom three rows of g: the 20 ordered 3x3 minors.
Vec20 plucker(const Sp6Element& g);

// cell(g) = min valuation over the (never all-zero) Plucker coordinates.
long cell_index(const Sp6Element& g, long p);

// Basic function value from a cell index: 0 for cell < 0, else
// 1 + q^2 + ... + q^{2 floor(cell/2)}.
Rat basic_b_cell(long cell, long q);

// b(g) at the prime p (q = p).
Rat basic_b(const Sp6Element& g, long p);

// diag(x^{-c}, 1, 1, x^c, 1, 1): double-coset representative of cell c.
Sp6Element cell_representative(const Rat& x, long c);

// The five labelled isotropic planes.
enum class OrbitLabel { L000, L100, L010, L001, L111 };

const char* orbit_label_name(OrbitLabel a);           // "000", ..., "111"
OrbitLabel orbit_label_from_name(const std::string&);  // throws Parse

// gamma_a: a symplectic element with W gamma_a = W_a.
Mat6 gamma_matrix(OrbitLabel a);

// W_a as a 3x6 matrix (the bottom three rows of gamma_a).
RatMat plane_matrix(OrbitLabel a);

// Space-level stabilizer test: does the embedded triple preserve the
// row-span of W_a?  (row-span(W_a embed(g)) == row-span(W_a))
bool stabilizes_plane(OrbitLabel a, const std::array<Mat2, 3>& g);

// Point-level stabilizer test: does it fix the Plucker vector of gamma_a
// exactly (not just up to scale)?
bool fixes_plucker_point(OrbitLabel a, const std::array<Mat2, 3>& g);

// |g|_p = p^{-cell_index(g, p)}: the norm read off the Plucker vector of the
// bottom rows alone (no matrix decomposition anywhere).
Rat plucker_norm(const Sp6Element& g, long p);

// The Iwasawa cell of g: the integer c with |g|_p = p^{-c}.  Same value as
// cell_index; named for the coordinate enumeration that consumes it.
long iwasawa_cell(const Sp6Element& g, long p);

// gamma_a as a checked symplectic element.
Sp6Element gamma_rep(OrbitLabel a);

// The labelled isotropic plane W_a as a 3x6 row basis (= plane_matrix).
RatMat isotropic_rep(OrbitLabel a);

// Closed-form membership test for the stabilizer of the plane W_a inside
// SL2^3.  Writing d = diag(1, -1) and "upper" for an SL2 matrix with zero
// lower-left entry, the five shapes are:
//   000: all slots upper with one common diagonal (a, 1/a), top-right
//        entries summing to 0;
//   100: slot 1 upper, slot 3 = d (slot 2) d;
//   010: slot 2 upper, slot 3 = d (slot 1) d;
//   001: slot 3 upper, slot 2 = d (slot 1) d;
//   111: all slots upper.
// Property-tested against stabilizes_plane (geometric row-span agreement).
bool stabilizer_member(OrbitLabel a, const std::array<Mat2, 3>& g);

// Closed-form membership test for the stabilizer of the Plucker point of
// gamma_a (a finer condition than stabilizer_member):
//   000: slots n(t_i) with t_1 + t_2 + t_3 = 0;
//   100: slot 1 = n(t), slot 3 = d (slot 2) d   (similarly 010, 001);
//   111: slots [[1/b_i, t_i], [0, b_i]] with b_1 b_2 b_3 = 1.
// Property-tested against fixes_plucker_point.
bool point_stabilizer_member(OrbitLabel a, const std::array<Mat2, 3>& g);

}  // namespace triadic
