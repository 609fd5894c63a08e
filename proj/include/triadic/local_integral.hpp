// SPDX-License-Identifier: MIT
//
// The local integral of a cell function against the triple Weil
// representation at an odd prime p:
//
//     I(f1)(v) = int_{N0 \ SL2^3} f1(gamma_000 g) (rho(g) Phi)(v) dg,
//
// where Phi is the unit-lattice indicator on V1 + V2 + V3, rho the triple
// Weil representation attached to the three Gram matrices, gamma_000 the
// open-orbit representative, and N0 the trace-zero unipotent triple group
// stabilizing it.  f1 is any function of the Iwasawa cell supported on
// nonnegative cells (the basic function b and its truncations included).
//
// Measure normalizations (fixed once and used consistently everywhere):
//   * vol(SL2(Z_p)^3) = 1 for the compact factor,
//   * vol(Z_p^x) = 1 for each multiplicative torus coordinate,
//   * the quotient N0 \ N_G is coordinatized by S = t1 + t2 + t3 (the sum of
//     the three unipotent parameters) with the invariant measure dS
//     normalized by vol(S in Z_p) = 1.
//
// Two independent evaluators are provided:
//   local_integral_closed   closed-form lattice-point sum (pure rational
//                           arithmetic, fast);
//   local_integral_oracle   direct Iwasawa-coordinate summation built from
//                           the Schwartz/Weil operators: torus factors come
//                           from actual weil_torus applications, phases are
//                           summed exactly over unit cosets of each S-shell,
//                           and every cell value the integrand consumes is
//                           cross-checked against the Plucker vector of an
//                           actual group element on that shell.
// Their agreement on a diverse battery of points is the headline invariant
// of the library.
//
// Domain: the integrand is supported on points v = (v1, v2, v3) with equal
// form values Q1(v1) = Q2(v2) = Q3(v3) and at most one zero slot; points
// outside that locus are rejected with NotInDomain.  Points with a
// non-integral slot give 0.  All three Gram matrices must be p-unimodular
// (UnsupportedForm otherwise).

#pragma once

#include <array>
#include <map>
#include <vector>

#include "triadic/cyclotomic.hpp"
#include "triadic/padic.hpp"
#include "triadic/rational.hpp"

namespace triadic {

// A point of V = V1 + V2 + V3: three rational row vectors of lengths d_i.
struct PointV {
  std::array<std::vector<Rat>, 3> slots;
};

// Shape check: slot lengths must match the three Gram dimensions.
void validate_point_shape(const QuadTriple& T, const PointV& v);

// Everything the integrators need to know about a point, computed once.
struct PointProfile {
  std::array<long, 3> ord;      // min entry valuation per slot; VAL_INF for 0
  std::array<Rat, 3> q_values;  // Q_i(v_i)
  Rat total_q;                  // Q_1(v_1) + Q_2(v_2) + Q_3(v_3)
  Rat common_q;                 // total_q / 3 (the shared value on the locus)
  int zero_count;               // number of zero slots
  int zero_slot;                // index of the zero slot, or -1
  bool integral;                // all slots p-integral
  bool on_locus;                // Q_1(v_1) = Q_2(v_2) = Q_3(v_3)
  bool in_v_prime;              // at most one zero slot
};

PointProfile profile_point(const QuadTriple& T, const PointV& v, long p);

// A finitely supported map  cell index -> rational coefficient, used as the
// f1 datum.  Support is restricted to nonnegative cells: that is where the
// basic function and its truncations live, and it is what makes the
// enumeration truncations of the oracle provably exhaustive.
class CellFunction {
 public:
  CellFunction() = default;  // the zero function

  // Set the coefficient at a cell (cell >= 0; a zero coefficient erases).
  void set(long cell, const Rat& coeff);

  // Coefficient at a cell; 0 off the support (any cell, negatives allowed).
  Rat eval(long cell) const;

  // Largest supported cell, or -1 for the zero function.
  long max_cell() const;

  const std::map<long, Rat>& coefficients() const { return coeffs_; }

  // The basic function truncated at `cutoff`: coefficient at cell c is
  //   1 + q^2 + q^4 + ... + q^{2 floor(c/2)}   for 0 <= c <= cutoff.
  // A negative cutoff gives the zero function.
  static CellFunction basic(long q, long cutoff);

  // The indicator of a single cell.
  static CellFunction delta(long cell);

 private:
  std::map<long, Rat> coeffs_;
};

// Modulus character weight of a torus triple: prod_i |a_i|_p^2.  This is the
// Haar density factor of the Iwasawa decomposition in the coordinates used
// here (examples: (1,1,1) -> 1, (p,1,1) -> p^{-2}, (p,p,p) -> p^{-6}).
Rat modulus_weight(const std::array<Rat, 3>& a, long p);

// The largest cell the integrand can reach at v: min over nonzero slots of
// ord(v_i).  Negative for a non-integral point (where the integral is 0).
// Throws NotInDomain if more than one slot is zero.
long required_cell_cutoff(const QuadTriple& T, const PointV& v, long p);

// The f1 both CLI and tests default to: basic(p, required_cell_cutoff).
CellFunction default_cell_function(const QuadTriple& T, const PointV& v,
                                   long p);

// ---------------------------------------------------------------------------
// Closed form.
//
// For integral v on the locus, with nu = val_p(3), vQ = val_p of the total
// form value, ord_i as above and chi_i the quadratic character of slot i:
//
//   I(b)(v) = sum_{j >= 0, 2j <= min_i ord_i}
//             sum_{e in Z^3, e_i >= 0,
//                  e_i + 2j <= ord_i            (each slot),
//                  e_i <= e_j + e_k             (all three ways)}
//             [vQ >= 4j + e_1 + e_2 + e_3 + nu]
//             prod_i chi_i(p)^{e_i + 2j} p^{(e_i + 2j)(d_i/2 - 1)} .
//
// Zero slots have ord = VAL_INF: they do not bound j, their slot constraint
// is vacuous, and the total form value is then 0 (so the indicator always
// holds; the triangle inequalities keep the sum finite).
// ---------------------------------------------------------------------------

struct ClosedResult {
  Rat value;
  long long terms;  // number of (j, e) lattice points that contributed
};

ClosedResult local_integral_closed(const QuadTriple& T, const PointV& v,
                                   long p);

// ---------------------------------------------------------------------------
// Oracle: direct summation in Iwasawa coordinates.
//
// The slot-i torus factor at exponent e is obtained by genuinely applying
// weil_torus(p^{-e}) to the lattice indicator and evaluating at v_i; the
// remaining Haar weight is modulus_weight; the unipotent phase psi(S c) is
// summed exactly over unit cosets S = u p^sigma (u running over units mod
// p^M at the conductor-determined modulus M), so all cancellation is
// discovered by actual character sums; and the cell entering f1 on each
// shell is verified against iwasawa_cell of a real group element
// gamma_000 * embed(n(S/3) torus) at two shell representatives (Internal is
// thrown on any mismatch).  Truncations are computed, not guessed:
//   * slot exponents stop at ord_i (the weil_torus factor vanishes beyond);
//   * a zero slot's exponent is capped through the triangle inequalities by
//     the other two (beyond the cap the cell is negative and f1 vanishes);
//   * S-shells start where the cell becomes nonnegative and stop at
//     T0 = max(cell saturation point, conductor of psi(S c)); the remaining
//     ball contributes its exact volume times f1 at the saturated cell.
// The result is assembled in the cyclotomic field and must collapse to a
// rational; Internal is thrown if it does not.
// ---------------------------------------------------------------------------

struct OracleResult {
  CycValue value;     // the assembled field element (rational in disguise)
  Rat rational;       // the collapsed value
  long long psi_terms;  // character evaluations actually summed
  long long e_boxes;    // torus-exponent boxes with a reachable cell
  long s_depth;         // most negative S-valuation enumerated (0 if none)
  int context_depth;    // character depth K of the internal context
};

OracleResult local_integral_oracle(const QuadTriple& T, const PointV& v,
                                   const CellFunction& f1, long p);

// ---------------------------------------------------------------------------
// Absolute-value integral and its closed dominating bound.
//
// abs_integral is the same Iwasawa summation with |psi| = 1, |chi| = 1: every
// shell contributes its full measure, so the value dominates |I(b)(v)| term
// by term.  The bound is the closed form
//   no zero slot:  prod_i (ord_i + 1)^3 p^{ord_i (d_i/2 - 1)}
//   one zero slot z:  prod_{i != z} (ord_i + 1)^4 p^{ord_i (d_i/2 + d_z/2 - 2)}
// for integral v (both sides are 0 off the lattice).  The f1 used is the
// basic function truncated at required_cell_cutoff, which agrees with the
// untruncated basic function on every element the integrand meets.
// ---------------------------------------------------------------------------

struct AbsBoundReport {
  Rat integral;        // exact absolute-value integral
  Rat bound;           // closed dominating bound
  bool zero_branch;    // true if the one-zero-slot branch applied
  bool holds;          // integral <= bound
};

AbsBoundReport abs_integral_bound_check(const QuadTriple& T, const PointV& v,
                                        long p);

// ---------------------------------------------------------------------------
// Sub-oracles for the two reductions the closed form and oracle both rely
// on.  Each returns true when the shortcut matches the honest computation.
// ---------------------------------------------------------------------------

// Unit-part elimination: on the torus box e at shell valuation sigma, check
// against genuine unit representatives u mod p^2 that (a) the quadratic
// character of u p^{e_i} equals chi_i(p)^{e_i} (Hilbert symbols computed
// honestly), (b) the lattice indicator cannot see the unit, and (c) the
// Iwasawa cell of the group element with unit-twisted torus coordinates
// equals the cell at the untwisted representative.
bool unit_average_subcheck(const QuadTriple& T, const PointV& v,
                           const std::array<long, 3>& e, long sigma, long p);

// Unipotent phase: rho(n(t)) acts on the lattice indicator of each slot by
// the scalar psi(t Q_i(v_i)) at v_i; check the actual weil_n operator
// against the scalar for all three slots.
bool weil_n_phase_subcheck(const QuadTriple& T, const PointV& v, const Rat& t,
                           const PAdicContext& ctx);

}  // namespace triadic
