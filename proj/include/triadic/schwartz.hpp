// SPDX-License-Identifier: MIT
//
// Bruhat-Schwartz functions on a p-adic quadratic space, with the Weil
// representation of SL2 acting exactly.
//
// A SchwartzFn is a compactly supported, locally constant function
//     f : Q_p^d -> Q(zeta_N)
// stored densely on a "window" (m, n): support inside (p^{-m} Z_p)^d and
// constancy on cosets of (p^n Z_p)^d.  Cells are indexed by tuples
// c in [0, P)^d, P = p^{m+n}, via the coset representative x_j = c_j / p^m;
// m and n may be any integers with m + n >= 0 (negative m: support in a small
// ball; negative n: constancy coarser than the unit lattice).
//
// Generator actions (rho = Weil representation attached to psi and Q):
//   rho(n(t)) f (v) = psi(t Q(v)) f(v)                     [weil_n]
//   rho(diag(a, 1/a)) f (v) = chi_Q(a) |a|^{d/2} f(a v)    [weil_torus]
//   rho(w) f (v) = gamma(Q) * Fourier f (v),  w = [[0,1],[-1,0]],
//     Fourier f (v) = integral of f(t) psi(<v, t>) dt, self-dual dt
//                                                          [weil_w]
// and general g in SL2(Q) via the Bruhat factorization
//   c != 0:  g = n(a/c) w t(-c) n(d/c);   c == 0:  g = t(a) n(b/a).
//
// The outer (similitude) action is L(h) f (v) = f(h^{-1} v)  [translate].
//
// Fourier transform and the generator ops require the Gram matrix to be
// p-unimodular (self-dual lattice); otherwise UnsupportedForm is thrown.

#pragma once

#include <array>
#include <vector>

#include "triadic/cyclotomic.hpp"
#include "triadic/matrix.hpp"
#include "triadic/padic.hpp"
#include "triadic/weil_index.hpp"

namespace triadic {

class SchwartzFn {
 public:
  // The zero function on the given window.
  SchwartzFn(const PAdicContext& ctx, const QuadraticSpace& V, int m, int n);

  // Characteristic function of the unit lattice Z_p^d: window (0, 0).
  static SchwartzFn lattice_indicator(const PAdicContext& ctx,
                                      const QuadraticSpace& V);

  const PAdicContext& context() const { return ctx_; }
  const QuadraticSpace& space() const { return V_; }
  int dim() const { return V_.dim(); }
  int window_m() const { return m_; }
  int window_n() const { return n_; }
  long long cells_per_axis() const { return P_; }
  long long cell_count() const { return static_cast<long long>(values_.size()); }

  // Exact evaluation at any rational point.
  CycValue eval(const std::vector<Rat>& v) const;

  // Set the value on the coset containing v (v must fit the window support).
  void set(const std::vector<Rat>& v, const CycValue& val);

  // Same function on a wider/finer window (new_m >= m, new_n >= n).
  SchwartzFn refined(int new_m, int new_n) const;

  // Same function on its minimal window (support actually reaches depth m,
  // and the values genuinely vary at scale p^n).  Generator ops return
  // compacted results so chained applications stay within the cell budget.
  SchwartzFn compacted() const;

  // Cell access for transforms: flat index <-> tuple, representative point.
  std::vector<long long> cell_tuple(long long flat) const;
  long long flat_index(const std::vector<long long>& tuple) const;
  std::vector<Rat> cell_rep(const std::vector<long long>& tuple) const;
  const CycValue& cell_value(long long flat) const { return values_[flat]; }
  void set_cell(long long flat, const CycValue& v) { values_[flat] = v; }

 private:
  PAdicContext ctx_;
  QuadraticSpace V_;
  int m_, n_;
  long long P_;  // p^{m+n}
  std::vector<CycValue> values_;

  void check_budget() const;
};

// Pointwise linear combination helpers (functions must share (p, K) and V).
SchwartzFn schwartz_add(const SchwartzFn& f, const SchwartzFn& g);
SchwartzFn schwartz_scale(const CycValue& c, const SchwartzFn& f);

// Function equality (as functions on Q_p^d, independent of window).
bool schwartz_equal(const SchwartzFn& f, const SchwartzFn& g);

// Weil representation generators.
SchwartzFn weil_n(const Rat& t, const SchwartzFn& f);
SchwartzFn weil_torus(const Rat& a, const SchwartzFn& f);
SchwartzFn fourier(const SchwartzFn& f);   // no gamma factor
SchwartzFn weil_w(const SchwartzFn& f);    // gamma(Q) * fourier

// rho(g) for any g in SL2(Q) via Bruhat factorization.
SchwartzFn weil_apply(const Mat2& g, const SchwartzFn& f);

// Outer action L(h) f(v) = f(v h^{-1}) for a similitude h of the form
// (row-vector convention: h acts on points on the right).
SchwartzFn translate(const RatMat& h, const SchwartzFn& f);
SchwartzFn translate(const Mat2& h, const SchwartzFn& f);

// A finite sum of pure tensors f_1 (x) f_2 (x) f_3 on a triple of spaces.
struct ProductTerm {
  CycValue coeff;
  std::vector<SchwartzFn> factors;  // size 3
};

class ProductFn {
 public:
  explicit ProductFn(std::vector<ProductTerm> terms);

  // The basic tensor 1_{Z^d1} (x) 1_{Z^d2} (x) 1_{Z^d3}.
  static ProductFn lattice_indicator(const PAdicContext& ctx,
                                     const QuadTriple& T);

  const std::vector<ProductTerm>& terms() const { return terms_; }

  CycValue eval(const std::vector<Rat>& v1, const std::vector<Rat>& v2,
                const std::vector<Rat>& v3) const;

 private:
  std::vector<ProductTerm> terms_;
};

// Apply rho(g_i) on each tensor slot (g = triple of SL2(Q) matrices).
ProductFn rho_triple(const std::array<Mat2, 3>& g, const ProductFn& F);

// Apply L(h_i) on each slot (h = triple of similitudes, common factor not
// checked here; callers enforce it where the group law requires it).
ProductFn translate_triple(const std::array<RatMat, 3>& h, const ProductFn& F);

}  // namespace triadic
