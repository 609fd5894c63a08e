// SPDX-License-Identifier: MIT

#include "triadic/schwartz.hpp"

#include <algorithm>
#include <functional>

namespace triadic {

namespace {

long ceil_div(long a, long b) {  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

long long pow_ll(long base, long exp) {  // exp >= 0, caller bounds the result
  long long r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

SchwartzFn::SchwartzFn(const PAdicContext& ctx, const QuadraticSpace& V, int m,
                       int n)
    : ctx_(ctx), V_(V), m_(m), n_(n) {
  require(m_ + n_ >= 0, ErrorCode::InvalidArgument,
          "window needs m + n >= 0");
  P_ = pow_ll(ctx_.p, m_ + n_);
  check_budget();
  long long total = 1;
  for (int i = 0; i < V_.dim(); ++i) total *= P_;
  values_.assign(static_cast<size_t>(total), CycValue::zero());
}

void SchwartzFn::check_budget() const {
  // P^d <= max_cells, checked without overflow.
  long long total = 1;
  for (int i = 0; i < V_.dim(); ++i) {
    require(total <= ctx_.max_cells / P_ + 1, ErrorCode::ResourceBound,
            "window exceeds the cell budget");
    total *= P_;
    require(total <= ctx_.max_cells, ErrorCode::ResourceBound,
            "window exceeds the cell budget");
  }
}

SchwartzFn SchwartzFn::lattice_indicator(const PAdicContext& ctx,
                                         const QuadraticSpace& V) {
  SchwartzFn f(ctx, V, 0, 0);
  f.values_[0] = CycValue::one();
  return f;
}

std::vector<long long> SchwartzFn::cell_tuple(long long flat) const {
  std::vector<long long> t(V_.dim());
  for (int i = 0; i < V_.dim(); ++i) {
    t[i] = flat % P_;
    flat /= P_;
  }
  return t;
}

long long SchwartzFn::flat_index(const std::vector<long long>& tuple) const {
  long long flat = 0;
  for (int i = V_.dim() - 1; i >= 0; --i) flat = flat * P_ + tuple[i];
  return flat;
}

std::vector<Rat> SchwartzFn::cell_rep(const std::vector<long long>& tuple) const {
  std::vector<Rat> r(V_.dim());
  Rat scale = pow_p(ctx_.p, -m_);
  for (int i = 0; i < V_.dim(); ++i) r[i] = Rat(to_int(tuple[i])) * scale;
  return r;
}

CycValue SchwartzFn::eval(const std::vector<Rat>& v) const {
  require(static_cast<int>(v.size()) == V_.dim(), ErrorCode::InvalidArgument,
          "point dimension mismatch");
  std::vector<long long> tuple(V_.dim());
  Rat pm = pow_p(ctx_.p, m_);
  Int P_int = to_int(P_);
  for (int i = 0; i < V_.dim(); ++i) {
    if (v[i] != 0 && val_p(v[i], ctx_.p) < -m_) return CycValue::zero();
    tuple[i] = residue_mod(v[i] * pm, P_int, ctx_.p).get_si();
  }
  return values_[static_cast<size_t>(flat_index(tuple))];
}

void SchwartzFn::set(const std::vector<Rat>& v, const CycValue& val) {
  require(static_cast<int>(v.size()) == V_.dim(), ErrorCode::InvalidArgument,
          "point dimension mismatch");
  std::vector<long long> tuple(V_.dim());
  Rat pm = pow_p(ctx_.p, m_);
  Int P_int = to_int(P_);
  for (int i = 0; i < V_.dim(); ++i) {
    require(v[i] == 0 || val_p(v[i], ctx_.p) >= -m_, ErrorCode::InvalidArgument,
            "point outside the window support");
    tuple[i] = residue_mod(v[i] * pm, P_int, ctx_.p).get_si();
  }
  values_[static_cast<size_t>(flat_index(tuple))] = val;
}

SchwartzFn SchwartzFn::refined(int new_m, int new_n) const {
  require(new_m >= m_ && new_n >= n_, ErrorCode::InvalidArgument,
          "refined window must contain the old one");
  if (new_m == m_ && new_n == n_) return *this;
  SchwartzFn g(ctx_, V_, new_m, new_n);
  long long total = g.cell_count();
  for (long long flat = 0; flat < total; ++flat) {
    auto rep = g.cell_rep(g.cell_tuple(flat));
    g.values_[static_cast<size_t>(flat)] = eval(rep);
  }
  return g;
}

SchwartzFn SchwartzFn::compacted() const {
  SchwartzFn f = *this;
  int d = V_.dim();
  bool changed = true;
  while (changed && f.m_ + f.n_ > 0) {
    changed = false;
    long long P = f.P_, total = f.cell_count();
    // Support shrink: drop m by 1 if every cell whose representative has a
    // coordinate of valuation exactly -m is zero.
    {
      bool shrinkable = true;
      for (long long flat = 0; flat < total && shrinkable; ++flat) {
        if (f.values_[static_cast<size_t>(flat)].is_zero()) continue;
        auto t = f.cell_tuple(flat);
        for (int i = 0; i < d; ++i)
          if (t[i] % f.ctx_.p != 0) {  // val(c_i) = 0 => val(rep) = -m exactly
            shrinkable = false;
            break;
          }
      }
      if (shrinkable) {
        SchwartzFn g(f.ctx_, f.V_, f.m_ - 1, f.n_);
        long long gtotal = g.cell_count();
        for (long long flat = 0; flat < gtotal; ++flat) {
          auto t = g.cell_tuple(flat);
          for (auto& c : t) c *= f.ctx_.p;  // same point in the finer window
          g.values_[static_cast<size_t>(flat)] =
              f.values_[static_cast<size_t>(f.flat_index(t))];
        }
        f = g;
        changed = true;
        continue;
      }
    }
    // Constancy coarsen: drop n by 1 if values do not depend on the top
    // base-p digit of any coordinate.
    if (f.m_ + f.n_ > 0) {
      long long top = P / f.ctx_.p;
      bool coarsenable = true;
      for (long long flat = 0; flat < total && coarsenable; ++flat) {
        auto t = f.cell_tuple(flat);
        auto base = t;
        for (auto& c : base) c %= top;
        if (!(f.values_[static_cast<size_t>(flat)] ==
              f.values_[static_cast<size_t>(f.flat_index(base))]))
          coarsenable = false;
      }
      if (coarsenable) {
        SchwartzFn g(f.ctx_, f.V_, f.m_, f.n_ - 1);
        long long gtotal = g.cell_count();
        for (long long flat = 0; flat < gtotal; ++flat) {
          auto t = g.cell_tuple(flat);  // same integers, same reps
          g.values_[static_cast<size_t>(flat)] =
              f.values_[static_cast<size_t>(f.flat_index(t))];
        }
        f = g;
        changed = true;
      }
    }
  }
  return f;
}

namespace {

void check_same_setting(const SchwartzFn& f, const SchwartzFn& g) {
  require(f.context().p == g.context().p && f.context().K == g.context().K,
          ErrorCode::DepthMismatch, "functions live in different contexts");
  require(f.space().gram() == g.space().gram(), ErrorCode::InvalidArgument,
          "functions live on different quadratic spaces");
}

}  // namespace

SchwartzFn schwartz_add(const SchwartzFn& f, const SchwartzFn& g) {
  check_same_setting(f, g);
  int m = std::max(f.window_m(), g.window_m());
  int n = std::max(f.window_n(), g.window_n());
  SchwartzFn a = f.refined(m, n), b = g.refined(m, n);
  for (long long flat = 0; flat < a.cell_count(); ++flat)
    a.set_cell(flat, a.cell_value(flat) + b.cell_value(flat));
  return a.compacted();
}

SchwartzFn schwartz_scale(const CycValue& c, const SchwartzFn& f) {
  SchwartzFn g = f;
  for (long long flat = 0; flat < g.cell_count(); ++flat)
    g.set_cell(flat, c * g.cell_value(flat));
  return g;
}

bool schwartz_equal(const SchwartzFn& f, const SchwartzFn& g) {
  check_same_setting(f, g);
  int m = std::max(f.window_m(), g.window_m());
  int n = std::max(f.window_n(), g.window_n());
  SchwartzFn a = f.refined(m, n), b = g.refined(m, n);
  for (long long flat = 0; flat < a.cell_count(); ++flat)
    if (!(a.cell_value(flat) == b.cell_value(flat))) return false;
  return true;
}

SchwartzFn weil_n(const Rat& t, const SchwartzFn& f) {
  if (t == 0) return f;
  const PAdicContext& ctx = f.context();
  require(f.space().unimodular_at(ctx.p), ErrorCode::UnsupportedForm,
          "generator action needs a self-dual lattice");
  long vt = val_p(t, ctx.p);
  // psi(t Q(v)) is constant on v + p^{n'} Z^d once t<v, p^{n'}z> and
  // t p^{2n'} Q(z) are integral: n' >= m - vt and n' >= ceil(-vt / 2).
  int n_new = std::max<long>(f.window_n(),
                             std::max<long>(f.window_m() - vt, ceil_div(-vt, 2)));
  SchwartzFn g = f.refined(f.window_m(), n_new);
  for (long long flat = 0; flat < g.cell_count(); ++flat) {
    if (g.cell_value(flat).is_zero()) continue;
    auto rep = g.cell_rep(g.cell_tuple(flat));
    CycValue phase = psi(ctx, t * f.space().q_value(rep));
    g.set_cell(flat, phase * g.cell_value(flat));
  }
  return g.compacted();
}

SchwartzFn weil_torus(const Rat& a, const SchwartzFn& f) {
  require(a != 0, ErrorCode::InvalidArgument, "torus parameter must be nonzero");
  const PAdicContext& ctx = f.context();
  require(f.space().unimodular_at(ctx.p), ErrorCode::UnsupportedForm,
          "generator action needs a self-dual lattice");
  long e = val_p(a, ctx.p);
  int d = f.dim();
  // chi_Q(a) |a|^{d/2} f(a v): support scales by a^{-1}, constancy by a.
  int m_new = static_cast<int>(f.window_m() + e);
  int n_new = static_cast<int>(f.window_n() - e);
  Rat weight = pow_p(ctx.p, -e * d / 2) * Rat(f.space().chi(a, ctx.p));
  SchwartzFn g(ctx, f.space(), m_new, n_new);
  for (long long flat = 0; flat < g.cell_count(); ++flat) {
    auto rep = g.cell_rep(g.cell_tuple(flat));
    for (auto& x : rep) x *= a;
    CycValue val = f.eval(rep);
    if (val.is_zero()) continue;
    g.set_cell(flat, val * weight);
  }
  return g.compacted();
}

SchwartzFn fourier(const SchwartzFn& f) {
  const PAdicContext& ctx = f.context();
  require(f.space().unimodular_at(ctx.p), ErrorCode::UnsupportedForm,
          "Fourier transform needs a self-dual lattice");
  int m = f.window_m(), n = f.window_n(), d = f.dim();
  require(m + n <= ctx.K, ErrorCode::PrecisionExceeded,
          "Fourier transform needs character depth beyond context K");
  long long P = f.cells_per_axis();

  // Step 1: substitute w = t J^T (row convention), a cell permutation since
  // the Gram matrix is p-unimodular: g[cell(w)] = f[cell(t)].
  SchwartzFn g(ctx, f.space(), m, n);
  const RatMat& J = f.space().gram();
  Rat pm = pow_p(ctx.p, m);
  Int P_int = to_int(P);
  for (long long flat = 0; flat < f.cell_count(); ++flat) {
    const CycValue& val = f.cell_value(flat);
    if (val.is_zero()) continue;
    auto t = f.cell_tuple(flat);
    auto rep = f.cell_rep(t);
    std::vector<long long> w(d);
    for (int i = 0; i < d; ++i) {
      Rat wi(0);
      for (int j = 0; j < d; ++j) wi += rep[j] * J[i][j];
      w[i] = residue_mod(wi * pm, P_int, ctx.p).get_si();
    }
    g.set_cell(g.flat_index(w), val);
  }

  // Step 2: separable 1-D exact DFTs of size P with root zeta_P = zeta_N^{N/P},
  // radix-p Cooley-Tukey on exponents.
  long long N = 4;
  for (int i = 0; i < ctx.K; ++i) N *= ctx.p;
  long long root = N / P;  // exponent of zeta_N giving zeta_P

  // Recursive worker on a gathered slice.
  std::function<void(std::vector<CycValue>&, long long, long long)> dft =
      [&](std::vector<CycValue>& a, long long size, long long root_exp) {
        if (size == 1) return;
        long long sub = size / ctx.p;
        std::vector<std::vector<CycValue>> parts(static_cast<size_t>(ctx.p));
        for (long r = 0; r < ctx.p; ++r) {
          parts[r].resize(static_cast<size_t>(sub));
          for (long long c = 0; c < sub; ++c)
            parts[r][static_cast<size_t>(c)] =
                a[static_cast<size_t>(r + ctx.p * c)];
          dft(parts[r], sub, root_exp * ctx.p);
        }
        for (long long k = 0; k < size; ++k) {
          CycValue s = CycValue::zero();
          for (long r = 0; r < ctx.p; ++r) {
            const CycValue& ar = parts[r][static_cast<size_t>(k % sub)];
            if (ar.is_zero()) continue;
            long long rk = (r * k) % size;
            s += CycValue::monomial(ctx, root_exp * rk, Rat(1)) * ar;
          }
          a[static_cast<size_t>(k)] = s;
        }
      };

  long long total = g.cell_count();
  long long stride = 1;
  for (int axis = 0; axis < d; ++axis) {
    std::vector<CycValue> slice(static_cast<size_t>(P));
    for (long long base = 0; base < total; ++base) {
      if ((base / stride) % P != 0) continue;
      for (long long k = 0; k < P; ++k)
        slice[static_cast<size_t>(k)] = g.cell_value(base + k * stride);
      dft(slice, P, root);
      for (long long k = 0; k < P; ++k)
        g.set_cell(base + k * stride, slice[static_cast<size_t>(k)]);
    }
    stride *= P;
  }

  // Step 3: coset volume p^{-n} per coordinate; result lives on window (n, m).
  Rat vol = pow_p(ctx.p, -static_cast<long>(n) * d);
  SchwartzFn out(ctx, f.space(), n, m);
  for (long long flat = 0; flat < total; ++flat) {
    const CycValue& val = g.cell_value(flat);
    if (val.is_zero()) continue;
    out.set_cell(flat, val * vol);
  }
  return out.compacted();
}

SchwartzFn weil_w(const SchwartzFn& f) {
  CycValue gamma = weil_index(f.space(), f.context());
  return schwartz_scale(gamma, fourier(f));
}

SchwartzFn weil_apply(const Mat2& g, const SchwartzFn& f) {
  require(mat2_det(g) == 1, ErrorCode::NotSpecialLinear,
          "Weil representation acts through SL2");
  const Rat &a = g[0][0], &b = g[0][1], &c = g[1][0], &d = g[1][1];
  if (c == 0) {
    // g = t(a) n(b/a): apply rho(n(b/a)) first, then rho(t(a)).
    return weil_torus(a, weil_n(b / a, f));
  }
  // g = n(a/c) w t(-c) n(d/c): apply right-to-left.
  SchwartzFn r = weil_n(d / c, f);
  r = weil_torus(-c, r);
  r = weil_w(r);
  r = weil_n(a / c, r);
  return r;
}

SchwartzFn translate(const RatMat& h, const SchwartzFn& f) {
  const PAdicContext& ctx = f.context();
  int d = f.dim();
  require(static_cast<int>(h.size()) == d, ErrorCode::InvalidArgument,
          "translation matrix dimension mismatch");
  f.space().similitude(h);  // NotSimilitude if h does not scale the form
  RatMat hinv = rmat_inverse(h);
  auto vmin = [&](const RatMat& M) {
    long v = VAL_INF;
    for (const auto& row : M)
      for (const auto& x : row)
        if (x != 0) v = std::min(v, val_p(x, ctx.p));
    return v;
  };
  // L(h) f(v) = f(v h^{-1}): support grows by h, constancy by h^{-1}.
  int m_new = static_cast<int>(f.window_m() - vmin(h));
  int n_new = static_cast<int>(f.window_n() - vmin(hinv));
  SchwartzFn g(ctx, f.space(), m_new, n_new);
  for (long long flat = 0; flat < g.cell_count(); ++flat) {
    auto rep = g.cell_rep(g.cell_tuple(flat));
    std::vector<Rat> u(d, Rat(0));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) u[j] += rep[i] * hinv[i][j];
    CycValue val = f.eval(u);
    if (val.is_zero()) continue;
    g.set_cell(flat, val);
  }
  return g.compacted();
}

SchwartzFn translate(const Mat2& h, const SchwartzFn& f) {
  RatMat hm{{h[0][0], h[0][1]}, {h[1][0], h[1][1]}};
  return translate(hm, f);
}

ProductFn::ProductFn(std::vector<ProductTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_)
    require(t.factors.size() == 3, ErrorCode::InvalidArgument,
            "product terms need exactly three factors");
}

ProductFn ProductFn::lattice_indicator(const PAdicContext& ctx,
                                       const QuadTriple& T) {
  ProductTerm term;
  term.coeff = CycValue::one();
  for (int i = 0; i < 3; ++i)
    term.factors.push_back(SchwartzFn::lattice_indicator(ctx, T.spaces[i]));
  return ProductFn({term});
}

CycValue ProductFn::eval(const std::vector<Rat>& v1, const std::vector<Rat>& v2,
                         const std::vector<Rat>& v3) const {
  CycValue s = CycValue::zero();
  for (const auto& t : terms_) {
    CycValue prod = t.coeff;
    prod = prod * t.factors[0].eval(v1);
    if (prod.is_zero()) continue;
    prod = prod * t.factors[1].eval(v2);
    if (prod.is_zero()) continue;
    prod = prod * t.factors[2].eval(v3);
    s += prod;
  }
  return s;
}

ProductFn rho_triple(const std::array<Mat2, 3>& g, const ProductFn& F) {
  std::vector<ProductTerm> out;
  out.reserve(F.terms().size());
  for (const auto& t : F.terms()) {
    ProductTerm nt;
    nt.coeff = t.coeff;
    for (int i = 0; i < 3; ++i) nt.factors.push_back(weil_apply(g[i], t.factors[i]));
    out.push_back(std::move(nt));
  }
  return ProductFn(std::move(out));
}

ProductFn translate_triple(const std::array<RatMat, 3>& h, const ProductFn& F) {
  std::vector<ProductTerm> out;
  out.reserve(F.terms().size());
  for (const auto& t : F.terms()) {
    ProductTerm nt;
    nt.coeff = t.coeff;
    for (int i = 0; i < 3; ++i) nt.factors.push_back(translate(h[i], t.factors[i]));
    out.push_back(std::move(nt));
  }
  return ProductFn(std::move(out));
}

}  // namespace triadic
