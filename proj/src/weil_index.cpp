// SPDX-License-Identifier: MIT

#include "triadic/weil_index.hpp"

#include <algorithm>

namespace triadic {

namespace {

// Valuation with VAL_INF for 0, used for pivot comparisons.
long vv(const Rat& x, long p) { return x == 0 ? VAL_INF : val_p(x, p); }

}  // namespace

PadicDiagonalization diagonalize_gram(const RatMat& J, long p) {
  size_t d = J.size();
  RatMat D = J;
  RatMat M(d, std::vector<Rat>(d, Rat(0)));
  for (size_t i = 0; i < d; ++i) M[i][i] = Rat(1);

  // Apply the symmetric elementary operation rows/cols (D <- E D E^T) and
  // track it into M (M <- E M).
  auto add_row = [&](size_t dst, size_t src, const Rat& f) {
    for (size_t c = 0; c < d; ++c) D[dst][c] += f * D[src][c];
    for (size_t c = 0; c < d; ++c) D[c][dst] += f * D[c][src];
    for (size_t c = 0; c < d; ++c) M[dst][c] += f * M[src][c];
  };
  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(D[a], D[b]);
    for (size_t r = 0; r < d; ++r) std::swap(D[r][a], D[r][b]);
    std::swap(M[a], M[b]);
  };

  for (size_t i = 0; i < d; ++i) {
    // Find the minimal valuation in the remaining block, preferring diagonal
    // entries; at odd p an off-diagonal minimum can always be surfaced onto
    // the diagonal by x_j += x_k (2 is a unit, so the cross term dominates).
    long best_diag = VAL_INF;
    size_t bd = i;
    for (size_t j = i; j < d; ++j)
      if (vv(D[j][j], p) < best_diag) {
        best_diag = vv(D[j][j], p);
        bd = j;
      }
    long best_off = VAL_INF;
    size_t bj = i, bk = i;
    for (size_t j = i; j < d; ++j)
      for (size_t k = j + 1; k < d; ++k)
        if (vv(D[j][k], p) < best_off) {
          best_off = vv(D[j][k], p);
          bj = j;
          bk = k;
        }
    if (best_off < best_diag) {
      // val(D_jj + D_kk + 2 D_jk) = val(D_jk) since both diagonal entries
      // have strictly larger valuation and 2 is a p-unit.
      add_row(bj, bk, Rat(1));
      bd = bj;
      best_diag = vv(D[bd][bd], p);
      require(best_diag == best_off, ErrorCode::Internal,
              "surfacing an off-diagonal pivot failed");
    }
    require(best_diag < VAL_INF, ErrorCode::InvalidArgument,
            "degenerate block during diagonalization");
    swap_rows(i, bd);
    for (size_t r = i + 1; r < d; ++r) {
      if (D[r][i] == 0) continue;
      Rat f = -D[r][i] / D[i][i];
      require(vv(f, p) >= 0, ErrorCode::Internal,
              "elimination multiplier not p-integral");
      add_row(r, i, f);
    }
  }

  PadicDiagonalization out;
  out.diag.reserve(d);
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < d; ++j)
      require(i == j || D[i][j] == 0, ErrorCode::Internal,
              "diagonalization left an off-diagonal entry");
    out.diag.push_back(D[i][i]);
  }
  require(vv(rmat_det(M), p) == 0, ErrorCode::Internal,
          "change of basis is not p-unimodular");
  out.M = std::move(M);
  return out;
}

namespace {

// sum_{y mod p^L} zeta_{p^L}^{u y^2}  for a p-unit residue u, by histogram.
// L == 0 gives 1.  Exponents are lifted to zeta_N via N/p^L.
CycValue gauss_sum_1d(const PAdicContext& ctx, const Rat& u_rat, long L) {
  if (L <= 0) return CycValue::one();
  require(L <= ctx.K, ErrorCode::PrecisionExceeded,
          "Gauss sum needs character depth beyond context K");
  long long PL = 1;
  for (long i = 0; i < L; ++i) PL *= ctx.p;
  long long u = residue_mod(u_rat, to_int(PL), ctx.p).get_si();
  long long N = 4;
  for (int i = 0; i < ctx.K; ++i) N *= ctx.p;
  long long lift = N / PL;  // zeta_{p^L} = zeta_N^{N/p^L}
  CycAccumulator acc(ctx);
  for (long long y = 0; y < PL; ++y) {
    long long r = (u * ((y * y) % PL)) % PL;
    acc.add(lift * r);
  }
  return acc.value();
}

}  // namespace

CycValue weil_index(const QuadraticSpace& V, const PAdicContext& ctx) {
  PadicDiagonalization dg = diagonalize_gram(V.gram(), ctx.p);
  int d = V.dim();
  // Q(v) = sum c_i x_i^2 with c_i = diag_i / 2.
  std::vector<Rat> c(dg.diag);
  for (auto& x : c) x /= 2;
  std::vector<long> omega(d);
  std::vector<Rat> unit(d);
  long W = 0;
  for (int i = 0; i < d; ++i) {
    omega[i] = val_p(c[i], ctx.p);
    unit[i] = unit_part(c[i], ctx.p);
    W += omega[i];
  }
  require(W == val_p(V.det(), ctx.p), ErrorCode::Internal,
          "valuation bookkeeping mismatch in Weil index");

  // Normalization |det|^{1/2}: p^{floor(W/2)} * sqrt(p)^{W mod 2}, divided out.
  long Wm = ((W % 2) + 2) % 2;
  CycValue norm = CycValue(Rat(1));
  {
    Int pf;
    long half = (W - Wm) / 2;
    mpz_ui_pow_ui(pf.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                  static_cast<unsigned long>(half >= 0 ? half : -half));
    Rat pw = (half >= 0) ? Rat(1, pf) : Rat(pf, 1);
    norm = CycValue(pw);
    if (Wm == 1) norm = norm * sqrt_p(ctx) * Rat(1, ctx.p);  // 1/sqrt(p)
  }

  CycValue prev;
  bool have_prev = false;
  for (int k = 1; k <= ctx.weil_k_max; ++k) {
    // gamma_k = prod_i p^{omega_i - k} * S(unit_i, 2k - omega_i), normalized.
    CycValue g = CycValue::one();
    Rat scale(1);
    for (int i = 0; i < d; ++i) {
      // The i-th factor is p^{-k} sum_{y mod p^{2k}} psi(u_i y^2 / p^{L}),
      // L = 2k - omega_i.  Residues repeat p^{2k - L} times (all terms are 1
      // when L <= 0), leaving p^{k - L} * S(u_i, L).
      long L = 2 * k - omega[i];
      long Lc = std::max(L, 0L);
      CycValue S = gauss_sum_1d(ctx, unit[i], Lc);
      long expo = k - Lc;
      Int pf;
      mpz_ui_pow_ui(pf.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                    static_cast<unsigned long>(expo >= 0 ? expo : -expo));
      scale *= (expo >= 0) ? Rat(pf) : Rat(1, pf);
      g = g * S;
    }
    g = g * scale;
    g = g * norm;
    if (have_prev && g == prev) return g;
    prev = g;
    have_prev = true;
  }
  fail(ErrorCode::PrecisionExceeded,
       "Weil index did not stabilize within weil_k_max rounds");
}

CycValue weil_index_raw(const QuadraticSpace& V, const PAdicContext& ctx,
                        int k) {
  require(k >= 1, ErrorCode::InvalidArgument, "depth k must be >= 1");
  int d = V.dim();
  long long P2k = 1;
  for (int i = 0; i < 2 * k; ++i) {
    P2k *= ctx.p;
    require(P2k <= 2'000'000, ErrorCode::ResourceBound,
            "raw Weil sum too large");
  }
  double total_d = 1;
  for (int i = 0; i < d; ++i) total_d *= static_cast<double>(P2k);
  require(total_d <= 2e7, ErrorCode::ResourceBound, "raw Weil sum too large");

  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                static_cast<unsigned long>(k));
  Rat inv_pk = Rat(1, pk);

  CycAccumulator acc(ctx);
  std::vector<long long> idx(d, 0);
  std::vector<Rat> v(d);
  while (true) {
    for (int i = 0; i < d; ++i) v[i] = Rat(to_int(idx[i])) * inv_pk;
    acc.add(psi_exponent(ctx, V.q_value(v)));
    int pos = 0;
    while (pos < d) {
      if (++idx[pos] < P2k) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == d) break;
  }
  Int pkd;
  mpz_ui_pow_ui(pkd.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                static_cast<unsigned long>(k * d));
  return acc.value() * Rat(1, pkd);
}

}  // namespace triadic
