// SPDX-License-Identifier: MIT

#include "triadic/padic.hpp"

#include <algorithm>

namespace triadic {

PAdicContext::PAdicContext(long p_, int K_, long max_cells_, int weil_k_max_)
    : p(p_), K(K_), max_cells(max_cells_), weil_k_max(weil_k_max_) {
  require(p != 2, ErrorCode::UnsupportedPrime, "p = 2 is not supported");
  require(p > 2 && is_prime(p), ErrorCode::UnsupportedPrime,
          "p must be an odd prime");
  require(K >= 1 && K <= 24, ErrorCode::InvalidArgument,
          "character depth K must be in [1, 24]");
  // Exponent arithmetic in Q(zeta_{4 p^K}) uses int64: keep N = 4 p^K < 2^62.
  require(mpz_sizeinbase(root_order().get_mpz_t(), 2) <= 62,
          ErrorCode::InvalidArgument, "4 * p^K must fit in 62 bits");
  require(max_cells > 0, ErrorCode::InvalidArgument, "max_cells must be positive");
  require(weil_k_max >= 1, ErrorCode::InvalidArgument, "weil_k_max must be >= 1");
}

Int PAdicContext::root_order() const {
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(K));
  return 4 * pk;
}

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
  require(a != 0 && b != 0, ErrorCode::InvalidArgument,
          "hilbert symbol needs nonzero arguments");
  require(p > 2 && is_prime(p), ErrorCode::UnsupportedPrime,
          "hilbert symbol implemented for odd primes");
  long alpha = val_p(a, p), beta = val_p(b, p);
  Rat ur = unit_part(a, p), wr = unit_part(b, p);
  // unit_part of a rational is a p-unit rational; reduce it to an integer
  // unit mod p for the Legendre symbol.
  Int pp(p);
  Int u = residue_mod(ur, pp, p);
  Int w = residue_mod(wr, pp, p);
  int lu = legendre(u, p), lw = legendre(w, p);
  int s = 1;
  if (beta % 2 != 0) s *= lu;
  if (alpha % 2 != 0) s *= lw;
  if ((alpha % 2 != 0) && (beta % 2 != 0) && ((p - 1) / 2) % 2 != 0) s = -s;
  return s;
}

int hilbert_symbol_oracle(const Rat& a, const Rat& b, long p) {
  require(a != 0 && b != 0, ErrorCode::InvalidArgument,
          "hilbert symbol needs nonzero arguments");
  require(p > 2 && p <= 13 && is_prime(p), ErrorCode::UnsupportedPrime,
          "oracle limited to small odd primes");
  long P3 = p * p * p;
  // (a,b) depends only on square classes; normalize to integers p^e * unit
  // with e in {0,1} so the mod-p^3 search is faithful.
  auto normalize = [&](const Rat& x) -> long {
    long v = val_p(x, p);
    Rat u = unit_part(x, p);
    long ui = residue_mod(u, Int(P3), p).get_si();
    long r = ui;
    if (((v % 2) + 2) % 2 == 1) r = (r * p) % P3;
    return r;
  };
  long ai = normalize(a), bi = normalize(b);
  // z^2 = a x^2 + b y^2 is solvable in Q_p iff it has a primitive solution
  // mod p^3 (Hensel lifting at odd p needs slack 2*val(2z) + 1 <= 3 when
  // coefficient valuations are in {0,1}).  Precompute which residues are
  // squares of units / squares of anything, then sweep (x, y).
  std::vector<char> sq_any(P3, 0), sq_unit(P3, 0);
  for (long z = 0; z < P3; ++z) {
    long r = (z * z) % P3;
    sq_any[r] = 1;
    if (z % p != 0) sq_unit[r] = 1;
  }
  for (long x = 0; x < P3; ++x) {
    long ax2 = (ai * ((x * x) % P3)) % P3;
    bool x_unit = (x % p != 0);
    for (long y = 0; y < P3; ++y) {
      long rhs = (ax2 + bi * ((y * y) % P3)) % P3;
      // Primitivity: if x or y is a unit any z works, otherwise z must be one.
      if ((x_unit || y % p != 0) ? sq_any[rhs] : sq_unit[rhs]) return 1;
    }
  }
  return -1;
}

QuadraticSpace::QuadraticSpace(RatMat gram) : J_(std::move(gram)) {
  d_ = static_cast<int>(J_.size());
  require(d_ > 0 && d_ % 2 == 0, ErrorCode::InvalidArgument,
          "quadratic space dimension must be even and positive");
  for (int i = 0; i < d_; ++i) {
    require(static_cast<int>(J_[i].size()) == d_, ErrorCode::InvalidArgument,
            "Gram matrix must be square");
    for (int j = 0; j < d_; ++j)
      require(J_[i][j] == J_[j][i], ErrorCode::InvalidArgument,
              "Gram matrix must be symmetric");
  }
  det_ = rmat_det(J_);
  require(det_ != 0, ErrorCode::InvalidArgument, "Gram matrix must be nondegenerate");
}

Rat QuadraticSpace::q_value(const std::vector<Rat>& v) const {
  require(static_cast<int>(v.size()) == d_, ErrorCode::InvalidArgument,
          "vector dimension mismatch");
  Rat s(0);
  for (int i = 0; i < d_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < d_; ++j) s += v[i] * J_[i][j] * v[j];
  }
  return s / 2;
}

Rat QuadraticSpace::pairing(const std::vector<Rat>& v,
                            const std::vector<Rat>& w) const {
  require(static_cast<int>(v.size()) == d_ &&
              static_cast<int>(w.size()) == d_,
          ErrorCode::InvalidArgument, "vector dimension mismatch");
  Rat s(0);
  for (int i = 0; i < d_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < d_; ++j) s += v[i] * J_[i][j] * w[j];
  }
  return s;
}

int QuadraticSpace::chi(const Rat& a, long p) const {
  require(a != 0, ErrorCode::InvalidArgument, "chi at zero");
  Rat disc = det_;
  if ((d_ / 2) % 2 != 0) disc = -disc;
  return hilbert_symbol(a, disc, p);
}

bool QuadraticSpace::unimodular_at(long p) const {
  if (val_p(det_, p) != 0) return false;
  for (const auto& row : J_)
    for (const auto& x : row)
      if (x != 0 && val_p(x, p) < 0) return false;
  return true;
}

Rat QuadraticSpace::similitude(const RatMat& g) const {
  require(static_cast<int>(g.size()) == d_, ErrorCode::InvalidArgument,
          "similitude matrix dimension mismatch");
  // Compute g J g^T and compare with lambda J entrywise, deriving lambda
  // from the first nonzero entry of J.
  RatMat gJgT = rmat_mul(rmat_mul(g, J_), rmat_transpose(g));
  Rat lambda;
  bool found = false;
  for (int i = 0; i < d_ && !found; ++i)
    for (int j = 0; j < d_ && !found; ++j)
      if (J_[i][j] != 0) {
        lambda = gJgT[i][j] / J_[i][j];
        found = true;
      }
  require(found, ErrorCode::Internal, "zero Gram matrix slipped through");
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (gJgT[i][j] != lambda * J_[i][j])
        fail(ErrorCode::NotSimilitude, "matrix does not scale the form");
  require(lambda != 0, ErrorCode::NotSimilitude, "degenerate similitude");
  return lambda;
}

Rat QuadraticSpace::similitude(const Mat2& g) const {
  require(d_ == 2, ErrorCode::InvalidArgument,
          "2x2 similitude test on a non-binary space");
  RatMat gm{{g[0][0], g[0][1]}, {g[1][0], g[1][1]}};
  return similitude(gm);
}

long QuadraticSpace::vec_val(const std::vector<Rat>& v, long p) {
  long m = VAL_INF;
  for (const auto& x : v)
    if (x != 0) m = std::min(m, val_p(x, p));
  return m;
}

QuadTriple::QuadTriple(std::vector<QuadraticSpace> s) : spaces(std::move(s)) {
  require(spaces.size() == 3, ErrorCode::InvalidArgument,
          "a triple needs exactly three quadratic spaces");
}

int QuadTriple::total_dim() const {
  return spaces[0].dim() + spaces[1].dim() + spaces[2].dim();
}

}  // namespace triadic
