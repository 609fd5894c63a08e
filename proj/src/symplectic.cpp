// SPDX-License-Identifier: MIT

#include "triadic/symplectic.hpp"

#include <algorithm>

namespace triadic {

Mat6 symplectic_form() {
  Mat6 J = mat6_zero();
  for (int i = 0; i < 3; ++i) {
    J[i][i + 3] = Rat(1);
    J[i + 3][i] = Rat(-1);
  }
  return J;
}

Sp6Element::Sp6Element(Mat6 M) : M_(std::move(M)) {
  Mat6 J = symplectic_form();
  Mat6 lhs = mat6_mul(mat6_mul(M_, J), mat6_transpose(M_));
  require(mat6_equal(lhs, J), ErrorCode::NotSymplectic,
          "matrix does not preserve the symplectic form");
}

Sp6Element Sp6Element::identity() { return Sp6Element(mat6_identity()); }

Sp6Element Sp6Element::operator*(const Sp6Element& o) const {
  return Sp6Element(mat6_mul(M_, o.M_), Unchecked{});
}

Sp6Element Sp6Element::inverse() const {
  // From g J g^T = J and J^2 = -I:  g^{-1} = -J g^T J.
  Mat6 J = symplectic_form();
  Mat6 inv = mat6_mul(mat6_mul(J, mat6_transpose(M_)), J);
  for (auto& row : inv)
    for (auto& x : row) x = -x;
  return Sp6Element(std::move(inv), Unchecked{});
}

Mat2 sl2_n(const Rat& t) { return {{{Rat(1), t}, {Rat(0), Rat(1)}}}; }

Mat2 sl2_t(const Rat& a) {
  require(a != 0, ErrorCode::InvalidArgument, "torus entry must be nonzero");
  return {{{a, Rat(0)}, {Rat(0), Rat(1) / a}}};
}

Mat2 sl2_w() { return {{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}}}; }

Sp6Element embed_triple(const std::array<Mat2, 3>& g) {
  Mat6 M = mat6_zero();
  for (int i = 0; i < 3; ++i) {
    require(mat2_det(g[i]) == 1, ErrorCode::NotSpecialLinear,
            "embedded factors must have determinant 1");
    M[i][i] = g[i][0][0];
    M[i][i + 3] = g[i][0][1];
    M[i + 3][i] = g[i][1][0];
    M[i + 3][i + 3] = g[i][1][1];
  }
  return Sp6Element(std::move(M));
}

const std::array<std::array<int, 3>, 20> kPluckerTriples = {{
    {0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 1, 5}, {0, 2, 3},
    {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {0, 4, 5},
    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
    {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}, {3, 4, 5},
}};

Vec20 plucker(const Sp6Element& g) {
  const Mat6& M = g.mat();
  Vec20 out;
  for (int k = 0; k < 20; ++k) {
    const auto& c = kPluckerTriples[k];
    // det of rows 3,4,5 restricted to columns c[0] < c[1] < c[2]
    const Rat &a = M[3][c[0]], &b = M[3][c[1]], &cc = M[3][c[2]];
    const Rat &d = M[4][c[0]], &e = M[4][c[1]], &f = M[4][c[2]];
    const Rat &x = M[5][c[0]], &y = M[5][c[1]], &z = M[5][c[2]];
    out[k] = a * (e * z - f * y) - b * (d * z - f * x) + cc * (d * y - e * x);
  }
  return out;
}

long cell_index(const Sp6Element& g, long p) {
  long m = VAL_INF;
  for (const auto& x : plucker(g))
    if (x != 0) m = std::min(m, val_p(x, p));
  require(m < VAL_INF, ErrorCode::Internal,
          "vanishing Plucker vector on a group element");
  return m;
}

Rat basic_b_cell(long cell, long q) {
  if (cell < 0) return Rat(0);
  Rat s(0), qq(q);
  for (long j = 0; 2 * j <= cell; ++j) {
    Rat term(1);
    for (long i = 0; i < 2 * j; ++i) term *= qq;
    s += term;
  }
  return s;
}

Rat basic_b(const Sp6Element& g, long p) {
  return basic_b_cell(cell_index(g, p), p);
}

Sp6Element cell_representative(const Rat& x, long c) {
  require(x != 0, ErrorCode::InvalidArgument, "representative needs x != 0");
  Mat6 M = mat6_identity();
  Rat xc(1);
  long n = c >= 0 ? c : -c;
  for (long i = 0; i < n; ++i) xc *= x;
  if (c < 0) xc = Rat(1) / xc;
  M[0][0] = Rat(1) / xc;
  M[3][3] = xc;
  return Sp6Element(std::move(M));
}

const char* orbit_label_name(OrbitLabel a) {
  switch (a) {
    case OrbitLabel::L000: return "000";
    case OrbitLabel::L100: return "100";
    case OrbitLabel::L010: return "010";
    case OrbitLabel::L001: return "001";
    case OrbitLabel::L111: return "111";
  }
  return "?";
}

OrbitLabel orbit_label_from_name(const std::string& s) {
  if (s == "000") return OrbitLabel::L000;
  if (s == "100") return OrbitLabel::L100;
  if (s == "010") return OrbitLabel::L010;
  if (s == "001") return OrbitLabel::L001;
  if (s == "111") return OrbitLabel::L111;
  fail(ErrorCode::Parse, "unknown plane label: " + s);
}

namespace {

Mat6 rows_to_mat6(const std::array<std::array<int, 6>, 6>& rows) {
  Mat6 M = mat6_zero();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) M[i][j] = Rat(rows[i][j]);
  return M;
}

}  // namespace

Mat6 gamma_matrix(OrbitLabel a) {
  switch (a) {
    case OrbitLabel::L000:
      return rows_to_mat6({{{0, 0, 0, -1, 0, 0},
                            {0, 1, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0},
                            {1, 1, 1, 0, 0, 0},
                            {0, 0, 0, -1, 1, 0},
                            {0, 0, 0, -1, 0, 1}}});
    case OrbitLabel::L100:
      return rows_to_mat6({{{1, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 1, 0, 0},
                            {0, 0, 0, 0, 1, 1},
                            {0, 1, -1, 0, 0, 0}}});
    case OrbitLabel::L010:
      return rows_to_mat6({{{0, 1, 0, 0, 0, 0},
                            {1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 1, 0, 1},
                            {1, 0, -1, 0, 0, 0}}});
    case OrbitLabel::L001:
      return rows_to_mat6({{{0, 0, 1, 0, 0, 0},
                            {1, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 0, 1, 1, 0},
                            {1, -1, 0, 0, 0, 0}}});
    case OrbitLabel::L111:
      return mat6_identity();
  }
  fail(ErrorCode::Internal, "unreachable label");
}

RatMat plane_matrix(OrbitLabel a) {
  Mat6 g = gamma_matrix(a);
  RatMat W(3, std::vector<Rat>(6));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) W[i][j] = g[i + 3][j];
  return W;
}

bool stabilizes_plane(OrbitLabel a, const std::array<Mat2, 3>& g) {
  RatMat W = plane_matrix(a);
  RatMat E(6, std::vector<Rat>(6));
  {
    const Sp6Element emb = embed_triple(g);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) E[i][j] = emb.mat()[i][j];
  }
  RatMat moved = rmat_mul(W, E);
  RatMat base = W;
  rmat_rref(moved);
  rmat_rref(base);
  return moved == base;
}

bool fixes_plucker_point(OrbitLabel a, const std::array<Mat2, 3>& g) {
  Sp6Element gamma(gamma_matrix(a));
  Sp6Element moved = gamma * embed_triple(g);
  return plucker(moved) == plucker(gamma);
}

Rat plucker_norm(const Sp6Element& g, long p) {
  return pow_p(p, -cell_index(g, p));
}

long iwasawa_cell(const Sp6Element& g, long p) { return cell_index(g, p); }

Sp6Element gamma_rep(OrbitLabel a) { return Sp6Element(gamma_matrix(a)); }

RatMat isotropic_rep(OrbitLabel a) { return plane_matrix(a); }

namespace {

void require_sl2_slots(const std::array<Mat2, 3>& g) {
  for (const Mat2& m : g)
    require(mat2_det(m) == 1, ErrorCode::NotSpecialLinear,
            "stabilizer test needs determinant-1 slots");
}

bool upper(const Mat2& m) { return m[1][0] == 0; }

bool unipotent_upper(const Mat2& m) {
  return m[1][0] == 0 && m[0][0] == 1 && m[1][1] == 1;
}

// d m d with d = diag(1, -1): negate the off-diagonal entries.
Mat2 dconj(const Mat2& m) {
  return {{{m[0][0], -m[0][1]}, {-m[1][0], m[1][1]}}};
}

bool mat2_equal(const Mat2& a, const Mat2& b) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

}  // namespace

bool stabilizer_member(OrbitLabel a, const std::array<Mat2, 3>& g) {
  require_sl2_slots(g);
  switch (a) {
    case OrbitLabel::L000:
      return upper(g[0]) && upper(g[1]) && upper(g[2]) &&
             g[0][0][0] == g[1][0][0] && g[0][0][0] == g[2][0][0] &&
             g[0][0][1] + g[1][0][1] + g[2][0][1] == 0;
    case OrbitLabel::L100:
      return upper(g[0]) && mat2_equal(g[2], dconj(g[1]));
    case OrbitLabel::L010:
      return upper(g[1]) && mat2_equal(g[2], dconj(g[0]));
    case OrbitLabel::L001:
      return upper(g[2]) && mat2_equal(g[1], dconj(g[0]));
    case OrbitLabel::L111:
      return upper(g[0]) && upper(g[1]) && upper(g[2]);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

bool point_stabilizer_member(OrbitLabel a, const std::array<Mat2, 3>& g) {
  require_sl2_slots(g);
  switch (a) {
    case OrbitLabel::L000:
      return unipotent_upper(g[0]) && unipotent_upper(g[1]) &&
             unipotent_upper(g[2]) &&
             g[0][0][1] + g[1][0][1] + g[2][0][1] == 0;
    case OrbitLabel::L100:
      return unipotent_upper(g[0]) && mat2_equal(g[2], dconj(g[1]));
    case OrbitLabel::L010:
      return unipotent_upper(g[1]) && mat2_equal(g[2], dconj(g[0]));
    case OrbitLabel::L001:
      return unipotent_upper(g[2]) && mat2_equal(g[1], dconj(g[0]));
    case OrbitLabel::L111:
      return upper(g[0]) && upper(g[1]) && upper(g[2]) &&
             g[0][0][0] * g[1][0][0] * g[2][0][0] == 1;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

}  // namespace triadic
