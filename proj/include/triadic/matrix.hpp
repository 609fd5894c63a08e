// SPDX-License-Identifier: MIT
//
// Small exact-rational matrix helpers.
//
// Fixed-size 2x2 and 6x6 matrices cover everything the group theory needs;
// a dynamic RatMat covers Gram matrices of arbitrary (small) rank.  All
// operations are exact.  Row-vector convention throughout: matrices act on
// the right, (v * M)_j = sum_i v_i M_ij.

#pragma once

#include <array>
#include <vector>

#include "triadic/rational.hpp"

namespace triadic {

using Mat2 = std::array<std::array<Rat, 2>, 2>;
using Vec2 = std::array<Rat, 2>;
using Mat6 = std::array<std::array<Rat, 6>, 6>;
using Vec6 = std::array<Rat, 6>;
using RatMat = std::vector<std::vector<Rat>>;

inline Mat2 mat2_identity() {
  return {{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
}

inline Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

inline Rat mat2_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

inline Mat2 mat2_inverse(const Mat2& a) {
  Rat d = mat2_det(a);
  require(d != 0, ErrorCode::SingularMatrix, "2x2 matrix not invertible");
  return {{{a[1][1] / d, -a[0][1] / d}, {-a[1][0] / d, a[0][0] / d}}};
}

inline Mat2 mat2_transpose(const Mat2& a) {
  return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}};
}

inline Vec2 vec2_mul_mat(const Vec2& v, const Mat2& m) {
  return {v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]};
}

inline Mat6 mat6_zero() {
  Mat6 m{};
  for (auto& row : m)
    for (auto& x : row) x = Rat(0);
  return m;
}

inline Mat6 mat6_identity() {
  Mat6 m = mat6_zero();
  for (int i = 0; i < 6; ++i) m[i][i] = Rat(1);
  return m;
}

inline Mat6 mat6_mul(const Mat6& a, const Mat6& b) {
  Mat6 c = mat6_zero();
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < 6; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Mat6 mat6_transpose(const Mat6& a) {
  Mat6 t = mat6_zero();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) t[i][j] = a[j][i];
  return t;
}

inline bool mat6_equal(const Mat6& a, const Mat6& b) {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

// General dense ops for Gram matrices and row-space work.

inline RatMat rmat_mul(const RatMat& a, const RatMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RatMat c(n, std::vector<Rat>(m, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    require(a[i].size() == k, ErrorCode::InvalidArgument, "matrix shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  }
  return c;
}

inline RatMat rmat_transpose(const RatMat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  RatMat t(m, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

// Exact determinant by Gaussian elimination with column pivoting.
inline Rat rmat_det(RatMat a) {
  size_t n = a.size();
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

// Reduced row echelon form over Q (in place); returns rank.
inline int rmat_rref(RatMat& a) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[row]);
    Rat lead = a[row][col];
    for (size_t c = col; c < m; ++c) a[row][c] /= lead;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t c = col; c < m; ++c) a[r][c] -= f * a[row][c];
    }
    ++row;
  }
  return static_cast<int>(row);
}

inline RatMat rmat_inverse(const RatMat& a) {
  size_t n = a.size();
  RatMat aug(n, std::vector<Rat>(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    require(a[i].size() == n, ErrorCode::InvalidArgument, "inverse needs square matrix");
    for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = Rat(1);
  }
  int rank = rmat_rref(aug);
  require(rank == static_cast<int>(n), ErrorCode::SingularMatrix,
          "matrix not invertible");
  RatMat inv(n, std::vector<Rat>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace triadic
