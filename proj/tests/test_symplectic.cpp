#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "triadic/errors.hpp"
#include "triadic/symplectic.hpp"

using namespace triadic;

namespace {

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Mat2 m;
  m[0][0] = a;
  m[0][1] = b;
  m[1][0] = c;
  m[1][1] = d;
  return m;
}

Mat2 mul2(const Mat2& x, const Mat2& y) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
  return r;
}

// Row-reduce a rational matrix in place to a canonical reduced echelon form.
RatMat rref(RatMat m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0, lead = 0;
  for (size_t r = 0; r < rows && lead < cols; ++r) {
    size_t i = r;
    while (i < rows && m[i][lead] == 0) ++i;
    if (i == rows) {
      ++lead;
      --r;
      continue;
    }
    std::swap(m[i], m[r]);
    Rat piv = m[r][lead];
    for (size_t j = 0; j < cols; ++j) m[r][j] /= piv;
    for (size_t k = 0; k < rows; ++k) {
      if (k == r) continue;
      Rat f = m[k][lead];
      if (f == 0) continue;
      for (size_t j = 0; j < cols; ++j) m[k][j] -= f * m[r][j];
    }
    ++lead;
  }
  return m;
}

constexpr std::array<OrbitLabel, 5> kLabels = {OrbitLabel::L000,
                                               OrbitLabel::L100,
                                               OrbitLabel::L010,
                                               OrbitLabel::L001,
                                               OrbitLabel::L111};

// A deterministic integral SL2 word from a seeded generator.
Mat2 random_sl2(std::mt19937_64& rng) {
  Mat2 g = mat2(Rat(1), Rat(0), Rat(0), Rat(1));
  for (int s = 0; s < 4; ++s) {
    long t = static_cast<long>(rng() % 5) - 2;
    switch (rng() % 3) {
      case 0:
        g = mul2(g, mat2(Rat(1), Rat(t), Rat(0), Rat(1)));
        break;
      case 1:
        g = mul2(g, mat2(Rat(1), Rat(0), Rat(t), Rat(1)));
        break;
      default:
        g = mul2(g, sl2_w());
        break;
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("symplectic") {

TEST_CASE("group structure and symplectic validation") {
  Sp6Element id = Sp6Element::identity();
  CHECK((id * id).mat() == id.mat());
  CHECK(id.inverse().mat() == id.mat());
  std::array<Mat2, 3> slots = {mat2(Rat(1), Rat(2), Rat(0), Rat(1)),
                               mat2(Rat(3), Rat(0), Rat(0), Rat(1) / Rat(3)),
                               sl2_w()};
  Sp6Element g = embed_triple(slots);
  Sp6Element h = g * g.inverse();
  CHECK(h.mat() == id.mat());
  // A matrix that fails g J g^T = J is rejected.
  Mat6 bad = id.mat();
  bad[0][0] = Rat(2);
  CHECK_THROWS_AS(Sp6Element{bad}, Error);
}

TEST_CASE("the identity maps to the basis point of the embedding") {
  Vec20 w = plucker(Sp6Element::identity());
  CHECK(kPluckerTriples.size() == 20u);
  int nonzero = 0;
  for (const Rat& x : w)
    if (x != 0) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(w[19] == Rat(1));  // the distinguished {3,4,5} coordinate
}

TEST_CASE("cell representatives land in their cell") {
  for (long p : {3L, 5L}) {
    for (long c : {-3L, -1L, 0L, 1L, 2L, 5L}) {
      Sp6Element g = cell_representative(Rat(p), c);
      CHECK(cell_index(g, p) == c);
      CHECK(iwasawa_cell(g, p) == c);
      CHECK(plucker_norm(g, p) == pow_p(p, -c));
      // With a unit argument the representative collapses to cell 0.
      CHECK(cell_index(cell_representative(Rat(2), c), p) == 0);
    }
  }
}

TEST_CASE("basic function values by cell") {
  for (long q : {3L, 5L}) {
    CHECK(basic_b_cell(-2, q) == Rat(0));
    CHECK(basic_b_cell(-1, q) == Rat(0));
    CHECK(basic_b_cell(0, q) == Rat(1));
    CHECK(basic_b_cell(1, q) == Rat(1));
    CHECK(basic_b_cell(2, q) == Rat(1 + q * q));
    CHECK(basic_b_cell(3, q) == Rat(1 + q * q));
    CHECK(basic_b_cell(4, q) == Rat(1 + q * q + q * q * q * q));
  }
  // Through a group element: cell 2 at p = 5.
  CHECK(basic_b(cell_representative(Rat(5), 2), 5) == Rat(26));
  CHECK(basic_b(Sp6Element::identity(), 5) == Rat(1));
  CHECK(basic_b(cell_representative(Rat(5), -1), 5) == Rat(0));
}

TEST_CASE("plucker norm obeys the seven-term maximum") {
  // For g = gamma_000 embed(n(t) t(1/a_1), n(t) t(1/a_2), n(t) t(1/a_3)),
  // the norm is max over |3 t a1 a2 a3|, |a_i|, |a_j a_k / a_i|.
  for (long p : {3L, 5L}) {
    const std::array<Rat, 4> ts = {Rat(0), Rat(1), Rat(1) / Rat(p),
                                   Rat(2) / Rat(p * p)};
    const std::array<std::array<long, 3>, 4> exps = {
        {{0, 0, 0}, {1, 0, -1}, {2, 1, 0}, {-2, 3, 1}}};
    for (const Rat& t : ts)
      for (const auto& e : exps) {
        std::array<Rat, 3> a;
        std::array<Mat2, 3> slots;
        for (int s = 0; s < 3; ++s) {
          a[static_cast<size_t>(s)] = pow_p(p, e[static_cast<size_t>(s)]);
          slots[static_cast<size_t>(s)] =
              mul2(sl2_n(t), sl2_t(Rat(1) / a[static_cast<size_t>(s)]));
        }
        Sp6Element g = gamma_rep(OrbitLabel::L000) * embed_triple(slots);
        long minval = VAL_INF;
        Rat prod = a[0] * a[1] * a[2];
        if (t != 0) minval = std::min(minval, val_p(Rat(3) * t * prod, p));
        for (int s = 0; s < 3; ++s) {
          const Rat& ai = a[static_cast<size_t>(s)];
          minval = std::min(minval, val_p(ai, p));
          minval = std::min(minval, val_p(prod / (ai * ai), p));
        }
        CHECK(plucker_norm(g, p) == pow_p(p, -minval));
      }
  }
}

TEST_CASE("gamma representatives are integral and carry the base plane") {
  for (OrbitLabel a : kLabels) {
    Mat6 g = gamma_matrix(a);
    Sp6Element el{g};  // validates the symplectic relation
    (void)el;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(g[i][j].get_den() == 1);
    // The labelled plane is the image of the bottom three rows.
    RatMat bottom(3, std::vector<Rat>(6));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 6; ++j) bottom[i][j] = g[i + 3][j];
    CHECK(rref(bottom) == rref(plane_matrix(a)));
    CHECK(isotropic_rep(a) == plane_matrix(a));
  }
}

TEST_CASE("plane stabilizer predicate matches the geometric action") {
  std::mt19937_64 rng(20260817);
  for (OrbitLabel a : kLabels) {
    long agree_true = 0;
    for (int i = 0; i < 120; ++i) {
      std::array<Mat2, 3> g = {random_sl2(rng), random_sl2(rng),
                               random_sl2(rng)};
      bool pred = stabilizer_member(a, g);
      CHECK(pred == stabilizes_plane(a, g));
      if (pred) ++agree_true;
    }
    // Structured members so the positive branch is exercised too.
    std::array<Mat2, 3> same = {mat2(Rat(1), Rat(1), Rat(0), Rat(1)),
                                mat2(Rat(1), Rat(1), Rat(0), Rat(1)),
                                mat2(Rat(1), Rat(-2), Rat(0), Rat(1))};
    if (a == OrbitLabel::L000) {
      CHECK(stabilizer_member(a, same));
      CHECK(stabilizes_plane(a, same));
    }
    std::array<Mat2, 3> uppers = {mat2(Rat(2), Rat(1), Rat(0), Rat(1) / Rat(2)),
                                  mat2(Rat(1), Rat(3), Rat(0), Rat(1)),
                                  mat2(Rat(1), Rat(0), Rat(0), Rat(1))};
    CHECK(stabilizer_member(OrbitLabel::L111, uppers));
    CHECK(stabilizes_plane(OrbitLabel::L111, uppers));
    (void)agree_true;
  }
}

TEST_CASE("point stabilizer predicate matches the projective action") {
  std::mt19937_64 rng(7041776);
  for (OrbitLabel a : kLabels) {
    for (int i = 0; i < 120; ++i) {
      std::array<Mat2, 3> g = {random_sl2(rng), random_sl2(rng),
                               random_sl2(rng)};
      CHECK(point_stabilizer_member(a, g) == fixes_plucker_point(a, g));
    }
  }
  // The point condition is strictly finer than the plane condition: a
  // diagonal triple with product of eigenvalues != 1 moves the point but
  // not the plane W_111.
  std::array<Mat2, 3> diag = {mat2(Rat(2), Rat(0), Rat(0), Rat(1) / Rat(2)),
                              mat2(Rat(1), Rat(0), Rat(0), Rat(1)),
                              mat2(Rat(1), Rat(0), Rat(0), Rat(1))};
  CHECK(stabilizer_member(OrbitLabel::L111, diag));
  CHECK(!point_stabilizer_member(OrbitLabel::L111, diag));
  CHECK(!fixes_plucker_point(OrbitLabel::L111, diag));
}

TEST_CASE("labels print as bit triples") {
  CHECK(std::string(orbit_label_name(OrbitLabel::L000)) == "000");
  CHECK(std::string(orbit_label_name(OrbitLabel::L100)) == "100");
  CHECK(std::string(orbit_label_name(OrbitLabel::L010)) == "010");
  CHECK(std::string(orbit_label_name(OrbitLabel::L001)) == "001");
  CHECK(std::string(orbit_label_name(OrbitLabel::L111)) == "111");
}

}  // TEST_SUITE
