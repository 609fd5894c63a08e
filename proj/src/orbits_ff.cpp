// SPDX-License-Identifier: MIT
#include "triadic/orbits_ff.hpp"

#include <cstdint>
#include <queue>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "triadic/errors.hpp"

namespace triadic {
namespace {

// ---------------------------------------------------------------------------
// Small mod-q machinery.  q <= 5, so plain ints never overflow and an
// inverse lookup by scan is instant.

void validate_q(long q) {
  require(q >= 2, ErrorCode::InvalidArgument, "field size must be at least 2");
  require(is_prime(q), ErrorCode::InvalidArgument,
          "field size must be a prime");
  require(q <= 5, ErrorCode::ResourceBound,
          "finite-field orbit search is limited to q <= 5");
}

long norm_mod(long x, long q) {
  long r = x % q;
  return r < 0 ? r + q : r;
}

long inv_mod_q(long x, long q) {
  for (long y = 1; y < q; ++y)
    if ((x * y) % q == 1) return y;
  throw Error(ErrorCode::Internal, "no inverse for a unit mod q");
}

using Row6 = std::array<uint8_t, 6>;
using M3x6 = std::array<Row6, 3>;

struct M2q {
  uint8_t m[2][2];
  bool operator==(const M2q& o) const {
    return m[0][0] == o.m[0][0] && m[0][1] == o.m[0][1] &&
           m[1][0] == o.m[1][0] && m[1][1] == o.m[1][1];
  }
};

// All of SL2(F_q), in a fixed deterministic order.
std::vector<M2q> sl2_list(long q) {
  std::vector<M2q> out;
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b)
      for (long c = 0; c < q; ++c)
        for (long d = 0; d < q; ++d)
          if (norm_mod(a * d - b * c, q) == 1)
            out.push_back(M2q{{{static_cast<uint8_t>(a), static_cast<uint8_t>(b)},
                               {static_cast<uint8_t>(c), static_cast<uint8_t>(d)}}});
  return out;
}

// Right action of a slot triple on a 3x6 row matrix.  Slot i mixes columns
// i and i+3 only: with slot matrix [[a,b],[c,d]], new col_i = a col_i +
// c col_{i+3} and new col_{i+3} = b col_i + d col_{i+3}.
M3x6 act(const M3x6& rows, const std::array<M2q, 3>& g, long q) {
  M3x6 out;
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s) {
      long u = rows[r][s], v = rows[r][s + 3];
      out[r][s] = static_cast<uint8_t>((u * g[s].m[0][0] + v * g[s].m[1][0]) % q);
      out[r][s + 3] =
          static_cast<uint8_t>((u * g[s].m[0][1] + v * g[s].m[1][1]) % q);
    }
  return out;
}

// In-place reduced row echelon form; returns rank.
int rref3x6(M3x6& m, long q) {
  int rank = 0;
  for (int col = 0; col < 6 && rank < 3; ++col) {
    int pivot = -1;
    for (int r = rank; r < 3; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    long inv = inv_mod_q(m[rank][col], q);
    for (int j = 0; j < 6; ++j)
      m[rank][j] = static_cast<uint8_t>((m[rank][j] * inv) % q);
    for (int r = 0; r < 3; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      long f = m[r][col];
      for (int j = 0; j < 6; ++j)
        m[r][j] = static_cast<uint8_t>(
            norm_mod(m[r][j] - f * m[rank][j], q));
    }
    ++rank;
  }
  return rank;
}

uint64_t pack_rows(const M3x6& rows) {
  uint64_t k = 0;
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 6; ++j) k = (k << 3) | rows[r][j];
  return k;
}

FqLagrangian make_canonical(long q, M3x6 rows) {
  int rank = rref3x6(rows, q);
  require(rank == 3, ErrorCode::InvalidArgument,
          "subspace basis must have rank 3");
  FqLagrangian L;
  L.q = q;
  L.rows = rows;
  return L;
}

// Symplectic pairing <u, v> = sum_i (u_i v_{i+3} - u_{i+3} v_i) mod q.
long pair_mod(const Row6& u, const Row6& v, long q) {
  long s = 0;
  for (int i = 0; i < 3; ++i) s += u[i] * v[i + 3] - u[i + 3] * v[i];
  return norm_mod(s, q);
}

bool is_isotropic(const M3x6& rows, long q) {
  return pair_mod(rows[0], rows[1], q) == 0 &&
         pair_mod(rows[0], rows[2], q) == 0 &&
         pair_mod(rows[1], rows[2], q) == 0;
}

long long expected_lagrangian_count(long q) {
  return (q + 1) * (q * q + 1) * (static_cast<long long>(q) * q * q + 1);
}

long long group_order_q(long q) {
  long long s = static_cast<long long>(q) * (q * q - 1);  // |SL2(F_q)|
  return s * s * s;
}

constexpr std::array<OrbitLabel, 5> kLabels = {
    OrbitLabel::L000, OrbitLabel::L100, OrbitLabel::L010, OrbitLabel::L001,
    OrbitLabel::L111};

long rat_entry_to_long(const Rat& x) {
  require(x.get_den() == 1, ErrorCode::Internal,
          "expected an integer matrix entry");
  return x.get_num().get_si();
}

// Bottom rows of the labelled orbit representative, reduced mod q but not
// re-echelonized (the stated basis matters for the wedge coordinates).
M3x6 plane_rows_mod(OrbitLabel a, long q) {
  RatMat W = plane_matrix(a);
  M3x6 rows{};
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 6; ++j)
      rows[r][j] = static_cast<uint8_t>(norm_mod(rat_entry_to_long(W[r][j]), q));
  return rows;
}

// The six closure generators: n(1) and w in each slot.
std::vector<std::array<M2q, 3>> closure_generators(long q) {
  const M2q id{{{1, 0}, {0, 1}}};
  const M2q n1{{{1, 1}, {0, 1}}};
  const M2q w{{{0, 1}, {static_cast<uint8_t>(q - 1), 0}}};
  std::vector<std::array<M2q, 3>> gens;
  for (int s = 0; s < 3; ++s) {
    std::array<M2q, 3> gn{id, id, id}, gw{id, id, id};
    gn[s] = n1;
    gw[s] = w;
    gens.push_back(gn);
    gens.push_back(gw);
  }
  return gens;
}

// ---------------------------------------------------------------------------
// Parametric stabilizer shapes instantiated over F_q.  These mirror the
// exact-arithmetic predicates on the rational group: upper-triangular slots
// with matching diagonals and trace-zero shear sum for the open plane,
// one upper slot with the remaining two twisted-conjugate for the mixed
// planes, and independent upper slots for the closed one.

bool upper_q(const M2q& g) { return g.m[1][0] == 0; }

bool unipotent_upper_q(const M2q& g) {
  return g.m[1][0] == 0 && g.m[0][0] == 1 && g.m[1][1] == 1;
}

M2q dconj_q(const M2q& g, long q) {
  M2q r = g;
  r.m[0][1] = static_cast<uint8_t>(norm_mod(-static_cast<long>(g.m[0][1]), q));
  r.m[1][0] = static_cast<uint8_t>(norm_mod(-static_cast<long>(g.m[1][0]), q));
  return r;
}

bool plane_parametric_member(OrbitLabel a, const std::array<M2q, 3>& g,
                             long q) {
  switch (a) {
    case OrbitLabel::L000:
      return upper_q(g[0]) && upper_q(g[1]) && upper_q(g[2]) &&
             g[0].m[0][0] == g[1].m[0][0] && g[0].m[0][0] == g[2].m[0][0] &&
             norm_mod(g[0].m[0][1] + g[1].m[0][1] + g[2].m[0][1], q) == 0;
    case OrbitLabel::L100:
      return upper_q(g[0]) && g[2] == dconj_q(g[1], q);
    case OrbitLabel::L010:
      return upper_q(g[1]) && g[2] == dconj_q(g[0], q);
    case OrbitLabel::L001:
      return upper_q(g[2]) && g[1] == dconj_q(g[0], q);
    case OrbitLabel::L111:
      return upper_q(g[0]) && upper_q(g[1]) && upper_q(g[2]);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

bool point_parametric_member(OrbitLabel a, const std::array<M2q, 3>& g,
                             long q) {
  switch (a) {
    case OrbitLabel::L000:
      return unipotent_upper_q(g[0]) && unipotent_upper_q(g[1]) &&
             unipotent_upper_q(g[2]) &&
             norm_mod(g[0].m[0][1] + g[1].m[0][1] + g[2].m[0][1], q) == 0;
    case OrbitLabel::L100:
      return unipotent_upper_q(g[0]) && g[2] == dconj_q(g[1], q);
    case OrbitLabel::L010:
      return unipotent_upper_q(g[1]) && g[2] == dconj_q(g[0], q);
    case OrbitLabel::L001:
      return unipotent_upper_q(g[2]) && g[1] == dconj_q(g[0], q);
    case OrbitLabel::L111:
      return upper_q(g[0]) && upper_q(g[1]) && upper_q(g[2]) &&
             (g[0].m[0][0] * g[1].m[0][0] * g[2].m[0][0]) % q == 1;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

long long plane_parametric_order(OrbitLabel a, long q) {
  const long long borel = static_cast<long long>(q) * (q - 1);  // |T| |N|
  switch (a) {
    case OrbitLabel::L000:
      return static_cast<long long>(q) * q * (q - 1);
    case OrbitLabel::L100:
    case OrbitLabel::L010:
    case OrbitLabel::L001:
      return borel * (static_cast<long long>(q) * (q * q - 1));
    case OrbitLabel::L111:
      return borel * borel * borel;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

long long point_parametric_order(OrbitLabel a, long q) {
  switch (a) {
    case OrbitLabel::L000:
      return static_cast<long long>(q) * q;
    case OrbitLabel::L100:
    case OrbitLabel::L010:
    case OrbitLabel::L001:
      return static_cast<long long>(q) * q * (q * q - 1);
    case OrbitLabel::L111:
      return static_cast<long long>(q) * q * q * (q - 1) * (q - 1);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown orbit label");
}

// Members of SL2(F_q)^3 fixing the given canonical plane (setwise).
std::vector<std::array<M2q, 3>> plane_stabilizer_members(
    const FqLagrangian& rep, long q) {
  const std::vector<M2q> sl2 = sl2_list(q);
  const uint64_t want = rep.key();
  std::vector<std::array<M2q, 3>> out;
  for (const M2q& g0 : sl2)
    for (const M2q& g1 : sl2)
      for (const M2q& g2 : sl2) {
        std::array<M2q, 3> g{g0, g1, g2};
        M3x6 moved = act(rep.rows, g, q);
        if (rref3x6(moved, q) == 3 && pack_rows(moved) == want)
          out.push_back(g);
      }
  return out;
}

// ---------------------------------------------------------------------------
// Wedge coordinates mod q.

using Wedge = std::array<uint8_t, 20>;

long det3_mod(const M3x6& rows, int c0, int c1, int c2, long q) {
  long a = rows[0][c0], b = rows[0][c1], c = rows[0][c2];
  long d = rows[1][c0], e = rows[1][c1], f = rows[1][c2];
  long g = rows[2][c0], h = rows[2][c1], i = rows[2][c2];
  return norm_mod(a * (e * i - f * h) - b * (d * i - f * g) +
                      c * (d * h - e * g),
                  q);
}

Wedge wedge_of(const M3x6& rows, long q) {
  Wedge w{};
  for (int t = 0; t < 20; ++t) {
    const auto& c = kPluckerTriples[t];
    w[t] = static_cast<uint8_t>(det3_mod(rows, c[0], c[1], c[2], q));
  }
  return w;
}

uint64_t pack_wedge(const Wedge& w) {
  uint64_t k = 0;
  for (int t = 0; t < 20; ++t) k = (k << 3) | w[t];
  return k;
}

Wedge scale_wedge(const Wedge& w, long lam, long q) {
  Wedge r;
  for (int t = 0; t < 20; ++t)
    r[t] = static_cast<uint8_t>((w[t] * lam) % q);
  return r;
}

// Induced right action on wedge coordinates: a 20x20 matrix with entries
// D[I][J] = det of the 6x6 slot embedding restricted to rows I, cols J.
using WedgeMat = std::array<std::array<uint8_t, 20>, 20>;

WedgeMat wedge_action_matrix(const std::array<M2q, 3>& g, long q) {
  // Build the 6x6 embedding first.
  long E[6][6] = {};
  for (int s = 0; s < 3; ++s) {
    E[s][s] = g[s].m[0][0];
    E[s][s + 3] = g[s].m[0][1];
    E[s + 3][s] = g[s].m[1][0];
    E[s + 3][s + 3] = g[s].m[1][1];
  }
  WedgeMat D;
  for (int I = 0; I < 20; ++I) {
    const auto& ri = kPluckerTriples[I];
    for (int J = 0; J < 20; ++J) {
      const auto& cj = kPluckerTriples[J];
      long a = E[ri[0]][cj[0]], b = E[ri[0]][cj[1]], c = E[ri[0]][cj[2]];
      long d = E[ri[1]][cj[0]], e = E[ri[1]][cj[1]], f = E[ri[1]][cj[2]];
      long gg = E[ri[2]][cj[0]], h = E[ri[2]][cj[1]], i = E[ri[2]][cj[2]];
      D[I][J] = static_cast<uint8_t>(norm_mod(
          a * (e * i - f * h) - b * (d * i - f * gg) + c * (d * h - e * gg),
          q));
    }
  }
  return D;
}

Wedge apply_wedge(const Wedge& w, const WedgeMat& D, long q) {
  Wedge r{};
  for (int J = 0; J < 20; ++J) {
    long s = 0;
    for (int I = 0; I < 20; ++I) s += static_cast<long>(w[I]) * D[I][J];
    r[J] = static_cast<uint8_t>(s % q);
  }
  return r;
}

}  // namespace

uint64_t FqLagrangian::key() const { return pack_rows(rows); }

FqLagrangian rref_lagrangian(long q,
                             const std::array<std::array<long, 6>, 3>& m) {
  validate_q(q);
  M3x6 rows{};
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 6; ++j)
      rows[r][j] = static_cast<uint8_t>(norm_mod(m[r][j], q));
  return make_canonical(q, rows);
}

std::vector<FqLagrangian> enumerate_lagrangians(long q) {
  validate_q(q);
  std::vector<FqLagrangian> out;
  // Every subspace has a unique reduced echelon basis, determined by its
  // pivot columns c0 < c1 < c2 and the free entries right of each pivot in
  // non-pivot columns; enumerating those directly visits each subspace once.
  for (int c0 = 0; c0 < 6; ++c0)
    for (int c1 = c0 + 1; c1 < 6; ++c1)
      for (int c2 = c1 + 1; c2 < 6; ++c2) {
        const int piv[3] = {c0, c1, c2};
        std::vector<std::pair<int, int>> free_pos;
        for (int r = 0; r < 3; ++r)
          for (int j = piv[r] + 1; j < 6; ++j)
            if (j != piv[0] && j != piv[1] && j != piv[2])
              free_pos.emplace_back(r, j);
        long long combos = 1;
        for (size_t i = 0; i < free_pos.size(); ++i) combos *= q;
        for (long long code = 0; code < combos; ++code) {
          M3x6 rows{};
          for (int r = 0; r < 3; ++r) rows[r][piv[r]] = 1;
          long long rem = code;
          for (const auto& [r, j] : free_pos) {
            rows[r][j] = static_cast<uint8_t>(rem % q);
            rem /= q;
          }
          if (is_isotropic(rows, q)) {
            FqLagrangian L;
            L.q = q;
            L.rows = rows;
            out.push_back(L);
          }
        }
      }
  require(static_cast<long long>(out.size()) == expected_lagrangian_count(q),
          ErrorCode::Internal,
          "isotropic-subspace enumeration missed the expected count");
  std::unordered_set<uint64_t> seen;
  for (const FqLagrangian& L : out) seen.insert(L.key());
  require(seen.size() == out.size(), ErrorCode::Internal,
          "duplicate canonical bases in the enumeration");
  return out;
}

OrbitReport orbit_decompose(long q) {
  validate_q(q);
  const std::vector<FqLagrangian> all = enumerate_lagrangians(q);
  const auto gens = closure_generators(q);

  OrbitReport rep;
  rep.q = q;
  rep.lagrangian_count = static_cast<long long>(all.size());
  rep.group_order = group_order_q(q);

  std::unordered_map<uint64_t, int> orbit_of;
  for (size_t li = 0; li < kLabels.size(); ++li) {
    OrbitLabel a = kLabels[li];
    FqLagrangian seed = make_canonical(q, plane_rows_mod(a, q));
    OrbitInfo info;
    info.label = orbit_label_name(a);
    info.representative = seed;
    if (orbit_of.count(seed.key())) {
      // A previous labelled plane already swept this orbit; report the
      // degenerate merge rather than double-counting.
      info.size = 0;
      info.stabilizer_order = 0;
      info.parametric_order = plane_parametric_order(a, q);
      rep.orbits.push_back(info);
      continue;
    }
    // Breadth-first closure under the generators, keyed by canonical form.
    long long size = 0;
    std::queue<M3x6> pending;
    orbit_of[seed.key()] = static_cast<int>(li);
    pending.push(seed.rows);
    ++size;
    while (!pending.empty()) {
      M3x6 cur = pending.front();
      pending.pop();
      for (const auto& g : gens) {
        M3x6 nxt = act(cur, g, q);
        rref3x6(nxt, q);
        uint64_t k = pack_rows(nxt);
        if (!orbit_of.count(k)) {
          orbit_of[k] = static_cast<int>(li);
          pending.push(nxt);
          ++size;
        }
      }
    }
    info.size = size;
    info.stabilizer_order =
        static_cast<long long>(plane_stabilizer_members(seed, q).size());
    info.parametric_order = plane_parametric_order(a, q);
    require(info.size * info.stabilizer_order == rep.group_order,
            ErrorCode::Internal,
            "orbit-stabilizer product disagrees with the group order");
    rep.orbits.push_back(info);
  }

  for (const FqLagrangian& L : all)
    if (!orbit_of.count(L.key()))
      throw Error(ErrorCode::UnmatchedOrbit,
                  "an isotropic subspace lies outside every labelled orbit");
  return rep;
}

bool verify_parametric_stabilizers(long q) {
  validate_q(q);
  const std::vector<M2q> sl2 = sl2_list(q);
  const OrbitReport planes = orbit_decompose(q);
  for (OrbitLabel a : kLabels) {
    const FqLagrangian plane = make_canonical(q, plane_rows_mod(a, q));
    const M3x6 point_rows = plane_rows_mod(a, q);
    const Wedge point = wedge_of(point_rows, q);
    long long plane_count = 0, point_count = 0;
    for (const M2q& g0 : sl2)
      for (const M2q& g1 : sl2)
        for (const M2q& g2 : sl2) {
          std::array<M2q, 3> g{g0, g1, g2};
          M3x6 moved = plane.rows;
          moved = act(moved, g, q);
          rref3x6(moved, q);
          const bool fixes_plane = pack_rows(moved) == plane.key();
          if (plane_parametric_member(a, g, q)) {
            ++plane_count;
            if (!fixes_plane) return false;  // not a subset of the stabilizer
          }
          if (point_parametric_member(a, g, q)) {
            ++point_count;
            const WedgeMat D = wedge_action_matrix(g, q);
            if (apply_wedge(point, D, q) != point) return false;
          }
        }
    if (plane_count != plane_parametric_order(a, q)) return false;
    if (point_count != point_parametric_order(a, q)) return false;
    // Group equality: the parametric family is contained in the stabilizer
    // and already has the full orbit-stabilizer order.
    const long long stab = group_order_q(q) / plane_count;
    long long orbit_size = 0;
    for (const OrbitInfo& o : planes.orbits)
      if (std::string_view(o.label) == orbit_label_name(a)) {
        orbit_size = o.size;
        if (o.stabilizer_order != plane_count) return false;
      }
    if (orbit_size != stab) return false;
  }
  return true;
}

XPointReport xpoints_decompose(long q) {
  validate_q(q);
  require(q <= 3, ErrorCode::ResourceBound,
          "wedge-point decomposition is limited to q <= 3");
  const std::vector<FqLagrangian> all = enumerate_lagrangians(q);
  const auto gens = closure_generators(q);
  std::vector<WedgeMat> gen_mats;
  gen_mats.reserve(gens.size());
  for (const auto& g : gens) gen_mats.push_back(wedge_action_matrix(g, q));

  XPointReport rep;
  rep.q = q;

  // The point set: wedge coordinates of every subspace basis, under all
  // nonzero scalings.  Distinct subspaces give non-proportional wedges, so
  // the count is (q-1) times the subspace count.
  std::unordered_set<uint64_t> points;
  for (const FqLagrangian& L : all) {
    Wedge w = wedge_of(L.rows, q);
    for (long lam = 1; lam < q; ++lam)
      points.insert(pack_wedge(scale_wedge(w, lam, q)));
  }
  rep.xpoint_count = static_cast<long long>(points.size());
  require(rep.xpoint_count ==
              (q - 1) * static_cast<long long>(all.size()),
          ErrorCode::Internal, "wedge-point count disagrees with scaling");

  // Cross-check the induced wedge action against acting on bases directly:
  // wedge(rows . g) must equal wedge(rows) . D(g) for every seed/generator.
  for (OrbitLabel a : kLabels) {
    const M3x6 rows = plane_rows_mod(a, q);
    const Wedge w = wedge_of(rows, q);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      const Wedge direct = wedge_of(act(rows, gens[gi], q), q);
      require(direct == apply_wedge(w, gen_mats[gi], q), ErrorCode::Internal,
              "wedge action matrix disagrees with the basis action");
    }
  }

  const OrbitReport planes = orbit_decompose(q);
  const std::vector<M2q> sl2 = sl2_list(q);

  std::unordered_set<uint64_t> visited;
  rep.orbit_count = 0;
  rep.bijection = true;
  for (size_t li = 0; li < kLabels.size(); ++li) {
    OrbitLabel a = kLabels[li];
    const Wedge seed = wedge_of(plane_rows_mod(a, q), q);
    XOrbitInfo info;
    info.label = orbit_label_name(a);
    if (visited.count(pack_wedge(seed))) {
      info.size = 0;
      info.stabilizer_order = 0;
      info.matches_plane_orbit = false;
      rep.bijection = false;
      rep.orbits.push_back(info);
      continue;
    }
    ++rep.orbit_count;
    long long size = 0;
    std::queue<Wedge> pending;
    visited.insert(pack_wedge(seed));
    pending.push(seed);
    ++size;
    while (!pending.empty()) {
      Wedge cur = pending.front();
      pending.pop();
      for (const WedgeMat& D : gen_mats) {
        Wedge nxt = apply_wedge(cur, D, q);
        uint64_t k = pack_wedge(nxt);
        if (!visited.count(k)) {
          visited.insert(k);
          pending.push(nxt);
          ++size;
        }
      }
    }
    info.size = size;

    // Pointwise stabilizer: only plane-stabilizing triples can fix the
    // wedge point, so scan those members instead of the whole group.
    const FqLagrangian plane = make_canonical(q, plane_rows_mod(a, q));
    long long stab = 0;
    for (const auto& g : plane_stabilizer_members(plane, q))
      if (apply_wedge(seed, wedge_action_matrix(g, q), q) == seed) ++stab;
    info.stabilizer_order = stab;
    require(info.size * info.stabilizer_order == group_order_q(q),
            ErrorCode::Internal,
            "wedge orbit-stabilizer product disagrees with the group order");

    info.matches_plane_orbit =
        info.size == (q - 1) * planes.orbits[li].size;
    rep.bijection = rep.bijection && info.matches_plane_orbit;
    rep.orbits.push_back(info);
  }
  rep.covers = static_cast<long long>(visited.size()) == rep.xpoint_count;
  if (!rep.covers)
    throw Error(ErrorCode::UnmatchedOrbit,
                "a wedge point lies outside every labelled orbit");

  // The trace-zero shear family must fix the open seed pointwise.
  rep.n0_contained = true;
  const Wedge seed0 = wedge_of(plane_rows_mod(OrbitLabel::L000, q), q);
  for (long t1 = 0; t1 < q; ++t1)
    for (long t2 = 0; t2 < q; ++t2) {
      const long t3 = norm_mod(-t1 - t2, q);
      const M2q u1{{{1, static_cast<uint8_t>(t1)}, {0, 1}}};
      const M2q u2{{{1, static_cast<uint8_t>(t2)}, {0, 1}}};
      const M2q u3{{{1, static_cast<uint8_t>(t3)}, {0, 1}}};
      const WedgeMat D = wedge_action_matrix({u1, u2, u3}, q);
      if (apply_wedge(seed0, D, q) != seed0) rep.n0_contained = false;
    }
  return rep;
}

}  // namespace triadic
