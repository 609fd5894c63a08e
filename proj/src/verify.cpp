// SPDX-License-Identifier: MIT
#include "triadic/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <thread>

#include "triadic/cyclotomic.hpp"
#include "triadic/errors.hpp"
#include "triadic/orbits_ff.hpp"
#include "triadic/schwartz.hpp"
#include "triadic/symplectic.hpp"
#include "triadic/weil_index.hpp"

namespace triadic {
namespace {

// ---------------------------------------------------------------------------
// Deterministic parallel sweep: work items are indexed, each item writes only
// its own slot, so aggregation never depends on scheduling.

void parallel_for(long long n, int threads,
                  const std::function<void(long long)>& body) {
  if (n <= 0) return;
  int workers = std::max(1, threads);
  if (static_cast<long long>(workers) > n) workers = static_cast<int>(n);
  if (workers == 1) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  auto run = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Per-case RNG: the stream is a pure function of (seed, tag, index), so any
// case can be recomputed in isolation on any thread with identical draws.
struct CaseRng {
  std::mt19937_64 eng;
  CaseRng(std::uint64_t seed, std::uint32_t tag, std::uint64_t idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32), tag,
                      static_cast<std::uint32_t>(idx),
                      static_cast<std::uint32_t>(idx >> 32)};
    eng.seed(seq);
  }
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling on the raw 64-bit stream keeps the distribution
    // exact and the draw sequence platform-independent.
    const std::uint64_t limit = n * (~std::uint64_t{0} / n);
    for (;;) {
      std::uint64_t r = eng();
      if (r < limit) return r % n;
    }
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return below(2) == 1; }
};

// ---------------------------------------------------------------------------
// Forms and triples.

enum class FormKind { Hyp, Diag11, Diag1m2, HH };

RatMat gram_of(FormKind k) {
  switch (k) {
    case FormKind::Hyp:
      return {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    case FormKind::Diag11:
      return {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    case FormKind::Diag1m2:
      return {{Rat(1), Rat(0)}, {Rat(0), Rat(-2)}};
    case FormKind::HH: {
      RatMat J(4, std::vector<Rat>(4, Rat(0)));
      J[0][1] = J[1][0] = J[2][3] = J[3][2] = Rat(1);
      return J;
    }
  }
  throw Error(ErrorCode::Internal, "unknown form kind");
}

QuadraticSpace space_of(FormKind k) { return QuadraticSpace(gram_of(k)); }

struct TripleSpec {
  const char* name;
  std::array<FormKind, 3> kinds;
};

constexpr std::array<TripleSpec, 3> kTriples = {{
    {"hyperbolic", {FormKind::Hyp, FormKind::Hyp, FormKind::Hyp}},
    {"unit-diagonal", {FormKind::Hyp, FormKind::Diag11, FormKind::Diag1m2}},
    {"mixed", {FormKind::Hyp, FormKind::Diag1m2, FormKind::HH}},
}};

QuadTriple make_triple(const TripleSpec& spec) {
  std::vector<QuadraticSpace> spaces;
  for (FormKind k : spec.kinds) spaces.push_back(space_of(k));
  return QuadTriple(std::move(spaces));
}

const std::array<FormKind, 4> kAllForms = {FormKind::Hyp, FormKind::Diag11,
                                           FormKind::Diag1m2, FormKind::HH};

const char* form_name(FormKind k) {
  switch (k) {
    case FormKind::Hyp: return "hyperbolic";
    case FormKind::Diag11: return "unit-diagonal";
    case FormKind::Diag1m2: return "diagonal-1-m2";
    case FormKind::HH: return "double-hyperbolic";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Battery construction: exact rational slot vectors by bounded integer search.

long long isqrt_ll(long long x) {
  if (x < 0) return -1;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

long vall(long long x, long p) {  // valuation of a nonzero integer
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// A slot vector with Q(v) = c exactly and min slot valuation exactly o.
std::optional<std::vector<Rat>> find_slot_vector(FormKind kind, const Rat& c,
                                                 long o, long p) {
  const long vc = val_p(c, p);
  switch (kind) {
    case FormKind::Hyp: {
      if (vc < 2 * o) return std::nullopt;  // val(x) + val(y) = vc, min = o
      Rat x = pow_p(p, o);
      return std::vector<Rat>{x, c / x};
    }
    case FormKind::HH: {
      if (vc < 2 * o) return std::nullopt;
      Rat x = pow_p(p, o);
      return std::vector<Rat>{x, c / x, Rat(0), Rat(0)};
    }
    case FormKind::Diag11:
    case FormKind::Diag1m2: {
      // Integer search for A^2 +/- ... = 2c with min val exactly o.  2c must
      // be an integer here (battery uses integer c).
      Rat twoc = Rat(2) * c;
      if (twoc.get_den() != 1) return std::nullopt;
      if (!twoc.get_num().fits_slong_p()) return std::nullopt;
      long long target = twoc.get_num().get_si();
      const bool plus = (kind == FormKind::Diag11);
      if (plus && target < 0) return std::nullopt;
      const long long Bmax = plus ? isqrt_ll(target) : 1200;
      for (long long B = 0; B <= Bmax; ++B) {
        long long A2 = plus ? target - B * B : target + 2 * B * B;
        if (A2 < 0) break;
        long long A = isqrt_ll(A2);
        if (A * A != A2) continue;
        long vmin = VAL_INF;
        if (A != 0) vmin = std::min(vmin, vall(A, p));
        if (B != 0) vmin = std::min(vmin, vall(B, p));
        if (vmin != o) continue;
        return std::vector<Rat>{Rat(static_cast<long>(A)),
                                Rat(static_cast<long>(B))};
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

const std::array<std::array<long, 3>, 6> kOrdPatterns = {{
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 2}}};

// Candidate unit multipliers for the common value (all coprime to 3 and 5).
const std::array<long, 5> kKappas = {1, 2, 7, 11, 13};

void check_battery_point(BatteryPoint& bp) {
  PointProfile prof = profile_point(bp.forms, bp.point, bp.p);
  require(prof.on_locus && prof.in_v_prime && prof.integral == bp.integral &&
              prof.zero_slot == bp.zero_slot,
          ErrorCode::Internal, "battery generator produced a bad point");
  for (int i = 0; i < 3; ++i) {
    long expect = (i == bp.zero_slot) ? VAL_INF : bp.ord[static_cast<size_t>(i)];
    require(prof.ord[static_cast<size_t>(i)] == expect, ErrorCode::Internal,
            "battery slot order drifted from its target");
  }
}

}  // namespace

QuadTriple battery_triple(const std::string& name) {
  for (const TripleSpec& spec : kTriples)
    if (name == spec.name) return make_triple(spec);
  throw Error(ErrorCode::Parse, "unknown form triple '" + name + "'");
}

std::vector<BatteryPoint> build_battery(long p) {
  require(p == 3 || p == 5, ErrorCode::UnsupportedPrime,
          "battery is defined for p in {3, 5}");
  std::vector<BatteryPoint> out;
  for (const TripleSpec& spec : kTriples) {
    QuadTriple T = make_triple(spec);
    for (size_t pi = 0; pi < kOrdPatterns.size(); ++pi) {
      const auto& pattern = kOrdPatterns[pi];
      const long maxo = *std::max_element(pattern.begin(), pattern.end());
      // All-hyperbolic slots place no parity constraint on val(c), so vary
      // it there; anisotropic diagonal slots pin val(c) = 2 ord exactly, so
      // usually a single variant exists.
      const int want =
          (spec.kinds == kTriples[0].kinds) ? 2 : (pi == 0 ? 2 : 1);
      int got = 0;
      for (long vc = 0; vc <= 2 * maxo + 4 && got < want; ++vc) {
        bool emitted = false;
        for (long kappa : kKappas) {
          Rat c = Rat(kappa) * pow_p(p, vc);
          std::array<long, 3> perm = pattern;
          std::sort(perm.begin(), perm.end());
          do {
            std::array<std::vector<Rat>, 3> slots;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
              auto v = find_slot_vector(spec.kinds[i], c, perm[i], p);
              if (!v)
                ok = false;
              else
                slots[i] = std::move(*v);
            }
            if (!ok) continue;
            BatteryPoint bp(T);
            bp.p = p;
            bp.triple_name = spec.name;
            bp.ord = perm;
            bp.point.slots = std::move(slots);
            bp.integral = true;
            bp.zero_slot = -1;
            check_battery_point(bp);
            out.push_back(std::move(bp));
            emitted = true;
            break;
          } while (std::next_permutation(perm.begin(), perm.end()));
          if (emitted) break;
        }
        if (emitted) ++got;
      }
    }
  }
  // Zero-slot points.  The common value is then 0, which only the isotropic
  // forms can take at nonzero vectors, so the first slot of the
  // all-hyperbolic triple carries the v1 = 0 family and the mixed triple
  // contributes a zero middle slot.
  {
    QuadTriple T = make_triple(kTriples[0]);
    for (auto [a, b] : {std::pair<long, long>{0, 0}, {1, 1}, {0, 2}}) {
      BatteryPoint bp(T);
      bp.p = p;
      bp.triple_name = kTriples[0].name;
      bp.ord = {-1, a, b};
      bp.point.slots = {std::vector<Rat>{Rat(0), Rat(0)},
                        std::vector<Rat>{pow_p(p, a), Rat(0)},
                        std::vector<Rat>{pow_p(p, b), Rat(0)}};
      bp.integral = true;
      bp.zero_slot = 0;
      check_battery_point(bp);
      out.push_back(std::move(bp));
    }
  }
  {
    QuadTriple T = make_triple(kTriples[2]);
    BatteryPoint bp(T);
    bp.p = p;
    bp.triple_name = kTriples[2].name;
    bp.ord = {0, -1, 1};
    bp.point.slots = {std::vector<Rat>{Rat(1), Rat(0)},
                      std::vector<Rat>{Rat(0), Rat(0)},
                      std::vector<Rat>{pow_p(p, 1), Rat(0), Rat(0), Rat(0)}};
    bp.integral = true;
    bp.zero_slot = 1;
    check_battery_point(bp);
    out.push_back(std::move(bp));
  }
  return out;
}

std::vector<BatteryPoint> build_offlattice(long p) {
  require(p == 3 || p == 5, ErrorCode::UnsupportedPrime,
          "battery is defined for p in {3, 5}");
  std::vector<BatteryPoint> out;
  // First slot (hyperbolic in every triple) leaves the lattice; the common
  // value stays the unit 1, which every remaining slot represents at order 0.
  for (const TripleSpec& spec : kTriples) {
    QuadTriple T = make_triple(spec);
    for (long depth : {1L, 2L}) {
      BatteryPoint bp(T);
      bp.p = p;
      bp.triple_name = spec.name;
      bp.ord = {-depth, 0, 0};
      Rat c(1);
      bp.point.slots[0] = {pow_p(p, -depth), c / pow_p(p, -depth)};
      for (int i = 1; i < 3; ++i) {
        auto v = find_slot_vector(spec.kinds[i], c, 0, p);
        require(v.has_value(), ErrorCode::Internal,
                "off-lattice companion slot not found");
        bp.point.slots[i] = std::move(*v);
      }
      bp.integral = false;
      bp.zero_slot = -1;
      check_battery_point(bp);
      out.push_back(std::move(bp));
    }
  }
  // Zero slot and an off-lattice slot at once (value 0 locus).
  {
    QuadTriple T = make_triple(kTriples[0]);
    BatteryPoint bp(T);
    bp.p = p;
    bp.triple_name = kTriples[0].name;
    bp.ord = {-1, -1, 0};
    bp.point.slots = {std::vector<Rat>{Rat(0), Rat(0)},
                      std::vector<Rat>{pow_p(p, -1), Rat(0)},
                      std::vector<Rat>{Rat(1), Rat(0)}};
    bp.integral = false;
    bp.zero_slot = 0;
    check_battery_point(bp);
    out.push_back(std::move(bp));
  }
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Samplers.

// p-adic units used as matrix entries (denominators coprime to 3 and 5).
const std::array<Rat, 8> kUnits = {Rat(1),     Rat(-1),    Rat(2),  Rat(-2),
                                   Rat(1, 2),  Rat(-1, 2), Rat(7),  Rat(7, 2)};

Mat2 sl2_word(CaseRng& rng, long p, int steps, int neg_val_budget) {
  Mat2 g = mat2_identity();
  int budget = neg_val_budget;
  for (int s = 0; s < steps; ++s) {
    switch (rng.below(3)) {
      case 0: {  // shear n(t)
        int tau = budget > 0 ? static_cast<int>(rng.below(
                                   static_cast<std::uint64_t>(budget) + 1))
                             : 0;
        budget -= tau;
        long num = rng.range(-3, 3);
        if (num == 0) num = 1;
        g = mat2_mul(g, sl2_n(Rat(num) * pow_p(p, -tau)));
        break;
      }
      case 1:
        g = mat2_mul(g, sl2_t(kUnits[rng.below(kUnits.size())]));
        break;
      default:
        g = mat2_mul(g, sl2_w());
        break;
    }
  }
  return g;
}

// Words in SL2(Z_p): shears with p-integral t, units, and w.
Mat2 sl2_compact_word(CaseRng& rng, long /*p*/, int steps) {
  Mat2 g = mat2_identity();
  for (int s = 0; s < steps; ++s) {
    switch (rng.below(3)) {
      case 0:
        g = mat2_mul(g, sl2_n(Rat(rng.range(-4, 4))));
        break;
      case 1:
        g = mat2_mul(g, sl2_t(kUnits[rng.below(kUnits.size())]));
        break;
      default:
        g = mat2_mul(g, sl2_w());
        break;
    }
  }
  return g;
}

// The canonical similitude with factor exactly 2 for each form (2 is a
// non-square unit at p = 3 and p = 5).
RatMat twist2_map(FormKind kind) {
  switch (kind) {
    case FormKind::Hyp:
      return RatMat{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}};
    case FormKind::Diag11:
      return RatMat{{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}};
    case FormKind::Diag1m2:
      return RatMat{{Rat(2), Rat(1)}, {Rat(2), Rat(2)}};
    case FormKind::HH: {
      RatMat t2(4, std::vector<Rat>(4, Rat(0)));
      t2[0][0] = Rat(2);
      t2[1][1] = Rat(1);
      t2[2][2] = Rat(2);
      t2[3][3] = Rat(1);
      return t2;
    }
  }
  throw Error(ErrorCode::Internal, "unknown form kind");
}

// One similitude of the given form with its factor; entries p-integral units
// where needed.  `twist` additionally requests the canonical factor-2 map.
RatMat similitude_sample(FormKind kind, CaseRng& rng, long p, bool twist) {
  auto unit = [&] {
    Rat u = kUnits[rng.below(kUnits.size())];
    return u;
  };
  RatMat m;
  switch (kind) {
    case FormKind::Hyp: {
      Rat u = unit(), w = unit();
      if (rng.coin())
        m = RatMat{{u, Rat(0)}, {Rat(0), w}};
      else
        m = RatMat{{Rat(0), u}, {w, Rat(0)}};
      break;
    }
    case FormKind::Diag11: {
      // lambda = a^2 + b^2, kept away from p.
      for (;;) {
        long a = rng.range(-6, 6), b = rng.range(-6, 6);
        if (a == 0 && b == 0) continue;
        if ((a * a + b * b) % p == 0) continue;
        if (rng.coin())
          m = RatMat{{Rat(a), Rat(-b)}, {Rat(b), Rat(a)}};
        else
          m = RatMat{{Rat(a), Rat(b)}, {Rat(b), Rat(-a)}};
        break;
      }
      break;
    }
    case FormKind::Diag1m2: {
      // lambda = a^2 - 2 b^2 (row convention [[a, b], [2b, a]]).
      for (;;) {
        long a = rng.range(-6, 6), b = rng.range(-6, 6);
        long lam = a * a - 2 * b * b;
        if (lam == 0 || lam % p == 0) continue;
        m = RatMat{{Rat(a), Rat(b)}, {Rat(2 * b), Rat(a)}};
        break;
      }
      break;
    }
    case FormKind::HH: {
      Rat u = unit(), w = unit(), s = unit();
      Rat lam = u * w;
      m = RatMat(4, std::vector<Rat>(4, Rat(0)));
      m[0][0] = u;
      m[1][1] = w;
      m[2][2] = s;
      m[3][3] = lam / s;
      if (rng.coin()) {  // swap the two planes: still factor lam
        RatMat sw(4, std::vector<Rat>(4, Rat(0)));
        sw[0][2] = sw[1][3] = sw[2][0] = sw[3][1] = Rat(1);
        m = rmat_mul(m, sw);
      }
      break;
    }
  }
  if (twist) m = rmat_mul(m, twist2_map(kind));
  return m;
}

// Isometry (factor exactly 1) of the given form, p-integral with p-integral
// inverse, for the compact-similitude invariance sweep.
RatMat isometry_sample(FormKind kind, CaseRng& rng, long p) {
  switch (kind) {
    case FormKind::Hyp: {
      Rat u = kUnits[rng.below(kUnits.size())];
      if (rng.coin()) return RatMat{{u, Rat(0)}, {Rat(0), Rat(1) / u}};
      return RatMat{{Rat(0), u}, {Rat(1) / u, Rat(0)}};
    }
    case FormKind::Diag11: {
      // Rational circle points with denominators away from p.
      static const std::array<std::array<long, 3>, 3> p3 = {{
          {3, 4, 5}, {-4, 3, 5}, {8, 15, 17}}};
      static const std::array<std::array<long, 3>, 3> p5 = {{
          {5, 12, 13}, {-12, 5, 13}, {8, 15, 17}}};
      const auto& tbl = (p == 3) ? p3 : p5;
      const auto& e = tbl[rng.below(tbl.size())];
      Rat a(e[0], e[2]), b(e[1], e[2]);
      if (rng.coin()) return RatMat{{a, -b}, {b, a}};
      return RatMat{{a, b}, {b, -a}};
    }
    case FormKind::Diag1m2: {
      // Pell units a^2 - 2 b^2 = 1 (and the sign flips).
      static const std::array<std::array<long, 2>, 3> pell = {{
          {3, 2}, {17, 12}, {1, 0}}};
      const auto& e = pell[rng.below(pell.size())];
      Rat a(e[0]), b(e[1]);
      if (rng.coin()) b = -b;
      RatMat m{{a, b}, {Rat(2) * b, a}};
      if (rng.coin()) {  // compose with diag(1,-1), also an isometry
        m[0][1] = -m[0][1];
        m[1][1] = -m[1][1];
      }
      return m;
    }
    case FormKind::HH: {
      Rat u = kUnits[rng.below(kUnits.size())];
      Rat w = kUnits[rng.below(kUnits.size())];
      RatMat m(4, std::vector<Rat>(4, Rat(0)));
      m[0][0] = u;
      m[1][1] = Rat(1) / u;
      m[2][2] = w;
      m[3][3] = Rat(1) / w;
      if (rng.coin()) {  // swap the two hyperbolic planes
        RatMat sw(4, std::vector<Rat>(4, Rat(0)));
        sw[0][2] = sw[1][3] = sw[2][0] = sw[3][1] = Rat(1);
        m = rmat_mul(m, sw);
      }
      if (rng.coin()) {  // swap x/y within both planes
        RatMat sw(4, std::vector<Rat>(4, Rat(0)));
        sw[0][1] = sw[1][0] = sw[2][3] = sw[3][2] = Rat(1);
        m = rmat_mul(m, sw);
      }
      return m;
    }
  }
  throw Error(ErrorCode::Internal, "unknown form kind");
}

// Random word in Sp6(Z): symmetric shears, unimodular Levi blocks, and the
// Weyl reflection.
Sp6Element sp6_integral_word(CaseRng& rng, int steps) {
  Mat6 g = mat6_identity();
  auto mat6_from_blocks = [](const RatMat& A, const RatMat& B, const RatMat& C,
                             const RatMat& D) {
    Mat6 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        m[i][j] = A[i][j];
        m[i][j + 3] = B[i][j];
        m[i + 3][j] = C[i][j];
        m[i + 3][j + 3] = D[i][j];
      }
    return m;
  };
  RatMat I3(3, std::vector<Rat>(3, Rat(0))), Z3 = I3;
  for (int i = 0; i < 3; ++i) I3[i][i] = Rat(1);
  for (int s = 0; s < steps; ++s) {
    Mat6 step;
    switch (rng.below(4)) {
      case 0:
      case 1: {  // upper/lower symmetric shear
        RatMat S(3, std::vector<Rat>(3, Rat(0)));
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j) S[i][j] = S[j][i] = Rat(rng.range(-2, 2));
        step = (rng.below(4) < 2) ? mat6_from_blocks(I3, S, Z3, I3)
                                  : mat6_from_blocks(I3, Z3, S, I3);
        break;
      }
      case 2: {  // Levi block diag(A, A^{-T}) with A unimodular
        RatMat A = I3;
        int i = static_cast<int>(rng.below(3)), j = static_cast<int>(rng.below(3));
        if (i == j) {  // permutation (swap two rows)
          int k = (j + 1) % 3;
          std::swap(A[j], A[k]);
        } else {
          A[i][j] = Rat(rng.range(-2, 2));
        }
        RatMat AinvT = rmat_transpose(rmat_inverse(A));
        step = mat6_from_blocks(A, Z3, Z3, AinvT);
        break;
      }
      default:
        step = symplectic_form();  // J itself lies in Sp6(Z)
        break;
    }
    g = mat6_mul(g, step);
  }
  return Sp6Element(g);
}

std::vector<Rat> row_times(const std::vector<Rat>& v, const RatMat& M) {
  std::vector<Rat> out(M[0].size(), Rat(0));
  for (size_t j = 0; j < out.size(); ++j)
    for (size_t i = 0; i < v.size(); ++i) out[j] += v[i] * M[i][j];
  return out;
}

// ---------------------------------------------------------------------------
// Check plumbing.

struct Ctx {
  std::vector<long> primes;
  std::uint64_t seed;
  int threads;
};

// Run `n` indexed boolean cases in parallel; the first failing index (by
// case order, not completion order) provides the counterexample detail.
CheckResult run_cases(const Ctx& cx, const char* suite, const char* name,
                      long long n,
                      const std::function<bool(long long, std::string&)>& one) {
  std::vector<char> ok(static_cast<size_t>(n), 0);
  std::vector<std::string> notes(static_cast<size_t>(n));
  parallel_for(n, cx.threads, [&](long long i) {
    std::string note;
    ok[static_cast<size_t>(i)] = one(i, note) ? 1 : 0;
    notes[static_cast<size_t>(i)] = std::move(note);
  });
  CheckResult r;
  r.suite = suite;
  r.name = name;
  r.cases = n;
  r.pass = true;
  for (long long i = 0; i < n; ++i) {
    if (!ok[static_cast<size_t>(i)]) {
      r.pass = false;
      r.detail = "case " + std::to_string(i) +
                 (notes[static_cast<size_t>(i)].empty()
                      ? std::string()
                      : ": " + notes[static_cast<size_t>(i)]);
      break;
    }
  }
  return r;
}

std::string rat_str(const Rat& x) { return rat_to_string(x); }

// ---------------------------------------------------------------------------
// Suite: padic.

void suite_padic(const Ctx& cx, std::vector<CheckResult>& out) {
  for (long p : cx.primes) {
    out.push_back(run_cases(
        cx, "padic", ("hilbert-oracle-p" + std::to_string(p)).c_str(), 200,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 101, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          auto draw = [&]() -> Rat {
            long num = rng.range(-9, 9);
            if (num == 0) num = 5;
            return Rat(num) * pow_p(p, rng.range(-2, 2));
          };
          Rat a = draw(), b = draw();
          int fast = hilbert_symbol(a, b, p);
          int slow = hilbert_symbol_oracle(a, b, p);
          if (fast != slow) {
            note = "(" + rat_str(a) + "," + rat_str(b) + "): " +
                   std::to_string(fast) + " vs oracle " + std::to_string(slow);
            return false;
          }
          return true;
        }));
    out.push_back(run_cases(
        cx, "padic", ("hilbert-bilinear-p" + std::to_string(p)).c_str(), 120,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 102, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          auto draw = [&]() -> Rat {
            long num = rng.range(-9, 9);
            if (num == 0) num = 7;
            return Rat(num) * pow_p(p, rng.range(-2, 2));
          };
          Rat a = draw(), b1 = draw(), b2 = draw();
          bool good = hilbert_symbol(a, b1 * b2, p) ==
                      hilbert_symbol(a, b1, p) * hilbert_symbol(a, b2, p);
          if (!good)
            note = "a=" + rat_str(a) + " b1=" + rat_str(b1) + " b2=" + rat_str(b2);
          return good;
        }));
    out.push_back(run_cases(
        cx, "padic", ("chi-multiplicative-p" + std::to_string(p)).c_str(),
        4 * 40, [&](long long i, std::string& note) {
          FormKind kind = kAllForms[static_cast<size_t>(i) / 40];
          QuadraticSpace V = space_of(kind);
          CaseRng rng(cx.seed, 103, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          auto draw = [&]() -> Rat {
            long num = rng.range(-9, 9);
            if (num == 0) num = 2;
            return Rat(num) * pow_p(p, rng.range(-2, 2));
          };
          Rat a = draw(), b = draw();
          bool good = V.chi(a * b, p) == V.chi(a, p) * V.chi(b, p);
          if (!good)
            note = std::string(form_name(kind)) + " a=" + rat_str(a) +
                   " b=" + rat_str(b);
          return good;
        }));
    // Unramified similitude characters: chi_Q(factor) = 1 on p-unit factors,
    // sampled over genuinely non-square factors as well.
    for (FormKind kind : kAllForms) {
      QuadraticSpace V = space_of(kind);
      std::atomic<long long> nonsquare{0};
      CheckResult r = run_cases(
          cx, "padic",
          (std::string("similitude-character-") + form_name(kind) + "-p" +
           std::to_string(p))
              .c_str(),
          50, [&](long long i, std::string& note) {
            CaseRng rng(cx.seed, 104 + static_cast<std::uint32_t>(kind),
                        static_cast<std::uint64_t>(i) * 2 + (p == 5));
            // Case 0 forces the factor-2 twist so non-square factors always
            // appear (2 is a non-square mod 3 and mod 5).
            bool twist = (i == 0) || rng.coin();
            RatMat g = similitude_sample(kind, rng, p, twist);
            Rat lam;
            try {
              lam = V.similitude(g);
            } catch (const Error& e) {
              note = std::string("similitude rejected: ") + e.what();
              return false;
            }
            if (val_p(lam, p) != 0) {
              note = "factor not a unit: " + rat_str(lam);
              return false;
            }
            if (legendre(residue_mod(unit_part(lam, p), Int(p), p), p) == -1)
              ++nonsquare;
            if (V.chi(lam, p) != 1) {
              note = "chi(" + rat_str(lam) + ") != 1";
              return false;
            }
            return true;
          });
      if (r.pass && nonsquare.load() < 5) {
        r.pass = false;
        r.detail = "only " + std::to_string(nonsquare.load()) +
                   " non-square factors sampled";
      }
      if (r.pass)
        r.detail = std::to_string(nonsquare.load()) + " non-square factors";
      out.push_back(std::move(r));
    }
  }
}

// ---------------------------------------------------------------------------
// Suite: cyclotomic.

void suite_cyclotomic(const Ctx& cx, std::vector<CheckResult>& out) {
  for (long p : cx.primes) {
    PAdicContext ctx(p, 4);
    out.push_back(run_cases(
        cx, "cyclotomic", ("psi-additive-p" + std::to_string(p)).c_str(), 100,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 201, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          auto draw = [&]() -> Rat {
            return Rat(rng.range(-20, 20)) * pow_p(p, rng.range(-3, 1));
          };
          Rat x = draw(), y = draw();
          bool good = psi(ctx, x + y) == psi(ctx, x) * psi(ctx, y);
          if (!good) note = "x=" + rat_str(x) + " y=" + rat_str(y);
          return good;
        }));
    out.push_back(run_cases(
        cx, "cyclotomic", ("psi-depth-p" + std::to_string(p)).c_str(), 50,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 202, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          // Trivial on integers, a genuine p-th root one level down, and
          // conjugation matches negation.
          Rat n(rng.range(-50, 50));
          if (psi(ctx, n) != CycValue(Rat(1))) {
            note = "psi not trivial at " + rat_str(n);
            return false;
          }
          CycValue z = psi(ctx, Rat(1, static_cast<long>(p)) + n);
          CycValue zp = CycValue(Rat(1));
          for (long k = 0; k < p; ++k) zp = zp * z;
          if (!(zp == CycValue(Rat(1))) || z == CycValue(Rat(1))) {
            note = "p-th root failure one level down";
            return false;
          }
          Rat x = Rat(rng.range(-20, 20)) * pow_p(p, rng.range(-3, 0));
          if (!(psi(ctx, x).conj() == psi(ctx, -x))) {
            note = "conjugation mismatch at " + rat_str(x);
            return false;
          }
          return true;
        }));
    out.push_back(run_cases(
        cx, "cyclotomic", ("accumulator-naive-p" + std::to_string(p)).c_str(),
        20, [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 203, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          CycAccumulator acc(ctx);
          CycValue naive = CycValue::zero();
          long long N = 4;
          for (int k = 0; k < ctx.K; ++k) N *= p;
          for (int t = 0; t < 25; ++t) {
            long long e = static_cast<long long>(rng.below(
                static_cast<std::uint64_t>(N)));
            acc.add(e);
            naive = naive + CycValue::monomial(ctx, e, Rat(1));
          }
          bool good = acc.value() == naive;
          if (!good) note = "accumulated sum disagrees with naive sum";
          return good;
        }));
    out.push_back(run_cases(
        cx, "cyclotomic",
        ("gauss-stability-p" + std::to_string(p)).c_str(), 4,
        [&](long long i, std::string& note) {
          QuadraticSpace V = space_of(kAllForms[static_cast<size_t>(i)]);
          // Raw sums at depth k see character arguments of valuation -2k, so
          // give the field depth 6; the resource guard p^{2kd} <= 2e7 then
          // limits how deep the Riemann sums may go.
          PAdicContext deep(p, 6);
          const int kmax = V.dim() == 2 ? (p == 3 ? 3 : 2) : 1;
          CycValue g1 = weil_index_raw(V, deep, 1);
          CycValue g = weil_index(V, deep);
          for (int k = 2; k <= kmax; ++k)
            if (!(weil_index_raw(V, deep, k) == g1)) {
              note = std::string(form_name(kAllForms[static_cast<size_t>(i)])) +
                     ": Gauss sums did not stabilize";
              return false;
            }
          if (!(g == g1)) {
            note = std::string(form_name(kAllForms[static_cast<size_t>(i)])) +
                   ": closed index disagrees with the raw sum";
            return false;
          }
          if (!(g * g.conj() == CycValue(Rat(1)))) {
            note = "index not of absolute value 1";
            return false;
          }
          CycValue g8 = CycValue(Rat(1));
          for (int k = 0; k < 8; ++k) g8 = g8 * g;
          if (!(g8 == CycValue(Rat(1)))) {
            note = "index is not an 8th root of unity";
            return false;
          }
          if (kAllForms[static_cast<size_t>(i)] == FormKind::Hyp &&
              !(g == CycValue(Rat(1)))) {
            note = "hyperbolic plane must have trivial index";
            return false;
          }
          return true;
        }));
  }
}

// ---------------------------------------------------------------------------
// Suite: weil-rep.

int window_budget(long p, int d) {
  if (p == 3) return d <= 2 ? 3 : 2;
  return d <= 2 ? 2 : 1;
}

void suite_weil_rep(const Ctx& cx, std::vector<CheckResult>& out) {
  for (long p : cx.primes) {
    PAdicContext ctx(p, 6);
    // The deepest self-check: rho is a true representation, verified by
    // composing exact operator words two ways.  Sampled words keep their
    // negative shear depth within the window budget; draws that still
    // overflow the cell budget are skipped deterministically by index.
    for (FormKind kind : kAllForms) {
      QuadraticSpace V = space_of(kind);
      SchwartzFn f0 = SchwartzFn::lattice_indicator(ctx, V);
      const int budget = window_budget(p, V.dim());
      out.push_back(run_cases(
          cx, "weil-rep",
          (std::string("representation-composition-") + form_name(kind) +
           "-p" + std::to_string(p))
              .c_str(),
          100, [&](long long i, std::string& note) {
            for (int attempt = 0; attempt < 24; ++attempt) {
              CaseRng rng(cx.seed, 301 + static_cast<std::uint32_t>(kind),
                          (static_cast<std::uint64_t>(i) << 6) +
                              static_cast<std::uint64_t>(attempt) * 2 +
                              (p == 5));
              // Later attempts use shallow words so a case always lands.
              int b1 = attempt < 16 ? (budget + 1) / 2 : 0;
              int b2 = attempt < 16 ? budget - b1 : 0;
              Mat2 g1 = sl2_word(rng, p, 3, b1);
              Mat2 g2 = sl2_word(rng, p, 3, b2);
              try {
                SchwartzFn rhs = weil_apply(mat2_mul(g1, g2), f0);
                SchwartzFn lhs = weil_apply(g1, weil_apply(g2, f0));
                if (!schwartz_equal(lhs, rhs)) {
                  note = "composition mismatch";
                  return false;
                }
                return true;
              } catch (const Error& e) {
                if (e.code() == ErrorCode::PrecisionExceeded ||
                    e.code() == ErrorCode::ResourceBound)
                  continue;  // deterministic resample
                throw;
              }
            }
            note = "no admissible sampled word";
            return false;
          }));
    }
    // The compact group fixes the lattice indicator, slotwise and through
    // the triple action.
    for (const TripleSpec& spec : kTriples) {
      QuadTriple T = make_triple(spec);
      ProductFn F0 = ProductFn::lattice_indicator(ctx, T);
      out.push_back(run_cases(
          cx, "weil-rep",
          (std::string("lattice-fixed-by-compact-") + spec.name + "-p" +
           std::to_string(p))
              .c_str(),
          18, [&](long long i, std::string& note) {
            CaseRng rng(cx.seed, 311, (static_cast<std::uint64_t>(i) << 3) +
                                          static_cast<std::uint64_t>(
                                              2 * (&spec - kTriples.data())) +
                                          (p == 5));
            std::array<Mat2, 3> k;
            for (int s = 0; s < 3; ++s) k[s] = sl2_compact_word(rng, p, 4);
            for (int s = 0; s < 3; ++s) {
              SchwartzFn fs =
                  SchwartzFn::lattice_indicator(ctx, T.spaces[static_cast<size_t>(s)]);
              if (!schwartz_equal(weil_apply(k[s], fs), fs)) {
                note = "slot " + std::to_string(s) + " moved the indicator";
                return false;
              }
            }
            ProductFn moved = rho_triple(k, F0);
            for (int t = 0; t < 4; ++t) {
              std::array<std::vector<Rat>, 3> v;
              for (int s = 0; s < 3; ++s) {
                int d = T.spaces[static_cast<size_t>(s)].dim();
                v[static_cast<size_t>(s)].assign(static_cast<size_t>(d), Rat(0));
                for (int c = 0; c < d; ++c)
                  v[static_cast<size_t>(s)][static_cast<size_t>(c)] =
                      Rat(rng.range(-4, 4)) * pow_p(p, rng.range(-1, 1));
              }
              if (!(moved.eval(v[0], v[1], v[2]) == F0.eval(v[0], v[1], v[2]))) {
                note = "triple action moved the tensor indicator";
                return false;
              }
            }
            return true;
          }));
    }
    // Fourier inversion on randomized functions: hat hat f (v) = f(-v).
    out.push_back(run_cases(
        cx, "weil-rep", ("fourier-inversion-p" + std::to_string(p)).c_str(),
        4 * 5, [&](long long i, std::string& note) {
          FormKind kind = kAllForms[static_cast<size_t>(i) / 5];
          QuadraticSpace V = space_of(kind);
          CaseRng rng(cx.seed, 321, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          int m = 1, n = (V.dim() == 4 && p == 5) ? 0 : 1;
          SchwartzFn f(ctx, V, m, n);
          for (int t = 0; t < 8; ++t) {
            long long cell = static_cast<long long>(
                rng.below(static_cast<std::uint64_t>(f.cell_count())));
            f.set_cell(cell,
                       CycValue(Rat(rng.range(-3, 3)) / Rat(rng.range(1, 2))));
          }
          SchwartzFn g = fourier(fourier(f));
          for (long long flat = 0; flat < f.cell_count(); ++flat) {
            auto rep = f.cell_rep(f.cell_tuple(flat));
            std::vector<Rat> neg = rep;
            for (Rat& x : neg) x = -x;
            if (!(g.eval(neg) == f.cell_value(flat))) {
              note = std::string(form_name(kind)) + ": inversion failed";
              return false;
            }
          }
          return true;
        }));
    // weil_w is unitary up to the index: conjugate-square mass preserved.
    out.push_back(run_cases(
        cx, "weil-rep", ("w-unitary-p" + std::to_string(p)).c_str(), 4 * 3,
        [&](long long i, std::string& note) {
          FormKind kind = kAllForms[static_cast<size_t>(i) / 3];
          QuadraticSpace V = space_of(kind);
          CaseRng rng(cx.seed, 331, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          int n = (V.dim() == 4 && p == 5) ? 0 : 1;
          SchwartzFn f(ctx, V, 0, n);
          for (int t = 0; t < 5; ++t) {
            long long cell = static_cast<long long>(
                rng.below(static_cast<std::uint64_t>(f.cell_count())));
            f.set_cell(cell, CycValue(Rat(rng.range(-3, 3))));
          }
          SchwartzFn F = weil_w(f);
          // Squared mass weighted by cell volume: a window-(m, n) cell is a
          // coset of p^n Z_p^d and has measure p^{-n d}.
          auto mass = [&](const SchwartzFn& h) {
            CycValue s = CycValue::zero();
            for (long long flat = 0; flat < h.cell_count(); ++flat)
              s = s + h.cell_value(flat) * h.cell_value(flat).conj();
            return s * CycValue(pow_p(p, -static_cast<long>(h.window_n()) *
                                             h.dim()));
          };
          bool good = mass(f) == mass(F);
          if (!good)
            note = std::string(form_name(kind)) + ": mass not preserved";
          return good;
        }));
    // Bruhat consistency: the lower unipotent factors two distinct ways.
    out.push_back(run_cases(
        cx, "weil-rep", ("bruhat-consistency-p" + std::to_string(p)).c_str(),
        4 * 3, [&](long long i, std::string& note) {
          FormKind kind = kAllForms[static_cast<size_t>(i) / 3];
          long which = static_cast<long>(i % 3);
          QuadraticSpace V = space_of(kind);
          SchwartzFn f0 = SchwartzFn::lattice_indicator(ctx, V);
          Rat c = which == 0 ? Rat(1) : which == 1 ? Rat(2) : Rat(p);
          Mat2 lower{{{Rat(1), Rat(0)}, {c, Rat(1)}}};
          Mat2 winv{{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}};
          SchwartzFn direct = weil_apply(lower, f0);
          SchwartzFn composite =
              weil_apply(winv, weil_apply(sl2_n(-c), weil_apply(sl2_w(), f0)));
          bool good = schwartz_equal(direct, composite);
          if (!good)
            note = std::string(form_name(kind)) + " c=" + rat_str(c);
          return good;
        }));
  }
}

// ---------------------------------------------------------------------------
// Suite: symplectic.

// Solve for (c_-1, c_0, c_1) with c_-1/x + c_0 + c_1 x = y(x) at x = 2,3,4,
// returning false if the interpolation is inconsistent.
std::array<Rat, 3> pin_laurent(const std::array<Rat, 3>& y) {
  // Vandermonde rows for x = 2, 3, 4 and basis (1/x, 1, x).
  const std::array<long, 3> xs = {2, 3, 4};
  RatMat A(3, std::vector<Rat>(4, Rat(0)));
  for (int r = 0; r < 3; ++r) {
    A[r][0] = Rat(1, xs[static_cast<size_t>(r)]);
    A[r][1] = Rat(1);
    A[r][2] = Rat(xs[static_cast<size_t>(r)]);
    A[r][3] = y[static_cast<size_t>(r)];
  }
  int rank = rmat_rref(A);
  require(rank == 3, ErrorCode::Internal, "laurent interpolation degenerate");
  return {A[0][3], A[1][3], A[2][3]};
}

constexpr std::array<OrbitLabel, 5> kAllLabels = {
    OrbitLabel::L000, OrbitLabel::L100, OrbitLabel::L010, OrbitLabel::L001,
    OrbitLabel::L111};

bool plane_span_equal(const RatMat& a, const RatMat& b) {
  RatMat ra = a, rb = b;
  rmat_rref(ra);
  rmat_rref(rb);
  return ra == rb;
}

void suite_symplectic(const Ctx& cx, std::vector<CheckResult>& out) {
  // Orbit representatives: integral, symplectic, and they transport the
  // coordinate plane to the labelled plane.
  out.push_back(run_cases(
      cx, "symplectic", "gamma-integral-symplectic", 5,
      [&](long long i, std::string& note) {
        OrbitLabel a = kAllLabels[static_cast<size_t>(i)];
        Sp6Element g = gamma_rep(a);  // constructor verifies symplectic
        for (int r = 0; r < 6; ++r)
          for (int c = 0; c < 6; ++c)
            if (g.mat()[r][c].get_den() != 1) {
              note = std::string(orbit_label_name(a)) + ": non-integral entry";
              return false;
            }
        // Bottom rows of gamma span the labelled plane: W . gamma = W_a.
        RatMat bottom(3, std::vector<Rat>(6));
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 6; ++c) bottom[r][c] = g.mat()[r + 3][c];
        if (!plane_span_equal(bottom, plane_matrix(a))) {
          note = std::string(orbit_label_name(a)) + ": plane transport failed";
          return false;
        }
        return true;
      }));
  // Pairwise distinct planes.
  out.push_back(run_cases(cx, "symplectic", "planes-pairwise-distinct", 10,
                          [&](long long i, std::string& note) {
                            int a = 0, b = 0, k = 0;
                            for (int x = 0; x < 5 && k <= i; ++x)
                              for (int y = x + 1; y < 5; ++y, ++k)
                                if (k == i) { a = x; b = y; }
                            bool distinct = !plane_span_equal(
                                plane_matrix(kAllLabels[static_cast<size_t>(a)]),
                                plane_matrix(kAllLabels[static_cast<size_t>(b)]));
                            if (!distinct)
                              note = "labels " + std::to_string(a) + "," +
                                     std::to_string(b) + " coincide";
                            return distinct;
                          }));
  // Conjugation of the scalar torus pinned symbolically: entries of
  // gamma · diag(x I, x^{-1} I) · gamma^{-1} are Laurent polynomials of
  // degree <= 1, so values at x = 2, 3, 4 determine them exactly.
  out.push_back(run_cases(
      cx, "symplectic", "torus-conjugation-pinned", 5,
      [&](long long li, std::string& note) {
        OrbitLabel a = kAllLabels[static_cast<size_t>(li)];
        Sp6Element g = gamma_rep(a);
        Sp6Element ginv = g.inverse();
        std::array<Mat6, 3> M;
        const std::array<long, 3> xs = {2, 3, 4};
        for (int t = 0; t < 3; ++t) {
          Mat6 D = mat6_zero();
          for (int r = 0; r < 3; ++r) {
            D[r][r] = Rat(xs[static_cast<size_t>(t)]);
            D[r + 3][r + 3] = Rat(1, xs[static_cast<size_t>(t)]);
          }
          M[static_cast<size_t>(t)] =
              mat6_mul(mat6_mul(g.mat(), D), ginv.mat());
        }
        int plus = 0, minus = 0;
        for (int r = 0; r < 6; ++r)
          for (int c = 0; c < 6; ++c) {
            auto coeff = pin_laurent({M[0][r][c], M[1][r][c], M[2][r][c]});
            if (r != c) {
              if (coeff[0] != 0 || coeff[1] != 0 || coeff[2] != 0) {
                note = std::string(orbit_label_name(a)) +
                       ": off-diagonal entry survives conjugation";
                return false;
              }
              continue;
            }
            bool is_x = coeff[0] == 0 && coeff[1] == 0 && coeff[2] == 1;
            bool is_xinv = coeff[0] == 1 && coeff[1] == 0 && coeff[2] == 0;
            if (is_x) ++plus;
            if (is_xinv) ++minus;
            if (!is_x && !is_xinv) {
              note = std::string(orbit_label_name(a)) +
                     ": diagonal entry is not x or 1/x";
              return false;
            }
          }
        if (plus != 3 || minus != 3) {
          note = std::string(orbit_label_name(a)) + ": weight multiset wrong";
          return false;
        }
        return true;
      }));
  // The norm of the open-cell coordinates: seven-term maximum.
  for (long p : cx.primes) {
    out.push_back(run_cases(
        cx, "symplectic", ("norm-seven-term-p" + std::to_string(p)).c_str(),
        200, [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 401, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          static const std::array<long, 3> nums = {1, 2, 7};
          Rat t = (i % 10 == 0)
                      ? Rat(0)
                      : Rat((rng.coin() ? 1 : -1) *
                            nums[rng.below(nums.size())]) *
                            pow_p(p, rng.range(-4, 2));
          std::array<Rat, 3> aval;
          std::array<Mat2, 3> slots;
          for (int s = 0; s < 3; ++s) {
            aval[static_cast<size_t>(s)] =
                Rat((rng.coin() ? 1 : -1) * nums[rng.below(nums.size())]) *
                pow_p(p, rng.range(-3, 3));
            slots[static_cast<size_t>(s)] = mat2_mul(
                sl2_n(t), sl2_t(Rat(1) / aval[static_cast<size_t>(s)]));
          }
          Sp6Element g = gamma_rep(OrbitLabel::L000) * embed_triple(slots);
          long minval = VAL_INF;
          Rat prod = aval[0] * aval[1] * aval[2];
          if (t != 0) minval = std::min(minval, val_p(Rat(3) * t * prod, p));
          for (int s = 0; s < 3; ++s) {
            minval = std::min(minval, val_p(aval[static_cast<size_t>(s)], p));
            minval = std::min(
                minval, val_p(prod / (aval[static_cast<size_t>(s)] *
                                      aval[static_cast<size_t>(s)]),
                              p));
          }
          bool good = plucker_norm(g, p) == pow_p(p, -minval);
          if (!good)
            note = "t=" + rat_str(t) + " a=(" + rat_str(aval[0]) + "," +
                   rat_str(aval[1]) + "," + rat_str(aval[2]) + ")";
          return good;
        }));
    // Basic function: cell table, vanishing left of the support, and
    // right-invariance under sampled integral symplectic words.
    out.push_back(run_cases(
        cx, "symplectic", ("basic-cell-values-p" + std::to_string(p)).c_str(),
        12, [&](long long i, std::string& note) {
          long c = static_cast<long>(i) - 4;  // covers -4 .. 7
          Rat expect(0);
          if (c >= 0)
            for (long j = 0; 2 * j <= c; ++j) expect += pow_p(p, 2 * j);
          bool good = basic_b_cell(c, p) == expect;
          if (!good) note = "cell " + std::to_string(c);
          return good;
        }));
    out.push_back(run_cases(
        cx, "symplectic",
        ("basic-right-invariance-p" + std::to_string(p)).c_str(), 100,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 402, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          long c = rng.range(-2, 5);
          long num = rng.range(-5, 5);
          if (num == 0) num = 1;
          Rat x = Rat(num) * pow_p(p, rng.range(-2, 2));
          Sp6Element g = cell_representative(x, c);
          Sp6Element k = sp6_integral_word(rng, 5);
          if (basic_b(k, p) != Rat(1) || iwasawa_cell(k, p) != 0) {
            note = "sampled compact element not in the unit cell";
            return false;
          }
          Sp6Element gk = g * k;
          if (iwasawa_cell(gk, p) != iwasawa_cell(g, p)) {
            note = "cell moved by right compact action";
            return false;
          }
          bool good = basic_b(gk, p) == basic_b(g, p);
          if (!good) note = "basic function moved by right compact action";
          return good;
        }));
  }
  // Decay at p = 5: b(g)^10 <= |g|^{-21}, i.e. b(c)^10 <= q^{21 c}, exactly.
  if (std::find(cx.primes.begin(), cx.primes.end(), 5L) != cx.primes.end()) {
    out.push_back(run_cases(
        cx, "symplectic", "basic-decay-p5", 9,
        [&](long long i, std::string& note) {
          long c = static_cast<long>(i);
          Rat b = basic_b_cell(c, 5);
          Rat lhs(1);
          for (int k = 0; k < 10; ++k) lhs *= b;
          bool good = lhs <= pow_p(5, 21 * c);
          if (!good) note = "cell " + std::to_string(c);
          return good;
        }));
  }
  // Stabilizer predicates match the geometric action, membership and
  // non-membership both, for planes and for wedge points.
  out.push_back(run_cases(
      cx, "symplectic", "stabilizer-predicates", 5 * 60,
      [&](long long i, std::string& note) {
        OrbitLabel a = kAllLabels[static_cast<size_t>(i / 60)];
        long which = static_cast<long>(i % 60);
        CaseRng rng(cx.seed, 403, static_cast<std::uint64_t>(i));
        std::array<Mat2, 3> g;
        auto upper = [&](bool unipotent) {
          Rat u = unipotent ? Rat(1) : kUnits[rng.below(kUnits.size())];
          return Mat2{{{u, Rat(rng.range(-4, 4))}, {Rat(0), Rat(1) / u}}};
        };
        auto dconj = [](const Mat2& m) {
          return Mat2{{{m[0][0], -m[0][1]}, {-m[1][0], m[1][1]}}};
        };
        const bool point_mode = which >= 30;
        const long mode = which % 30;
        if (mode < 18) {
          // Construct a member of the parametric family.
          switch (a) {
            case OrbitLabel::L000: {
              Rat u = point_mode ? Rat(1) : kUnits[rng.below(kUnits.size())];
              Rat t1(rng.range(-4, 4)), t2(rng.range(-4, 4));
              g = {Mat2{{{u, t1}, {Rat(0), Rat(1) / u}}},
                   Mat2{{{u, t2}, {Rat(0), Rat(1) / u}}},
                   Mat2{{{u, -t1 - t2}, {Rat(0), Rat(1) / u}}}};
              break;
            }
            case OrbitLabel::L100:
            case OrbitLabel::L010:
            case OrbitLabel::L001: {
              Mat2 free = sl2_compact_word(rng, 3, 3);
              Mat2 up = upper(point_mode);
              if (a == OrbitLabel::L100) g = {up, free, dconj(free)};
              if (a == OrbitLabel::L010) g = {free, up, dconj(free)};
              if (a == OrbitLabel::L001) g = {free, dconj(free), up};
              break;
            }
            case OrbitLabel::L111: {
              g = {upper(false), upper(false), upper(false)};
              if (point_mode) {
                // force product of diagonals to 1
                Rat prod = g[0][0][0] * g[1][0][0];
                g[2] = Mat2{{{Rat(1) / prod, Rat(rng.range(-4, 4))},
                             {Rat(0), prod}}};
              }
              break;
            }
          }
          bool pred = point_mode ? point_stabilizer_member(a, g)
                                 : stabilizer_member(a, g);
          bool geom = point_mode ? fixes_plucker_point(a, g)
                                 : stabilizes_plane(a, g);
          if (!pred || !geom) {
            note = std::string(orbit_label_name(a)) +
                   (point_mode ? " point" : " plane") +
                   ": constructed member rejected";
            return false;
          }
          return true;
        }
        // Random triples: predicate must coincide with geometry either way.
        for (int s = 0; s < 3; ++s) g[static_cast<size_t>(s)] = sl2_compact_word(rng, 3, 3);
        bool pred = point_mode ? point_stabilizer_member(a, g)
                               : stabilizer_member(a, g);
        bool geom = point_mode ? fixes_plucker_point(a, g)
                               : stabilizes_plane(a, g);
        if (pred != geom) {
          note = std::string(orbit_label_name(a)) +
                 (point_mode ? " point" : " plane") +
                 ": predicate disagrees with geometry";
          return false;
        }
        return true;
      }));
  for (long p : cx.primes) {
    out.push_back(run_cases(
        cx, "symplectic",
        ("cell-representative-roundtrip-p" + std::to_string(p)).c_str(), 30,
        [&](long long i, std::string& note) {
          CaseRng rng(cx.seed, 404, static_cast<std::uint64_t>(i) * 2 + (p == 5));
          long c = rng.range(-3, 6);
          // The representative diag(x^{-c}, 1, 1, x^c, 1, 1) sits in cell
          // c val(x), so draw x = unit * p.
          static const std::array<long, 7> units = {1, 2, -1, -2, 4, -4, 7};
          Rat x = Rat(units[rng.below(units.size())]) * Rat(p);
          bool good = iwasawa_cell(cell_representative(x, c), p) == c;
          if (!good) note = "cell " + std::to_string(c);
          return good;
        }));
  }
  out.push_back(run_cases(cx, "symplectic", "plucker-identity-basis", 1,
                          [&](long long, std::string& note) {
                            Vec20 w = plucker(Sp6Element::identity());
                            for (int t = 0; t < 20; ++t) {
                              const auto& c = kPluckerTriples[static_cast<size_t>(t)];
                              Rat expect =
                                  (c[0] == 3 && c[1] == 4 && c[2] == 5)
                                      ? Rat(1)
                                      : Rat(0);
                              if (w[static_cast<size_t>(t)] != expect) {
                                note = "identity wedge has a wrong coordinate";
                                return false;
                              }
                            }
                            return true;
                          }));
}

// ---------------------------------------------------------------------------
// Suite: local-integral.

void suite_local_integral(const Ctx& cx, std::vector<CheckResult>& out) {
  for (long p : cx.primes) {
    const std::vector<BatteryPoint> battery = build_battery(p);
    const std::vector<BatteryPoint> off = build_offlattice(p);
    // Headline property: the closed form equals the brute-force oracle,
    // exactly, on every battery point.
    {
      long long zero_slots = 0;
      for (const auto& bp : battery) zero_slots += bp.zero_slot >= 0;
      CheckResult r = run_cases(
          cx, "local-integral",
          ("closed-equals-oracle-p" + std::to_string(p)).c_str(),
          static_cast<long long>(battery.size()),
          [&](long long i, std::string& note) {
            const BatteryPoint& bp = battery[static_cast<size_t>(i)];
            ClosedResult closed = local_integral_closed(bp.forms, bp.point, p);
            OracleResult oracle = local_integral_oracle(
                bp.forms, bp.point,
                default_cell_function(bp.forms, bp.point, p), p);
            if (closed.value != oracle.rational) {
              note = bp.triple_name + " ord(" + std::to_string(bp.ord[0]) +
                     "," + std::to_string(bp.ord[1]) + "," +
                     std::to_string(bp.ord[2]) + "): closed " +
                     rat_str(closed.value) + " vs oracle " +
                     rat_str(oracle.rational);
              return false;
            }
            return true;
          });
      if (r.pass)
        r.detail = std::to_string(battery.size()) + " points, " +
                   std::to_string(zero_slots) + " with a zero slot";
      out.push_back(std::move(r));
    }
    out.push_back(run_cases(
        cx, "local-integral",
        ("off-lattice-vanishing-p" + std::to_string(p)).c_str(),
        static_cast<long long>(off.size()),
        [&](long long i, std::string& note) {
          const BatteryPoint& bp = off[static_cast<size_t>(i)];
          ClosedResult closed = local_integral_closed(bp.forms, bp.point, p);
          OracleResult oracle = local_integral_oracle(
              bp.forms, bp.point, default_cell_function(bp.forms, bp.point, p),
              p);
          bool good = closed.value == 0 && oracle.rational == 0;
          if (!good) note = bp.triple_name + ": nonzero off the lattice";
          return good;
        }));
    // Absolute-value integral against its closed bound, on- and off-lattice.
    {
      std::vector<const BatteryPoint*> pts;
      for (const auto& bp : battery) pts.push_back(&bp);
      for (const auto& bp : off) pts.push_back(&bp);
      long long zero_slots = 0;
      for (const auto* bp : pts) zero_slots += bp->zero_slot >= 0;
      CheckResult r = run_cases(
          cx, "local-integral",
          ("absolute-bound-p" + std::to_string(p)).c_str(),
          static_cast<long long>(pts.size()),
          [&](long long i, std::string& note) {
            const BatteryPoint& bp = *pts[static_cast<size_t>(i)];
            AbsBoundReport rep = abs_integral_bound_check(bp.forms, bp.point, p);
            if (!rep.holds) {
              note = bp.triple_name + ": integral " + rat_str(rep.integral) +
                     " exceeds bound " + rat_str(rep.bound);
              return false;
            }
            if (!bp.integral && !(rep.integral == 0 && rep.bound == 0)) {
              note = bp.triple_name + ": off-lattice sides not both zero";
              return false;
            }
            return true;
          });
      if (r.pass)
        r.detail = std::to_string(pts.size()) + " points, " +
                   std::to_string(zero_slots) + " with a zero slot";
      out.push_back(std::move(r));
    }
    // Invariance under the integral similitude group (common factor).
    {
      std::vector<const BatteryPoint*> pts;
      for (const auto& bp : battery)
        if (bp.integral &&
            *std::max_element(bp.ord.begin(), bp.ord.end()) <= 1)
          pts.push_back(&bp);
      out.push_back(run_cases(
          cx, "local-integral",
          ("compact-similitude-invariance-p" + std::to_string(p)).c_str(),
          static_cast<long long>(pts.size()) * 5,
          [&](long long i, std::string& note) {
            const BatteryPoint& bp = *pts[static_cast<size_t>(i / 5)];
            CaseRng rng(cx.seed, 501, static_cast<std::uint64_t>(i) * 2 + (p == 5));
            const TripleSpec* spec = nullptr;
            for (const TripleSpec& s : kTriples)
              if (bp.triple_name == s.name) spec = &s;
            require(spec != nullptr, ErrorCode::Internal, "unknown triple");
            // Slot maps: integral isometries, optionally all composed with
            // the canonical factor-2 similitude so the common factor stays
            // equal across the three slots.
            PointV moved;
            bool twist = rng.coin();
            for (int s = 0; s < 3; ++s) {
              FormKind kind = spec->kinds[static_cast<size_t>(s)];
              RatMat k = isometry_sample(kind, rng, p);
              if (twist) k = rmat_mul(k, twist2_map(kind));
              Rat lam = bp.forms.spaces[static_cast<size_t>(s)].similitude(k);
              require(lam == (twist ? Rat(2) : Rat(1)), ErrorCode::Internal,
                      "sampled slot map has the wrong similitude factor");
              moved.slots[static_cast<size_t>(s)] = row_times(
                  bp.point.slots[static_cast<size_t>(s)], rmat_inverse(k));
            }
            Rat a = local_integral_closed(bp.forms, bp.point, p).value;
            Rat b = local_integral_closed(bp.forms, moved, p).value;
            if (a != b) {
              note = bp.triple_name + ": integral moved under the compact "
                     "similitude action (" + rat_str(a) + " vs " + rat_str(b) +
                     ")";
              return false;
            }
            // One case per point re-integrates the moved point honestly.
            if (i % 5 == 0) {
              Rat orc = local_integral_oracle(
                            bp.forms, moved,
                            default_cell_function(bp.forms, moved, p), p)
                            .rational;
              if (orc != a) {
                note = bp.triple_name +
                       ": oracle at the moved point disagrees (" +
                       rat_str(orc) + " vs " + rat_str(a) + ")";
                return false;
              }
            }
            return true;
          }));
    }
    // Derivation obligations for the oracle's unit-handling and phase step.
    out.push_back(run_cases(
        cx, "local-integral",
        ("unit-average-suboracle-p" + std::to_string(p)).c_str(), 4,
        [&](long long i, std::string& note) {
          const BatteryPoint& bp =
              battery[static_cast<size_t>(i % 2 == 0 ? 0 : 2)];
          std::array<long, 3> e = i < 2 ? std::array<long, 3>{0, 0, 0}
                                        : std::array<long, 3>{1, 0, 0};
          bool good = unit_average_subcheck(bp.forms, bp.point, e,
                                            i % 2 == 0 ? -1 : 0, p);
          if (!good) note = "unit average is not trivial";
          return good;
        }));
    out.push_back(run_cases(
        cx, "local-integral",
        ("phase-suboracle-p" + std::to_string(p)).c_str(), 4,
        [&](long long i, std::string& note) {
          PAdicContext ctx(p, 4);
          const BatteryPoint& bp = battery[static_cast<size_t>(i)];
          Rat t = pow_p(p, -static_cast<long>(i % 3));
          bool good = weil_n_phase_subcheck(bp.forms, bp.point, t, ctx);
          if (!good) note = "shear phase disagrees with the character";
          return good;
        }));
  }
  // Pinned values, each previously confirmed by closed form AND oracle.
  struct Pinned {
    long p;
    const char* triple;
    std::array<std::vector<Rat>, 3> slots;
    Rat expect;
    bool check_oracle;
  };
  auto R = [](long n) { return Rat(n); };
  std::vector<Pinned> pinned;
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{R(1), R(1)}, {R(1), R(1)}, {R(1), R(1)}},
                    R(1), false});
  pinned.push_back({5, "hyperbolic",
                    {std::vector<Rat>{R(1), R(1)}, {R(1), R(1)}, {R(1), R(1)}},
                    R(1), false});
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{R(3), R(3)}, {R(3), R(3)}, {R(3), R(3)}},
                    R(4), true});
  pinned.push_back({5, "hyperbolic",
                    {std::vector<Rat>{R(5), R(25)}, {R(5), R(25)}, {R(5), R(25)}},
                    R(5), false});
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{R(9), R(9)}, {R(9), R(9)}, {R(9), R(9)}},
                    R(12), false});
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{R(0), R(0)}, {R(1), R(0)}, {R(1), R(0)}},
                    R(1), false});
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{R(0), R(0)}, {R(3), R(0)}, {R(3), R(0)}},
                    R(6), false});
  pinned.push_back({3, "mixed",
                    {std::vector<Rat>{R(1), R(9)}, {R(6), R(3)},
                     {R(3), R(3), R(0), R(0)}},
                    R(-2), true});
  pinned.push_back({3, "hyperbolic",
                    {std::vector<Rat>{Rat(1, 3), R(3)}, {R(1), R(1)},
                     {R(1), R(1)}},
                    R(0), false});
  {
    // Filter to the primes actually requested.
    std::vector<Pinned> sel;
    for (auto& pn : pinned)
      if (std::find(cx.primes.begin(), cx.primes.end(), pn.p) !=
          cx.primes.end())
        sel.push_back(std::move(pn));
    out.push_back(run_cases(
        cx, "local-integral", "pinned-values",
        static_cast<long long>(sel.size()),
        [&](long long i, std::string& note) {
          const Pinned& pn = sel[static_cast<size_t>(i)];
          QuadTriple T = battery_triple(pn.triple);
          PointV v;
          v.slots = pn.slots;
          Rat got = local_integral_closed(T, v, pn.p).value;
          if (got != pn.expect) {
            note = std::string(pn.triple) + "@p=" + std::to_string(pn.p) +
                   ": closed " + rat_str(got) + " != pinned " +
                   rat_str(pn.expect);
            return false;
          }
          if (pn.check_oracle) {
            Rat orc = local_integral_oracle(
                          T, v, default_cell_function(T, v, pn.p), pn.p)
                          .rational;
            if (orc != pn.expect) {
              note = "oracle disagrees with pinned value";
              return false;
            }
          }
          return true;
        }));
  }
}

// ---------------------------------------------------------------------------
// Suite: orbits.

void suite_orbits(const Ctx& cx, std::vector<CheckResult>& out) {
  out.push_back(run_cases(
      cx, "orbits", "plane-orbit-census-q2", 1,
      [&](long long, std::string& note) {
        OrbitReport r = orbit_decompose(2);
        const std::array<long long, 5> sizes = {54, 18, 18, 18, 27};
        const std::array<long long, 5> stabs = {4, 12, 12, 12, 8};
        if (r.lagrangian_count != 135 || r.orbits.size() != 5) {
          note = "census shape wrong";
          return false;
        }
        for (int i = 0; i < 5; ++i) {
          const OrbitInfo& o = r.orbits[static_cast<size_t>(i)];
          if (o.size != sizes[static_cast<size_t>(i)] ||
              o.stabilizer_order != stabs[static_cast<size_t>(i)] ||
              o.parametric_order != stabs[static_cast<size_t>(i)]) {
            note = std::string("orbit ") + o.label + " has size " +
                   std::to_string(o.size) + ", stabilizer " +
                   std::to_string(o.stabilizer_order);
            return false;
          }
        }
        return true;
      }));
  out.push_back(run_cases(
      cx, "orbits", "plane-orbit-census-q3", 1,
      [&](long long, std::string& note) {
        OrbitReport r = orbit_decompose(3);
        long long total = 0;
        for (const auto& o : r.orbits) total += o.size;
        if (r.orbits.size() != 5 || total != 1120 ||
            r.lagrangian_count != 1120) {
          note = "expected 5 orbits summing to 1120, got " +
                 std::to_string(r.orbits.size()) + " summing to " +
                 std::to_string(total);
          return false;
        }
        for (const auto& o : r.orbits)
          if (o.size * o.stabilizer_order != r.group_order ||
              o.stabilizer_order != o.parametric_order) {
            note = std::string("orbit ") + o.label +
                   ": stabilizer bookkeeping off";
            return false;
          }
        return true;
      }));
  out.push_back(run_cases(cx, "orbits", "parametric-stabilizers", 2,
                          [&](long long i, std::string& note) {
                            long q = i == 0 ? 2 : 3;
                            bool good = verify_parametric_stabilizers(q);
                            if (!good)
                              note = "q=" + std::to_string(q) +
                                     ": parametric family mismatch";
                            return good;
                          }));
  out.push_back(run_cases(
      cx, "orbits", "coordinate-plane-present", 2,
      [&](long long i, std::string& note) {
        long q = i == 0 ? 2 : 3;
        std::array<std::array<long, 6>, 3> w{};
        for (int r = 0; r < 3; ++r) w[static_cast<size_t>(r)][static_cast<size_t>(r + 3)] = 1;
        FqLagrangian W = rref_lagrangian(q, w);
        for (const FqLagrangian& L : enumerate_lagrangians(q))
          if (L.key() == W.key()) return true;
        note = "coordinate plane missing at q=" + std::to_string(q);
        return false;
      }));
  out.push_back(run_cases(
      cx, "orbits", "wedge-census", 2, [&](long long i, std::string& note) {
        long q = i == 0 ? 2 : 3;
        XPointReport x = xpoints_decompose(q);
        long long expect_points = q == 2 ? 135 : 2240;
        if (x.xpoint_count != expect_points || x.orbit_count != 5 ||
            !x.covers || !x.bijection || !x.n0_contained) {
          note = "q=" + std::to_string(q) + ": wedge-point census failed";
          return false;
        }
        return true;
      }));
  out.push_back(run_cases(cx, "orbits", "enumeration-count-q5", 1,
                          [&](long long, std::string& note) {
                            bool good = enumerate_lagrangians(5).size() == 19656;
                            if (!good) note = "q=5 count wrong";
                            return good;
                          }));
  out.push_back(run_cases(
      cx, "orbits", "relabel-stability", 1, [&](long long, std::string& note) {
        Json a = orbit_report_json(orbit_decompose(3));
        Json b = orbit_report_json(orbit_decompose(3));
        bool good = a.dump() == b.dump();
        if (!good) note = "re-running the decomposition changed the report";
        return good;
      }));
}

// ---------------------------------------------------------------------------
// Suite: determinism.

Json battery_subreport(const Ctx& cx, int threads) {
  Json points = Json::array();
  for (long p : cx.primes) {
    std::vector<BatteryPoint> battery = build_battery(p);
    std::vector<const BatteryPoint*> pts;
    for (const auto& bp : battery)
      if (*std::max_element(bp.ord.begin(), bp.ord.end()) <= 1)
        pts.push_back(&bp);
    std::vector<Json> rows(pts.size());
    parallel_for(static_cast<long long>(pts.size()), threads,
                 [&](long long i) {
                   const BatteryPoint& bp = *pts[static_cast<size_t>(i)];
                   ClosedResult c = local_integral_closed(bp.forms, bp.point, p);
                   OracleResult o = local_integral_oracle(
                       bp.forms, bp.point,
                       default_cell_function(bp.forms, bp.point, p), p);
                   Json row = Json::object();
                   row["p"] = p;
                   row["triple"] = bp.triple_name;
                   row["value"] = rat_to_string(c.value);
                   row["oracle"] = rat_to_string(o.rational);
                   row["terms"] = c.terms;
                   rows[static_cast<size_t>(i)] = std::move(row);
                 });
    for (auto& row : rows) points.push_back(std::move(row));
  }
  Json j = Json::object();
  j["points"] = std::move(points);
  return j;
}

void suite_determinism(const Ctx& cx, std::vector<CheckResult>& out) {
  {
    CheckResult r;
    r.suite = "determinism";
    r.name = "report-thread-independence";
    r.cases = 1;
    int alt = cx.threads == 1 ? 4 : 1;
    std::string a = battery_subreport(cx, cx.threads).dump();
    std::string b = battery_subreport(cx, alt).dump();
    r.pass = (a == b);
    if (!r.pass) r.detail = "thread count changed the serialized report";
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.suite = "determinism";
    r.name = "seeded-sampler-stability";
    r.cases = 1;
    auto draw_trace = [&] {
      std::string trace;
      for (int i = 0; i < 50; ++i) {
        CaseRng rng(cx.seed, 901, static_cast<std::uint64_t>(i));
        trace += std::to_string(rng.below(1000)) + ",";
        Mat2 g = sl2_compact_word(rng, 3, 4);
        trace += rat_to_string(g[0][0] + g[0][1] + g[1][0] + g[1][1]) + ";";
      }
      return trace;
    };
    std::string a = draw_trace(), b = draw_trace();
    r.pass = (a == b);
    if (!r.pass) r.detail = "per-case draws are not reproducible";
    out.push_back(std::move(r));
  }
  {
    CheckResult r;
    r.suite = "determinism";
    r.name = "orbit-report-stability";
    r.cases = 1;
    r.pass = orbit_report_json(orbit_decompose(2)).dump() ==
             orbit_report_json(orbit_decompose(2)).dump();
    if (!r.pass) r.detail = "orbit report not stable across runs";
    out.push_back(std::move(r));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch.

const std::array<const char*, 7> kVerifySuites = {
    "padic",      "cyclotomic", "weil-rep",    "symplectic",
    "local-integral", "orbits", "determinism"};

bool is_verify_suite(const std::string& name) {
  for (const char* s : kVerifySuites)
    if (name == s) return true;
  return false;
}

VerifyReport run_verify(const VerifyOptions& opt) {
  VerifyReport report;
  report.seed = opt.seed;
  if (opt.p == 0) {
    report.primes = {3, 5};
  } else {
    require(opt.p == 3 || opt.p == 5, ErrorCode::UnsupportedPrime,
            "verification batteries are defined for p in {3, 5}");
    report.primes = {opt.p};
  }
  std::vector<std::string> suites;
  if (opt.suites.empty()) {
    for (const char* s : kVerifySuites) suites.push_back(s);
  } else {
    for (const std::string& s : opt.suites) {
      require(is_verify_suite(s), ErrorCode::InvalidArgument,
              "unknown verification suite '" + s + "'");
      suites.push_back(s);
    }
  }
  report.suites = suites;
  Ctx cx{report.primes, opt.seed, std::max(1, opt.threads)};
  for (const std::string& s : suites) {
    if (s == "padic") suite_padic(cx, report.checks);
    else if (s == "cyclotomic") suite_cyclotomic(cx, report.checks);
    else if (s == "weil-rep") suite_weil_rep(cx, report.checks);
    else if (s == "symplectic") suite_symplectic(cx, report.checks);
    else if (s == "local-integral") suite_local_integral(cx, report.checks);
    else if (s == "orbits") suite_orbits(cx, report.checks);
    else if (s == "determinism") suite_determinism(cx, report.checks);
  }
  report.all_pass = true;
  for (const CheckResult& c : report.checks) report.all_pass &= c.pass;
  return report;
}

Json verify_report_json(const VerifyReport& r) {
  Json j = Json::object();
  Json suites = Json::array();
  for (const auto& s : r.suites) suites.push_back(s);
  j["suites"] = std::move(suites);
  Json primes = Json::array();
  for (long p : r.primes) primes.push_back(p);
  j["primes"] = std::move(primes);
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const CheckResult& c : r.checks) {
    Json e = Json::object();
    e["suite"] = c.suite;
    e["name"] = c.name;
    e["cases"] = c.cases;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j;
}

}  // namespace triadic
