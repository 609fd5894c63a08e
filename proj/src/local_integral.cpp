// SPDX-License-Identifier: MIT

#include "triadic/local_integral.hpp"

#include <algorithm>

#include "triadic/schwartz.hpp"
#include "triadic/symplectic.hpp"

namespace triadic {

namespace {

void validate_prime(long p) {
  require(p >= 3 && p % 2 == 1 && is_prime(p), ErrorCode::UnsupportedPrime,
          "local integrals are implemented for odd primes only");
}

void validate_forms(const QuadTriple& T, long p) {
  for (const QuadraticSpace& V : T.spaces)
    require(V.unimodular_at(p), ErrorCode::UnsupportedForm,
            "local integrals need p-unimodular Gram matrices");
}

// Triangle-floor of a torus exponent box: the smallest value the cell can
// saturate at, min(e_i, e_j + e_k - e_i).  Cells on the box never exceed it.
long cell_ceiling(const std::array<long, 3>& e) {
  long m = std::min({e[0], e[1], e[2]});
  m = std::min(m, e[1] + e[2] - e[0]);
  m = std::min(m, e[0] + e[2] - e[1]);
  m = std::min(m, e[0] + e[1] - e[2]);
  return m;
}

}  // namespace

void validate_point_shape(const QuadTriple& T, const PointV& v) {
  for (int i = 0; i < 3; ++i)
    require(static_cast<int>(v.slots[i].size()) == T.spaces[i].dim(),
            ErrorCode::InvalidArgument,
            "point slot length does not match the Gram dimension");
}

PointProfile profile_point(const QuadTriple& T, const PointV& v, long p) {
  validate_point_shape(T, v);
  PointProfile prof;
  prof.zero_count = 0;
  prof.zero_slot = -1;
  prof.integral = true;
  prof.total_q = 0;
  for (int i = 0; i < 3; ++i) {
    prof.ord[i] = QuadraticSpace::vec_val(v.slots[i], p);
    if (prof.ord[i] == VAL_INF) {
      ++prof.zero_count;
      prof.zero_slot = i;
    } else if (prof.ord[i] < 0) {
      prof.integral = false;
    }
    prof.q_values[i] = T.spaces[i].q_value(v.slots[i]);
    prof.total_q += prof.q_values[i];
  }
  prof.common_q = prof.total_q / 3;
  prof.on_locus = prof.q_values[0] == prof.q_values[1] &&
                  prof.q_values[1] == prof.q_values[2];
  prof.in_v_prime = prof.zero_count <= 1;
  return prof;
}

void CellFunction::set(long cell, const Rat& coeff) {
  require(cell >= 0, ErrorCode::InvalidArgument,
          "cell functions are supported on nonnegative cells");
  if (coeff == 0)
    coeffs_.erase(cell);
  else
    coeffs_[cell] = coeff;
}

Rat CellFunction::eval(long cell) const {
  auto it = coeffs_.find(cell);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

long CellFunction::max_cell() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

CellFunction CellFunction::basic(long q, long cutoff) {
  CellFunction f;
  for (long c = 0; c <= cutoff; ++c) f.set(c, basic_b_cell(c, q));
  return f;
}

CellFunction CellFunction::delta(long cell) {
  CellFunction f;
  f.set(cell, Rat(1));
  return f;
}

Rat modulus_weight(const std::array<Rat, 3>& a, long p) {
  Rat w(1);
  for (const Rat& ai : a) {
    require(ai != 0, ErrorCode::InvalidArgument,
            "modulus weight needs nonzero torus coordinates");
    w *= pow_p(p, -2 * val_p(ai, p));
  }
  return w;
}

long required_cell_cutoff(const QuadTriple& T, const PointV& v, long p) {
  PointProfile prof = profile_point(T, v, p);
  require(prof.in_v_prime, ErrorCode::NotInDomain,
          "point has more than one zero slot");
  long cutoff = VAL_INF;
  for (int i = 0; i < 3; ++i)
    if (prof.ord[i] != VAL_INF) cutoff = std::min(cutoff, prof.ord[i]);
  return cutoff;
}

CellFunction default_cell_function(const QuadTriple& T, const PointV& v,
                                   long p) {
  return CellFunction::basic(p, required_cell_cutoff(T, v, p));
}

// ---------------------------------------------------------------------------
// Closed form.
// ---------------------------------------------------------------------------

ClosedResult local_integral_closed(const QuadTriple& T, const PointV& v,
                                   long p) {
  validate_prime(p);
  validate_forms(T, p);
  PointProfile prof = profile_point(T, v, p);
  require(prof.in_v_prime, ErrorCode::NotInDomain,
          "point has more than one zero slot");
  require(prof.on_locus, ErrorCode::NotInDomain,
          "point is outside the equal-value locus");
  if (!prof.integral) return {Rat(0), 0};

  const long nu = val_p(Rat(3), p);
  const long vQ = prof.total_q == 0 ? VAL_INF : val_p(prof.total_q, p);
  std::array<int, 3> chi;
  std::array<long, 3> half_less_one;
  for (int i = 0; i < 3; ++i) {
    chi[i] = T.spaces[i].chi(Rat(p), p);
    half_less_one[i] = T.spaces[i].dim() / 2 - 1;
  }

  // At most one slot is zero here, so the min runs over finite values.
  long min_ord = VAL_INF;
  for (long o : prof.ord) min_ord = std::min(min_ord, o);

  Rat total(0);
  long long terms = 0;
  for (long j = 0; 2 * j <= min_ord; ++j) {
    std::array<long, 3> cap;
    for (int i = 0; i < 3; ++i)
      cap[i] = prof.ord[i] == VAL_INF ? -1 : prof.ord[i] - 2 * j;
    if (prof.zero_slot >= 0) {
      long others = 0;
      for (int i = 0; i < 3; ++i)
        if (i != prof.zero_slot) others += cap[i];
      cap[prof.zero_slot] = others;  // triangle cap through the finite slots
    }
    std::array<long, 3> e;
    for (e[0] = 0; e[0] <= cap[0]; ++e[0])
      for (e[1] = 0; e[1] <= cap[1]; ++e[1])
        for (e[2] = 0; e[2] <= cap[2]; ++e[2]) {
          if (cell_ceiling(e) < 0) continue;  // triangle inequalities
          long se = e[0] + e[1] + e[2];
          if (vQ != VAL_INF && vQ < 4 * j + se + nu) continue;
          Rat term(1);
          for (int i = 0; i < 3; ++i) {
            long k = e[i] + 2 * j;
            term *= pow_p(p, k * half_less_one[i]);
            if (chi[i] == -1 && k % 2 == 1) term = -term;
          }
          total += term;
          ++terms;
        }
  }
  return {total, terms};
}

// ---------------------------------------------------------------------------
// Oracle.
// ---------------------------------------------------------------------------

namespace {

// Cell profile of one S-shell of a torus box, cross-checked against the
// Plucker vector of a real group element at two shell representatives.
void assert_shell_cell(const std::array<long, 3>& e, long sigma, long expected,
                       long p) {
  for (long u : {1L, 2L}) {
    Rat s_coord = Rat(u) * pow_p(p, sigma);
    Rat t = s_coord / 3;
    std::array<Mat2, 3> slots;
    for (int i = 0; i < 3; ++i)
      slots[i] = mat2_mul(sl2_n(t), sl2_t(pow_p(p, -e[i])));
    Sp6Element g = gamma_rep(OrbitLabel::L000) * embed_triple(slots);
    require(iwasawa_cell(g, p) == expected, ErrorCode::Internal,
            "cell profile mismatch on a torus shell");
  }
}

constexpr long kMaxUnitReps = 2'000'000;

}  // namespace

OracleResult local_integral_oracle(const QuadTriple& T, const PointV& v,
                                   const CellFunction& f1, long p) {
  validate_prime(p);
  validate_forms(T, p);
  PointProfile prof = profile_point(T, v, p);
  require(prof.in_v_prime, ErrorCode::NotInDomain,
          "point has more than one zero slot");
  require(prof.on_locus, ErrorCode::NotInDomain,
          "point is outside the equal-value locus");

  OracleResult out;
  out.psi_terms = 0;
  out.e_boxes = 0;
  out.s_depth = 0;

  // Torus exponent ranges.  A negative cap empties the box list, which is
  // exactly the off-lattice case: the slot factor 1(ord_i >= e_i) never
  // fires, so the integral is 0 with nothing summed.
  std::array<long, 3> cap;
  for (int i = 0; i < 3; ++i)
    cap[i] = prof.ord[i] == VAL_INF ? -1 : prof.ord[i];
  bool empty = false;
  for (int i = 0; i < 3; ++i)
    if (i != prof.zero_slot && cap[i] < 0) empty = true;
  if (prof.zero_slot >= 0 && !empty) {
    long others = 0;
    for (int i = 0; i < 3; ++i)
      if (i != prof.zero_slot) others += cap[i];
    cap[prof.zero_slot] = others;  // beyond this the cell is negative
  }
  if (empty) {
    out.value = CycValue::zero();
    out.rational = 0;
    out.context_depth = 0;
    return out;
  }

  const long sum_e_max = cap[0] + cap[1] + cap[2];
  const long vc =
      prof.common_q == 0 ? VAL_INF : val_p(prof.common_q, p);
  // Character depth: the deepest psi argument has valuation
  // sigma + vc >= -sum_e_max + min(vc, 0) - 0; pad by one.
  int K = static_cast<int>(
      std::max<long>(2, sum_e_max + (vc != VAL_INF && vc < 0 ? -vc : 0) + 1));
  PAdicContext octx(p, K);
  out.context_depth = K;

  // Slot torus factors chi_i(p)^e p^{e d_i/2} 1(ord_i >= e), computed by
  // genuinely applying weil_torus to the lattice indicator.  Cached per
  // (slot, exponent).
  std::array<std::map<long, CycValue>, 3> slot_cache;
  std::array<SchwartzFn, 3> indicators = {
      SchwartzFn::lattice_indicator(octx, T.spaces[0]),
      SchwartzFn::lattice_indicator(octx, T.spaces[1]),
      SchwartzFn::lattice_indicator(octx, T.spaces[2])};
  auto slot_factor = [&](int i, long e) -> const CycValue& {
    auto it = slot_cache[i].find(e);
    if (it == slot_cache[i].end()) {
      SchwartzFn twisted = weil_torus(pow_p(p, -e), indicators[i]);
      it = slot_cache[i].emplace(e, twisted.eval(v.slots[i])).first;
    }
    return it->second;
  };

  CycValue total;
  std::array<long, 3> e;
  for (e[0] = 0; e[0] <= cap[0]; ++e[0])
    for (e[1] = 0; e[1] <= cap[1]; ++e[1])
      for (e[2] = 0; e[2] <= cap[2]; ++e[2]) {
        const long ca = cell_ceiling(e);
        // Cells on this box never exceed ca (the norm dominates the six
        // torus monomials); with f1 supported on cells >= 0 a negative ca
        // kills the whole box.
        if (ca < 0) continue;
        ++out.e_boxes;

        const long se = e[0] + e[1] + e[2];
        const long sigma_min = -se;             // below this the cell is < 0
        long t0 = ca - se;                      // cell saturation point
        if (vc != VAL_INF) t0 = std::max(t0, -vc);  // psi conductor
        out.s_depth = std::min(out.s_depth, sigma_min);

        CycValue s_sum;
        for (long sigma = sigma_min; sigma < t0; ++sigma) {
          const long cell = std::min(sigma + se, ca);
          assert_shell_cell(e, sigma, cell, p);
          Rat fval = f1.eval(cell);
          if (fval == 0) continue;
          // Coset modulus: psi(S c) on the shell depends on the unit part
          // of S modulo p^M.
          const long M =
              vc == VAL_INF ? 1 : std::max<long>(1, -sigma - vc);
          require(M < 40, ErrorCode::ResourceBound,
                  "shell conductor too deep for unit enumeration");
          long pM = 1;
          for (long i = 0; i < M; ++i) {
            pM *= p;
            require(pM <= kMaxUnitReps, ErrorCode::ResourceBound,
                    "unit enumeration exceeds the resource budget");
          }
          CycAccumulator acc(octx);
          const Rat shell_scale = pow_p(p, sigma);
          for (long u = 1; u < pM; ++u) {
            if (u % p == 0) continue;
            acc.add(psi_exponent(octx, Rat(u) * shell_scale * prof.common_q));
            ++out.psi_terms;
          }
          // Each unit coset has measure p^{-sigma - M}.
          s_sum += acc.value() * (fval * pow_p(p, -sigma - M));
        }
        // Tail: for sigma >= t0 the cell sits at ca and psi is trivial on
        // the whole ball |S| <= p^{-t0}, whose volume is p^{-t0}.
        assert_shell_cell(e, t0, ca, p);
        s_sum += CycValue(f1.eval(ca) * pow_p(p, -t0));

        CycValue w = slot_factor(0, e[0]) * slot_factor(1, e[1]) *
                     slot_factor(2, e[2]);
        std::array<Rat, 3> a = {pow_p(p, e[0]), pow_p(p, e[1]),
                                pow_p(p, e[2])};
        total += w * s_sum * CycValue(modulus_weight(a, p));
      }

  require(total.is_rational(), ErrorCode::Internal,
          "oracle value failed to collapse to a rational");
  out.value = total;
  out.rational = total.is_zero() ? Rat(0) : total.rational_value();
  return out;
}

// ---------------------------------------------------------------------------
// Absolute-value integral and bound.
// ---------------------------------------------------------------------------

AbsBoundReport abs_integral_bound_check(const QuadTriple& T, const PointV& v,
                                        long p) {
  validate_prime(p);
  validate_forms(T, p);
  PointProfile prof = profile_point(T, v, p);
  require(prof.in_v_prime, ErrorCode::NotInDomain,
          "point has more than one zero slot");
  require(prof.on_locus, ErrorCode::NotInDomain,
          "point is outside the equal-value locus");

  AbsBoundReport rep;
  rep.zero_branch = prof.zero_count == 1;

  if (!prof.integral) {
    rep.integral = 0;
    rep.bound = 0;
    rep.holds = true;
    return rep;
  }

  // Dominating bound.
  Rat bound(1);
  if (!rep.zero_branch) {
    for (int i = 0; i < 3; ++i) {
      Rat count(prof.ord[i] + 1);
      bound *= count * count * count;
      bound *= pow_p(p, prof.ord[i] * (T.spaces[i].dim() / 2 - 1));
    }
  } else {
    const int z = prof.zero_slot;
    for (int i = 0; i < 3; ++i) {
      if (i == z) continue;
      Rat count(prof.ord[i] + 1);
      bound *= count * count * count * count;
      bound *= pow_p(p, prof.ord[i] * (T.spaces[i].dim() / 2 +
                                       T.spaces[z].dim() / 2 - 2));
    }
  }
  rep.bound = bound;

  // Exact absolute-value integral: same enumeration as the oracle with
  // |psi| = 1 and |chi| = 1, f1 = basic truncated at the reachable cutoff
  // (which agrees with untruncated basic on every cell that occurs).
  CellFunction f1 = default_cell_function(T, v, p);
  std::array<long, 3> cap;
  for (int i = 0; i < 3; ++i)
    cap[i] = prof.ord[i] == VAL_INF ? -1 : prof.ord[i];
  if (prof.zero_slot >= 0) {
    long others = 0;
    for (int i = 0; i < 3; ++i)
      if (i != prof.zero_slot) others += cap[i];
    cap[prof.zero_slot] = others;
  }

  Rat integral(0);
  std::array<long, 3> e;
  const Rat shell_unit_fraction = Rat(p - 1, p);  // vol of a shell / its ball
  for (e[0] = 0; e[0] <= cap[0]; ++e[0])
    for (e[1] = 0; e[1] <= cap[1]; ++e[1])
      for (e[2] = 0; e[2] <= cap[2]; ++e[2]) {
        const long ca = cell_ceiling(e);
        if (ca < 0) continue;
        const long se = e[0] + e[1] + e[2];
        const long sigma_min = -se;
        const long t0 = ca - se;
        Rat s_sum(0);
        for (long sigma = sigma_min; sigma < t0; ++sigma) {
          const long cell = std::min(sigma + se, ca);
          s_sum += f1.eval(cell) * pow_p(p, -sigma) * shell_unit_fraction;
        }
        s_sum += f1.eval(ca) * pow_p(p, -t0);
        Rat w(1);
        for (int i = 0; i < 3; ++i)
          w *= pow_p(p, e[i] * T.spaces[i].dim() / 2);
        std::array<Rat, 3> a = {pow_p(p, e[0]), pow_p(p, e[1]),
                                pow_p(p, e[2])};
        integral += w * modulus_weight(a, p) * s_sum;
      }
  rep.integral = integral;
  rep.holds = rep.integral <= rep.bound;
  return rep;
}

// ---------------------------------------------------------------------------
// Sub-oracles.
// ---------------------------------------------------------------------------

bool unit_average_subcheck(const QuadTriple& T, const PointV& v,
                           const std::array<long, 3>& e, long sigma, long p) {
  validate_prime(p);
  validate_forms(T, p);
  validate_point_shape(T, v);

  // (a) + (b): per-slot unit invariance over all units mod p^2.
  PAdicContext octx(p, 3);
  const long p2 = p * p;
  for (int i = 0; i < 3; ++i) {
    const QuadraticSpace& Vi = T.spaces[i];
    SchwartzFn ind = SchwartzFn::lattice_indicator(octx, Vi);
    const int chi_p_e =
        e[i] % 2 == 0 ? 1
                      : Vi.chi(Rat(p), p);  // chi_i(p)^{e_i}, shortcut side
    Rat pe = pow_p(p, e[i]);
    CycValue ref = ind.eval([&] {
      std::vector<Rat> scaled = v.slots[i];
      for (Rat& x : scaled) x *= pe;
      return scaled;
    }());
    for (long u = 1; u < p2; ++u) {
      if (u % p == 0) continue;
      if (Vi.chi(Rat(u) * pe, p) != chi_p_e) return false;
      std::vector<Rat> scaled = v.slots[i];
      for (Rat& x : scaled) x *= Rat(u) * pe;
      if (ind.eval(scaled) != ref) return false;
    }
  }

  // (c): the Iwasawa cell cannot see the torus units either.  Twist the
  // representative by a few genuine unit triples and compare cells.
  Rat s_coord = pow_p(p, sigma);
  Rat t = s_coord / 3;
  auto cell_at = [&](const std::array<long, 3>& units) {
    std::array<Mat2, 3> slots;
    for (int i = 0; i < 3; ++i)
      slots[i] = mat2_mul(
          sl2_n(t), sl2_t(Rat(1) / (pow_p(p, e[i]) * Rat(units[i]))));
    return iwasawa_cell(gamma_rep(OrbitLabel::L000) * embed_triple(slots), p);
  };
  const long ref_cell = cell_at({1, 1, 1});
  for (long u1 : {1L, 2L})
    for (long u2 : {1L, 2L})
      for (long u3 : {1L, 2L})
        if (cell_at({u1, u2, u3}) != ref_cell) return false;

  return true;
}

bool weil_n_phase_subcheck(const QuadTriple& T, const PointV& v, const Rat& t,
                           const PAdicContext& ctx) {
  validate_forms(T, ctx.p);
  validate_point_shape(T, v);
  for (int i = 0; i < 3; ++i) {
    SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, T.spaces[i]);
    CycValue lhs = weil_n(t, ind).eval(v.slots[i]);
    CycValue rhs =
        psi(ctx, t * T.spaces[i].q_value(v.slots[i])) * ind.eval(v.slots[i]);
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace triadic
