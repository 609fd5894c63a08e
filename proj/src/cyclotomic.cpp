// SPDX-License-Identifier: MIT

#include "triadic/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace triadic {

namespace {

// 4 * p^K as int64 (the context constructor guarantees it fits).
long long n_of(long p, int K) {
  long long n = 4;
  for (int i = 0; i < K; ++i) n *= p;
  return n;
}

long long phi_of(long p, int K) {
  long long n = 2 * (p - 1);
  for (int i = 0; i < K - 1; ++i) n *= p;
  return n;
}

long long mod_n(long long e, long long N) {
  long long r = e % N;
  return r < 0 ? r + N : r;
}

}  // namespace

CycValue CycValue::monomial(const PAdicContext& ctx, long long exp,
                            const Rat& coeff) {
  CycValue v;
  v.p_ = ctx.p;
  v.K_ = ctx.K;
  if (coeff != 0) {
    long long N = n_of(ctx.p, ctx.K);
    long long e = mod_n(exp, N);
    v.terms_.emplace_back(e, coeff);
    v.canonical_ = (e < phi_of(ctx.p, ctx.K));
  }
  return v;
}

void CycValue::check_compatible(const CycValue& o) const {
  if (p_ != 0 && o.p_ != 0 && (p_ != o.p_ || K_ != o.K_))
    fail(ErrorCode::DepthMismatch,
         "mixing cyclotomic values from different contexts");
}

void CycValue::promote(long p, int K) {
  if (p_ != 0 || p == 0) return;
  p_ = p;
  K_ = K;
  // Rational terms sit at exponent 0, already canonical in any field.
}

long long CycValue::n_value() const {
  require(p_ != 0, ErrorCode::Internal, "n_value on pure rational");
  return n_of(p_, K_);
}

long long CycValue::phi_value() const {
  require(p_ != 0, ErrorCode::Internal, "phi_value on pure rational");
  return phi_of(p_, K_);
}

long long CycValue::root_order() const { return p_ == 0 ? 0 : n_value(); }

void CycValue::merge_terms(std::vector<std::pair<long long, Rat>>& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  size_t w = 0;
  for (size_t r = 0; r < t.size(); ++r) {
    if (w > 0 && t[w - 1].first == t[r].first) {
      t[w - 1].second += t[r].second;
    } else {
      if (w != r) t[w] = std::move(t[r]);
      ++w;
    }
    if (w > 0 && t[w - 1].second == 0) --w;  // drop cancelled coefficient
  }
  t.resize(w);
}

void CycValue::reduce_canonical() const {
  if (canonical_) return;
  long long N = n_value(), half = N / 2, phi = phi_value();
  long long step = half / p_;  // 2 p^{K-1}
  std::vector<std::pair<long long, Rat>> out;
  out.reserve(terms_.size());
  for (const auto& [e0, c0] : terms_) {
    long long e = e0;
    Rat c = c0;
    if (e >= half) {  // zeta^{N/2} = -1
      e -= half;
      c = -c;
    }
    if (e >= phi) {
      // zeta^{phi + r} = sum_{i=0}^{p-2} (-1)^{i+1} zeta^{r + step i}
      long long r = e - phi;
      for (long i = 0; i <= p_ - 2; ++i)
        out.emplace_back(r + step * i, (i % 2 == 0) ? Rat(-c) : c);
    } else {
      out.emplace_back(e, c);
    }
  }
  merge_terms(out);
  terms_ = std::move(out);
  canonical_ = true;
}

void CycValue::canonicalize() const { reduce_canonical(); }

bool CycValue::is_zero() const {
  reduce_canonical();
  return terms_.empty();
}

bool CycValue::is_rational() const {
  reduce_canonical();
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rat CycValue::rational_value() const {
  require(is_rational(), ErrorCode::InvalidArgument,
          "cyclotomic value is not rational");
  return terms_.empty() ? Rat(0) : terms_[0].second;
}

CycValue CycValue::operator+(const CycValue& o) const {
  CycValue a = *this;
  a += o;
  return a;
}

CycValue& CycValue::operator+=(const CycValue& o) {
  check_compatible(o);
  CycValue b = o;
  if (p_ == 0 && b.p_ != 0) promote(b.p_, b.K_);
  if (b.p_ == 0 && p_ != 0) b.promote(p_, K_);
  std::vector<std::pair<long long, Rat>> out;
  out.reserve(terms_.size() + b.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < terms_.size() && terms_[i].first < b.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || b.terms_[j].first < terms_[i].first) {
      out.push_back(b.terms_[j++]);
    } else {
      Rat c = terms_[i].second + b.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  canonical_ = canonical_ && b.canonical_;
  return *this;
}

CycValue CycValue::operator-() const {
  CycValue a = *this;
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

CycValue CycValue::operator-(const CycValue& o) const { return *this + (-o); }

CycValue CycValue::operator*(const CycValue& o) const {
  check_compatible(o);
  CycValue a = *this, b = o;
  if (a.p_ == 0 && b.p_ != 0) a.promote(b.p_, b.K_);
  if (b.p_ == 0 && a.p_ != 0) b.promote(a.p_, a.K_);
  CycValue r;
  r.p_ = a.p_;
  r.K_ = a.K_;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  std::vector<std::pair<long long, Rat>> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  if (r.p_ == 0) {
    // Pure rationals: single term at exponent 0.
    out.emplace_back(0, a.terms_[0].second * b.terms_[0].second);
  } else {
    long long N = n_of(r.p_, r.K_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        long long e = ea + eb;
        if (e >= N) e -= N;  // both inputs < N, so one subtraction suffices
        out.emplace_back(e, ca * cb);
      }
  }
  merge_terms(out);
  r.terms_ = std::move(out);
  r.canonical_ = (r.p_ == 0);
  // Keep intermediate blow-up in check for long product chains.
  if (r.terms_.size() > 4096) r.reduce_canonical();
  return r;
}

CycValue& CycValue::operator*=(const CycValue& o) {
  *this = *this * o;
  return *this;
}

CycValue CycValue::operator*(const Rat& r) const {
  CycValue a = *this;
  if (r == 0) {
    a.terms_.clear();
    a.canonical_ = true;
    return a;
  }
  for (auto& [e, c] : a.terms_) c *= r;
  return a;
}

bool CycValue::operator==(const CycValue& o) const {
  check_compatible(o);
  reduce_canonical();
  o.reduce_canonical();
  if (p_ == o.p_) return terms_ == o.terms_;
  // One side is pure rational: equal iff the other reduces to the same rational.
  const CycValue& rat = (p_ == 0) ? *this : o;
  const CycValue& fld = (p_ == 0) ? o : *this;
  if (!fld.is_rational()) return false;
  return fld.rational_value() ==
         (rat.terms_.empty() ? Rat(0) : rat.terms_[0].second);
}

CycValue CycValue::conj() const { return p_ == 0 ? *this : galois(-1); }

CycValue CycValue::galois(long long s) const {
  if (p_ == 0) return *this;
  long long N = n_value();
  long long sm = mod_n(s, N);
  require(std::gcd(sm, N) == 1, ErrorCode::InvalidArgument,
          "galois exponent must be coprime to the root order");
  CycValue r;
  r.p_ = p_;
  r.K_ = K_;
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    // e, sm < N < 2^62: multiply in 128-bit to stay exact.
    long long em = static_cast<long long>(
        (static_cast<unsigned __int128>(e) * static_cast<unsigned __int128>(sm)) %
        static_cast<unsigned __int128>(N));
    r.terms_.emplace_back(em, c);
  }
  merge_terms(r.terms_);
  r.canonical_ = false;
  return r;
}

std::vector<Rat> CycValue::coefficients() const {
  reduce_canonical();
  if (p_ == 0) {
    return {terms_.empty() ? Rat(0) : terms_[0].second};
  }
  std::vector<Rat> out(static_cast<size_t>(phi_value()), Rat(0));
  for (const auto& [e, c] : terms_) out[static_cast<size_t>(e)] = c;
  return out;
}

CycValue CycValue::from_coefficients(const PAdicContext& ctx,
                                     const std::vector<Rat>& coeffs) {
  long long phi = phi_of(ctx.p, ctx.K);
  require(static_cast<long long>(coeffs.size()) == phi ||
              coeffs.size() == 1,
          ErrorCode::InvalidArgument,
          "coefficient vector length must be phi(N) (or 1 for a rational)");
  CycValue v;
  if (coeffs.size() == 1) {
    if (coeffs[0] != 0) v.terms_.emplace_back(0, coeffs[0]);
    return v;
  }
  v.p_ = ctx.p;
  v.K_ = ctx.K;
  for (long long e = 0; e < phi; ++e)
    if (coeffs[static_cast<size_t>(e)] != 0)
      v.terms_.emplace_back(e, coeffs[static_cast<size_t>(e)]);
  v.canonical_ = true;
  return v;
}

std::string CycValue::to_string() const {
  reduce_canonical();
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << rat_to_string(a);
    } else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << "z^" << e;
    }
    first = false;
  }
  return os.str();
}

CycAccumulator::CycAccumulator(const PAdicContext& ctx)
    : p_(ctx.p), K_(ctx.K), N_(n_of(ctx.p, ctx.K)) {}

void CycAccumulator::add(long long exp) { ++counts_[mod_n(exp, N_)]; }

void CycAccumulator::add(long long exp, const Rat& coeff) {
  if (coeff == 0) return;
  rat_coeffs_[mod_n(exp, N_)] += coeff;
}

CycValue CycAccumulator::value() const {
  CycValue v;
  v.p_ = p_;
  v.K_ = K_;
  std::vector<std::pair<long long, Rat>> t;
  t.reserve(counts_.size() + rat_coeffs_.size());
  for (const auto& [e, n] : counts_)
    if (n != 0) t.emplace_back(e, Rat(static_cast<long>(n)));
  for (const auto& [e, c] : rat_coeffs_)
    if (c != 0) t.emplace_back(e, c);
  CycValue::merge_terms(t);
  v.terms_ = std::move(t);
  v.canonical_ = false;
  return v;
}

long long psi_exponent(const PAdicContext& ctx, const Rat& x) {
  if (x == 0) return 0;
  long v = val_p(x, ctx.p);
  if (v >= 0) return 0;  // p-integral arguments: psi = 1
  require(v >= -ctx.K, ErrorCode::PrecisionExceeded,
          "character argument deeper than context depth K");
  long k = -v;  // denominator is p^k times a p-unit
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                static_cast<unsigned long>(k));
  // x = num / (p^k m), m a p-unit: fractional part a/p^k, a = num m^{-1} mod p^k
  // (the fraction is reduced, so num is a p-unit here).
  Int num = x.get_num();
  Int den = x.get_den();
  long dv = val_p(den, ctx.p);
  Int m = den;
  if (dv > 0) {
    Int pdv;
    mpz_ui_pow_ui(pdv.get_mpz_t(), static_cast<unsigned long>(ctx.p),
                  static_cast<unsigned long>(dv));
    m /= pdv;
  }
  Int a = (num % pk) * inv_mod(m % pk, pk) % pk;
  if (a < 0) a += pk;
  // zeta_{p^k} = zeta_N^{4 p^{K-k}}; a < p^k <= p^K so the product stays < N.
  long long scale = 4;
  for (long i = 0; i < ctx.K - k; ++i) scale *= ctx.p;
  return scale * a.get_si();
}

CycValue psi(const PAdicContext& ctx, const Rat& x) {
  return CycValue::monomial(ctx, psi_exponent(ctx, x), Rat(1));
}

CycValue sqrt_p(const PAdicContext& ctx) {
  // Quadratic Gauss sum g = sum leg(x) zeta_p^x with zeta_p = zeta_N^{4 p^{K-1}}.
  long long zp = 4;
  for (int i = 0; i < ctx.K - 1; ++i) zp *= ctx.p;
  CycValue g = CycValue::zero();
  for (long x = 1; x < ctx.p; ++x) {
    int l = legendre(Int(x), ctx.p);
    g += CycValue::monomial(ctx, zp * x, Rat(l));
  }
  if (ctx.p % 4 == 1) return g;
  // p = 3 mod 4: g = i sqrt(p), so sqrt(p) = -i g = zeta_4^3 g, zeta_4 = zeta_N^{p^K}.
  long long z4 = 1;
  for (int i = 0; i < ctx.K; ++i) z4 *= ctx.p;
  return CycValue::monomial(ctx, 3 * z4, Rat(1)) * g;
}

}  // namespace triadic
