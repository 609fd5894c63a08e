// SPDX-License-Identifier: MIT

#include "triadic/rational.hpp"

#include <stdexcept>

namespace triadic {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::Ok: return "Ok";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::PrecisionExceeded: return "PrecisionExceeded";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::DepthMismatch: return "DepthMismatch";
    case ErrorCode::NotSpecialLinear: return "NotSpecialLinear";
    case ErrorCode::NotSymplectic: return "NotSymplectic";
    case ErrorCode::NotSimilitude: return "NotSimilitude";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::UnsupportedForm: return "UnsupportedForm";
    case ErrorCode::ResourceBound: return "ResourceBound";
    case ErrorCode::UnmatchedOrbit: return "UnmatchedOrbit";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

long val_p(const Int& n, long p) {
  if (n == 0) return VAL_INF;
  Int scratch;
  // mpz_remove strips every factor of p and reports how many it removed.
  return static_cast<long>(mpz_remove(scratch.get_mpz_t(), n.get_mpz_t(),
                                      Int(p).get_mpz_t()));
}

long val_p(const Rat& x, long p) {
  if (x == 0) return VAL_INF;
  return val_p(x.get_num(), p) - val_p(x.get_den(), p);
}

Rat unit_part(const Rat& x, long p) {
  require(x != 0, ErrorCode::InvalidArgument, "unit_part of zero");
  long v = val_p(x, p);
  Rat pw;
  Int pp;
  mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(v >= 0 ? v : -v));
  if (v >= 0)
    pw = Rat(1, pp);
  else
    pw = Rat(pp, 1);
  Rat u = x * pw;
  u.canonicalize();
  return u;
}

Int inv_mod(const Int& a, const Int& m) {
  require(m > 0, ErrorCode::InvalidArgument, "inv_mod modulus must be positive");
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  require(ok != 0, ErrorCode::SingularMatrix, "element not invertible mod m");
  return r;
}

int legendre(const Int& u, long p) {
  require(p > 2 && is_prime(p), ErrorCode::UnsupportedPrime,
          "legendre needs an odd prime");
  return mpz_legendre(u.get_mpz_t(), Int(p).get_mpz_t());
}

bool is_prime(long n) {
  if (n < 2) return false;
  // 40 Miller-Rabin rounds: deterministic in practice for word-sized n.
  return mpz_probab_prime_p(Int(n).get_mpz_t(), 40) != 0;
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) fail(ErrorCode::Parse, "empty rational string");
  // Validate shape first: optional '-', digits, optional '/digits'.
  auto check_digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (!check_digits(s)) fail(ErrorCode::Parse, "bad rational: " + s);
      return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!check_digits(num) || !check_digits(den) || den[0] == '-')
      fail(ErrorCode::Parse, "bad rational: " + s);
    Int d(den);
    require(d != 0, ErrorCode::Parse, "zero denominator: " + s);
    Rat r(Int(num), d);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::Parse, "bad rational: " + s);
  }
}

Int residue_mod(const Rat& x, const Int& pk, long p) {
  require(val_p(x, p) >= 0, ErrorCode::InvalidArgument,
          "residue_mod needs a p-integral rational");
  Int num = x.get_num() % pk;
  if (num < 0) num += pk;
  Int den = x.get_den() % pk;
  Int r = (num * inv_mod(den, pk)) % pk;
  if (r < 0) r += pk;
  return r;
}

}  // namespace triadic
