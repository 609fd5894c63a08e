// SPDX-License-Identifier: MIT
//
// Error model for the triadic library.
//
// Every failure the library can signal is a triadic::Error carrying a stable
// ErrorCode.  The codes mirror the TQ_* constants of the C API one-to-one so
// that errors survive the language boundary losslessly.

#pragma once

#include <stdexcept>
#include <string>

namespace triadic {

enum class ErrorCode : int {
  Ok = 0,
  InvalidArgument = 1,   // malformed input (bad sizes, bad ranges, bad JSON values)
  UnsupportedPrime = 2,  // p = 2 or p not prime
  PrecisionExceeded = 3, // computation needs more cyclotomic depth / window than ctx allows
  NotInDomain = 4,       // additive character evaluated outside its domain
  DepthMismatch = 5,     // mixing cyclotomic values from incompatible contexts
  NotSpecialLinear = 6,  // 2x2 matrix with det != 1 where SL2 was required
  NotSymplectic = 7,     // 6x6 matrix failing the symplectic identity
  NotSimilitude = 8,     // 2x2 matrix that does not scale the quadratic form
  SingularMatrix = 9,    // non-invertible matrix where an inverse was required
  UnsupportedForm = 10,  // operation requires a self-dual lattice / unimodular Gram matrix
  ResourceBound = 11,    // explicit cell/size budget exceeded
  UnmatchedOrbit = 12,   // finite-field orbit not reached from any seeded representative
  Parse = 13,            // malformed JSON / text input
  Internal = 14          // invariant violation inside the library (a bug)
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what_arg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what_arg),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Convenience throw helpers keep call sites one-liners.
[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace triadic
