// SPDX-License-Identifier: MIT
//
// Self-verification suites.  Each suite runs a set of exact property checks
// (no floating point, no tolerance): p-adic symbol oracles, cyclotomic
// character identities, the metaplectic-free representation property, the
// symplectic cell machinery, closed-form-vs-oracle equality of the local
// integral on a generated battery, finite-field orbit structure, and a
// byte-identical determinism run.  A fixed seed fully determines every
// sampled case; thread count never changes any reported byte.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "triadic/json_io.hpp"
#include "triadic/local_integral.hpp"
#include "triadic/padic.hpp"

namespace triadic {

// --- battery ---------------------------------------------------------------
// Deterministic, seed-independent battery of points on the equal-value locus
// used by the integral checks.  Slot vectors are exact rational solutions of
// Q_i(v_i) = c found by bounded integer search; the anisotropic diagonal
// slots force val(c) = 2 ord there, so not every (triple, pattern) pair is
// realizable — the builder skips combinations with provably no points.
struct BatteryPoint {
  long p = 0;
  std::string triple_name;   // "hyperbolic" | "unit-diagonal" | "mixed"
  std::array<long, 3> ord{}; // per-slot target order; -1 marks the zero slot
  QuadTriple forms;
  PointV point;
  bool integral = true;      // lies in the unit lattice
  int zero_slot = -1;        // index of the identically-zero slot, or -1

  explicit BatteryPoint(QuadTriple T) : forms(std::move(T)) {}
};

// The three standard form triples by name (hyperbolic / unit-diagonal /
// mixed).  Throws Parse on an unknown name.
QuadTriple battery_triple(const std::string& name);

// On-lattice battery for one prime: covers the six order patterns across the
// three triples, varies val Q(v) where the forms allow it, and includes
// zero-slot points (first slot zero on the all-hyperbolic triple).
std::vector<BatteryPoint> build_battery(long p);

// Off-lattice companions (some slot outside the unit lattice, still on the
// locus): both evaluators must vanish on these.
std::vector<BatteryPoint> build_offlattice(long p);

// --- verification ------------------------------------------------------------
struct VerifyOptions {
  std::vector<std::string> suites;  // empty = all suites
  long p = 0;                       // 0 = both 3 and 5; else that prime only
  std::uint64_t seed = 1;
  int threads = 1;                  // worker threads; never affects output
};

struct CheckResult {
  std::string suite;
  std::string name;
  long long cases = 0;   // number of individual facts checked
  bool pass = false;
  std::string detail;    // first counterexample, or a short summary
};

struct VerifyReport {
  std::vector<std::string> suites;  // suites actually run, in order
  std::vector<long> primes;
  std::uint64_t seed = 1;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

extern const std::array<const char*, 7> kVerifySuites;
bool is_verify_suite(const std::string& name);

VerifyReport run_verify(const VerifyOptions& opt);

// Stable serialization: field order fixed, no timestamps, no thread counts —
// identical options (including seed) give byte-identical dumps.
Json verify_report_json(const VerifyReport& r);

}  // namespace triadic
