// SPDX-License-Identifier: MIT
//
// JSON bridges for the exact types: rationals travel as strings (never
// floating point), cyclotomic values as coefficient vectors over the power
// basis, and the report structs as stable ordered objects so identical runs
// serialize byte-identically.

#pragma once

#include <string>

#include <json.hpp>

#include "triadic/cyclotomic.hpp"
#include "triadic/local_integral.hpp"
#include "triadic/matrix.hpp"
#include "triadic/orbits_ff.hpp"
#include "triadic/padic.hpp"
#include "triadic/schwartz.hpp"

namespace triadic {

// Insertion-ordered JSON keeps report fields in a fixed, deterministic order.
using Json = nlohmann::ordered_json;

// Parse text to JSON; malformed input throws Error(Parse).
Json parse_json_text(const std::string& text);

// --- scalars ---------------------------------------------------------------
Json rat_json(const Rat& x);            // canonical "n" or "n/d" string
Rat rat_from_json(const Json& j);       // accepts integers or strings
Json cyc_json(const CycValue& v);       // {order, rational} or {order, coeffs}

// --- vectors and matrices ---------------------------------------------------
std::vector<Rat> vec_from_json(const Json& j);
Json vec_json(const std::vector<Rat>& v);
RatMat rmat_from_json(const Json& j);
Mat2 mat2_from_json(const Json& j);
Mat6 mat6_from_json(const Json& j);
Json vec20_json(const Vec20& w);

// --- domain objects ----------------------------------------------------------
// {"gram": [[...]]}
QuadraticSpace space_from_json(const Json& j);
// {"forms": [space, space, space]}
QuadTriple triple_from_json(const Json& j);
// {"slots": [[...],[...],[...]]}
PointV point_from_json(const Json& j);
Json point_json(const PointV& v);
// {"cells": [{"cell": int, "coeff": rat}]}
CellFunction cell_function_from_json(const Json& j);

// {"window": {"m","n","d"}, "values": [{"coset": [...], "value": cyc}]}
Json schwartz_json(const SchwartzFn& f);

// Inverse of schwartz_json for rational-valued input: {"window": {"m", "n"},
// "values": [{"coset": [rationals], "value": "rat" | {"rational": "rat"}}]}.
// Cell values that are genuine root-of-unity combinations are not accepted
// as input (throws Parse); produce them by applying operators instead.
SchwartzFn schwartz_from_json(const PAdicContext& ctx,
                              const QuadraticSpace& V, const Json& j);

// --- reports -----------------------------------------------------------------
Json orbit_report_json(const OrbitReport& r);
Json xpoint_report_json(const XPointReport& r);

}  // namespace triadic
