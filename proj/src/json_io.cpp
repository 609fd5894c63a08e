// SPDX-License-Identifier: MIT
#include "triadic/json_io.hpp"

#include "triadic/errors.hpp"

namespace triadic {
namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::Parse, what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    parse_fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) parse_fail("malformed JSON input");
  return j;
}

Json rat_json(const Rat& x) { return Json(rat_to_string(x)); }

Rat rat_from_json(const Json& j) {
  try {
    if (j.is_number_integer())
      return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    parse_fail(std::string("bad rational: ") + e.what());
  }
  parse_fail("rational values must be integers or \"n/d\" strings");
}

Json cyc_json(const CycValue& v) {
  Json j = Json::object();
  j["order"] = v.root_order();
  if (v.is_rational()) {
    j["rational"] = rat_to_string(v.rational_value());
  } else {
    Json coeffs = Json::array();
    for (const Rat& c : v.coefficients()) coeffs.push_back(rat_to_string(c));
    j["coeffs"] = std::move(coeffs);
  }
  return j;
}

std::vector<Rat> vec_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("expected an array of rationals");
  std::vector<Rat> v;
  v.reserve(j.size());
  for (const Json& e : j) v.push_back(rat_from_json(e));
  return v;
}

Json vec_json(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_to_string(x));
  return j;
}

RatMat rmat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) parse_fail("expected a matrix (array of rows)");
  RatMat m;
  size_t width = 0;
  for (const Json& row : j) {
    m.push_back(vec_from_json(row));
    if (width == 0) width = m.back().size();
    if (m.back().size() != width || width == 0)
      parse_fail("matrix rows must be nonempty and of equal length");
  }
  return m;
}

Mat2 mat2_from_json(const Json& j) {
  RatMat m = rmat_from_json(j);
  if (m.size() != 2 || m[0].size() != 2) parse_fail("expected a 2x2 matrix");
  return Mat2{{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
}

Mat6 mat6_from_json(const Json& j) {
  RatMat m = rmat_from_json(j);
  if (m.size() != 6 || m[0].size() != 6) parse_fail("expected a 6x6 matrix");
  Mat6 out;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) out[r][c] = m[r][c];
  return out;
}

Json vec20_json(const Vec20& w) {
  Json j = Json::array();
  for (const Rat& x : w) j.push_back(rat_to_string(x));
  return j;
}

QuadraticSpace space_from_json(const Json& j) {
  return QuadraticSpace(rmat_from_json(member(j, "gram")));
}

QuadTriple triple_from_json(const Json& j) {
  const Json& forms = member(j, "forms");
  if (!forms.is_array() || forms.size() != 3)
    parse_fail("'forms' must list exactly three quadratic spaces");
  std::vector<QuadraticSpace> spaces;
  for (const Json& f : forms) spaces.push_back(space_from_json(f));
  return QuadTriple(std::move(spaces));
}

PointV point_from_json(const Json& j) {
  const Json& slots = member(j, "slots");
  if (!slots.is_array() || slots.size() != 3)
    parse_fail("'slots' must list exactly three vectors");
  PointV v;
  for (int i = 0; i < 3; ++i) v.slots[i] = vec_from_json(slots[i]);
  return v;
}

Json point_json(const PointV& v) {
  Json slots = Json::array();
  for (int i = 0; i < 3; ++i) slots.push_back(vec_json(v.slots[i]));
  Json j = Json::object();
  j["slots"] = std::move(slots);
  return j;
}

CellFunction cell_function_from_json(const Json& j) {
  const Json& cells = member(j, "cells");
  if (!cells.is_array()) parse_fail("'cells' must be an array");
  CellFunction f;
  for (const Json& e : cells) {
    const Json& cell = member(e, "cell");
    if (!cell.is_number_integer()) parse_fail("'cell' must be an integer");
    f.set(static_cast<long>(cell.get<long long>()),
          rat_from_json(member(e, "coeff")));
  }
  return f;
}

Json schwartz_json(const SchwartzFn& f) {
  Json window = Json::object();
  window["m"] = f.window_m();
  window["n"] = f.window_n();
  window["d"] = f.dim();
  Json values = Json::array();
  const long long total = f.cell_count();
  for (long long idx = 0; idx < total; ++idx) {
    CycValue val = f.cell_value(idx);
    if (val.is_zero()) continue;
    Json entry = Json::object();
    entry["coset"] = vec_json(f.cell_rep(f.cell_tuple(idx)));
    entry["value"] = cyc_json(val);
    values.push_back(std::move(entry));
  }
  Json j = Json::object();
  j["window"] = std::move(window);
  j["values"] = std::move(values);
  return j;
}

SchwartzFn schwartz_from_json(const PAdicContext& ctx,
                              const QuadraticSpace& V, const Json& j) {
  const Json& window = member(j, "window");
  if (!member(window, "m").is_number_integer() ||
      !member(window, "n").is_number_integer())
    parse_fail("window bounds m, n must be integers");
  const int m = window.at("m").get<int>();
  const int n = window.at("n").get<int>();
  if (m < 0 || n < 0 || m > 12 || n > 12)
    parse_fail("window bounds out of range");
  SchwartzFn f(ctx, V, m, n);
  const Json& values = member(j, "values");
  if (!values.is_array()) parse_fail("'values' must be an array");
  for (const Json& entry : values) {
    std::vector<Rat> coset = vec_from_json(member(entry, "coset"));
    if (static_cast<int>(coset.size()) != V.dim())
      parse_fail("coset representative has the wrong dimension");
    const Json& val = member(entry, "value");
    Rat r;
    if (val.is_object()) {
      if (!val.contains("rational"))
        parse_fail("only rational cell values are accepted as input");
      r = rat_from_json(val.at("rational"));
    } else {
      r = rat_from_json(val);
    }
    try {
      f.set(coset, CycValue(r));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument)
        parse_fail(std::string("coset outside the window: ") + e.what());
      throw;
    }
  }
  return f;
}

Json orbit_report_json(const OrbitReport& r) {
  Json j = Json::object();
  j["q"] = r.q;
  j["lagrangian_count"] = r.lagrangian_count;
  j["group_order"] = r.group_order;
  Json orbits = Json::array();
  for (const OrbitInfo& o : r.orbits) {
    Json e = Json::object();
    e["label"] = o.label;
    e["size"] = o.size;
    e["stabilizer_order"] = o.stabilizer_order;
    e["parametric_order"] = o.parametric_order;
    Json rows = Json::array();
    for (const auto& row : o.representative.rows) {
      Json jr = Json::array();
      for (uint8_t x : row) jr.push_back(static_cast<int>(x));
      rows.push_back(std::move(jr));
    }
    e["representative"] = std::move(rows);
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

Json xpoint_report_json(const XPointReport& r) {
  Json j = Json::object();
  j["q"] = r.q;
  j["xpoint_count"] = r.xpoint_count;
  j["orbit_count"] = r.orbit_count;
  j["covers"] = r.covers;
  j["bijection"] = r.bijection;
  j["n0_contained"] = r.n0_contained;
  Json orbits = Json::array();
  for (const XOrbitInfo& o : r.orbits) {
    Json e = Json::object();
    e["label"] = o.label;
    e["size"] = o.size;
    e["stabilizer_order"] = o.stabilizer_order;
    e["matches_plane_orbit"] = o.matches_plane_orbit;
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  return j;
}

}  // namespace triadic
