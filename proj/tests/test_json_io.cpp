#include <doctest.h>

#include <string>

#include "triadic/errors.hpp"
#include "triadic/json_io.hpp"
#include "triadic/schwartz.hpp"

using namespace triadic;

namespace {

bool throws_parse(void (*f)()) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == ErrorCode::Parse;
  }
  return false;
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("rationals round trip as canonical strings") {
  for (const char* s : {"0", "1", "-7", "3/4", "-22/7"}) {
    Json j = rat_json(rat_from_string(s));
    CHECK(j.is_string());
    CHECK(rat_from_json(j) == rat_from_string(s));
  }
  // Plain JSON integers are accepted on input.
  CHECK(rat_from_json(Json(5)) == Rat(5));
  CHECK(rat_from_json(Json(-12)) == Rat(-12));
  CHECK(throws_parse([] { rat_from_json(Json::parse("\"1/0\"")); }));
  CHECK(throws_parse([] { rat_from_json(Json::parse("1.5")); }));
  CHECK(throws_parse([] { rat_from_json(Json::parse("[1]")); }));
}

TEST_CASE("vectors and matrices round trip") {
  std::vector<Rat> v = {Rat(1), Rat(-2) / Rat(3), Rat(0)};
  CHECK(vec_from_json(vec_json(v)) == v);
  RatMat m = {{Rat(0), Rat(1)}, {Rat(1) / Rat(5), Rat(-4)}};
  Json jm = Json::array();
  for (const auto& row : m) jm.push_back(vec_json(row));
  CHECK(rmat_from_json(jm) == m);
  Mat2 g = mat2_from_json(Json::parse("[[\"1\",\"2\"],[\"0\",\"1\"]]"));
  CHECK(g[0][1] == Rat(2));
  CHECK(throws_parse(
      [] { mat2_from_json(Json::parse("[[\"1\",\"2\",\"3\"],[\"0\"]]")); }));
  Mat6 s = mat6_from_json(Json::parse(
      "[[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\",\"0\","
      "\"0\"],[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"1\","
      "\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\","
      "\"0\",\"0\",\"1\"]]"));
  CHECK(s[5][5] == Rat(1));
}

TEST_CASE("spaces, triples, and points parse with validation") {
  Json space = Json::parse("{\"gram\": [[\"0\",\"1\"],[\"1\",\"0\"]]}");
  QuadraticSpace V = space_from_json(space);
  CHECK(V.dim() == 2);
  CHECK(V.q_value({Rat(2), Rat(3)}) == Rat(6));

  Json req = Json::object();
  Json forms = Json::array();
  forms.push_back(space);
  forms.push_back(space);
  forms.push_back(space);
  req["forms"] = forms;
  QuadTriple T = triple_from_json(req);
  CHECK(T.total_dim() == 6);
  Json two = Json::object();
  two["forms"] = Json::array({space, space});
  CHECK_THROWS_AS(triple_from_json(two), Error);

  Json pt = Json::parse(
      "{\"slots\": [[\"1\",\"1\"],[\"2\",\"1\"],[\"0\",\"3\"]]}");
  PointV v = point_from_json(pt);
  CHECK(v.slots[1] == std::vector<Rat>{Rat(2), Rat(1)});
}

TEST_CASE("asymmetric gram matrices are rejected") {
  Json bad = Json::parse("{\"gram\": [[\"0\",\"1\"],[\"2\",\"0\"]]}");
  CHECK_THROWS_AS(space_from_json(bad), Error);
}

TEST_CASE("cell functions parse from sparse cell lists") {
  Json j = Json::parse(
      "{\"cells\": [{\"cell\": 0, \"coeff\": \"1\"},"
      " {\"cell\": 2, \"coeff\": \"10\"}]}");
  CellFunction f = cell_function_from_json(j);
  CHECK(f.eval(0) == Rat(1));
  CHECK(f.eval(1) == Rat(0));
  CHECK(f.eval(2) == Rat(10));
  CHECK(f.max_cell() == 2);
}

TEST_CASE("schwartz functions serialize and parse back") {
  PAdicContext ctx(3);
  QuadraticSpace V = space_from_json(
      Json::parse("{\"gram\": [[\"0\",\"1\"],[\"1\",\"0\"]]}"));
  SchwartzFn f(ctx, V, 1, 1);
  f.set({Rat(1) / Rat(3), Rat(0)}, CycValue(Rat(5)));
  f.set({Rat(0), Rat(2)}, CycValue(Rat(-1) / Rat(2)));
  Json j = schwartz_json(f);
  CHECK(j.at("window").at("m").get<int>() == 1);
  CHECK(j.at("window").at("n").get<int>() == 1);
  CHECK(j.at("window").at("d").get<int>() == 2);
  SchwartzFn g = schwartz_from_json(ctx, V, j);
  CHECK(schwartz_equal(f, g));
  // Zero cells are skipped in the serialization.
  CHECK(j.at("values").size() == 2u);
}

TEST_CASE("schwartz parsing rejects irrational values and stray cosets") {
  PAdicContext ctx(3);
  QuadraticSpace V = space_from_json(
      Json::parse("{\"gram\": [[\"0\",\"1\"],[\"1\",\"0\"]]}"));
  // A function holding a genuine root of unity serializes to coefficient
  // form, which the parser refuses (input functions must be rational).
  SchwartzFn f = SchwartzFn::lattice_indicator(ctx, V);
  SchwartzFn g = weil_n(Rat(1) / Rat(3), f);
  Json j = schwartz_json(g);
  CHECK_THROWS_AS(schwartz_from_json(ctx, V, j), Error);
  // A coset outside the declared window is a parse error.
  Json bad = Json::parse(
      "{\"window\": {\"m\": 0, \"n\": 0},"
      " \"values\": [{\"coset\": [\"1/3\", \"0\"], \"value\": \"1\"}]}");
  CHECK_THROWS_AS(schwartz_from_json(ctx, V, bad), Error);
}

TEST_CASE("cyclotomic values serialize by order and coefficients") {
  PAdicContext ctx(3);
  Json r = cyc_json(CycValue(Rat(7) / Rat(2)));
  CHECK(r.at("rational").get<std::string>() == "7/2");
  CycValue z = psi(ctx, Rat(1) / Rat(3));
  Json jz = cyc_json(z);
  CHECK(jz.contains("coeffs"));
  CHECK(jz.at("order").get<long long>() == 4 * 729);
}

TEST_CASE("malformed top-level text raises parse errors") {
  CHECK(throws_parse([] { (void)parse_json_text("{oops"); }));
  CHECK(throws_parse([] { (void)parse_json_text(""); }));
  CHECK_NOTHROW(parse_json_text("{}"));
}

}  // TEST_SUITE
