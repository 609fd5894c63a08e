// Exercises the C boundary as an external client: only triadic.h, no core
// headers, no exceptions expected to cross.
#include <cstdio>
#include <cstring>
#include <string>

#include "triadic.h"

namespace {

int failures = 0;

#define REQUIRE(cond)                                                   \
  do {                                                                  \
    if (!(cond)) {                                                      \
      std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__,     \
                   #cond);                                              \
      ++failures;                                                       \
    }                                                                   \
  } while (0)

bool contains(const char* hay, const char* needle) {
  return hay != nullptr && std::strstr(hay, needle) != nullptr;
}

const char* kHyp = "{\"gram\": [[\"0\",\"1\"],[\"1\",\"0\"]]}";

std::string hyp_triple_request(const char* point_slots, const char* method) {
  std::string forms =
      "[{\"gram\":[[\"0\",\"1\"],[\"1\",\"0\"]]},"
      "{\"gram\":[[\"0\",\"1\"],[\"1\",\"0\"]]},"
      "{\"gram\":[[\"0\",\"1\"],[\"1\",\"0\"]]}]";
  return std::string("{\"p\":3,\"method\":\"") + method +
         "\",\"forms\":" + forms + ",\"point\":{\"slots\":" + point_slots +
         "}}";
}

}  // namespace

int main() {
  tq_ctx* ctx = tq_ctx_new();
  REQUIRE(ctx != nullptr);
  REQUIRE(tq_version() != nullptr);
  REQUIRE(std::string(tq_last_error(ctx)).empty());

  // Scalar entry points and error mapping.
  int h = 0;
  REQUIRE(tq_hilbert(ctx, "2", "3", 5, &h) == TQ_OK);
  REQUIRE(h == 1);
  REQUIRE(tq_hilbert(ctx, "3", "3", 3, &h) == TQ_OK);
  REQUIRE(h == -1);
  REQUIRE(tq_hilbert(ctx, "2", "3", 4, &h) == TQ_UNSUPPORTED_PRIME);
  REQUIRE(contains(tq_last_error(ctx), "odd prime"));
  REQUIRE(tq_hilbert(ctx, "0", "3", 5, &h) == TQ_INVALID_ARGUMENT);
  REQUIRE(tq_hilbert(ctx, "not-a-number", "3", 5, &h) == TQ_PARSE);
  REQUIRE(tq_hilbert(ctx, nullptr, "3", 5, &h) == TQ_PARSE);
  REQUIRE(tq_hilbert(nullptr, "2", "3", 5, &h) == TQ_INVALID_ARGUMENT);

  int chi = 0;
  REQUIRE(tq_chi(ctx, kHyp, "15", 3, &chi) == TQ_OK);
  REQUIRE(chi == 1);
  REQUIRE(tq_chi(ctx, "{\"gram\": [[\"1\",\"0\"],[\"0\",\"1\"]]}", "3", 3,
                 &chi) == TQ_OK);
  REQUIRE(chi == -1);
  REQUIRE(tq_chi(ctx, "{\"gram\": \"nope\"}", "3", 3, &chi) == TQ_PARSE);

  // A successful call clears the previous error message.
  REQUIRE(tq_hilbert(ctx, "2", "3", 4, &h) == TQ_UNSUPPORTED_PRIME);
  REQUIRE(!std::string(tq_last_error(ctx)).empty());
  REQUIRE(tq_hilbert(ctx, "2", "3", 5, &h) == TQ_OK);
  REQUIRE(std::string(tq_last_error(ctx)).empty());

  // Weil operator through JSON.
  char* out = nullptr;
  std::string weil_req = std::string("{\"p\":3,\"space\":") + kHyp +
                         ",\"g\":[[\"0\",\"1\"],[\"-1\",\"0\"]]}";
  REQUIRE(tq_weil_apply(ctx, weil_req.c_str(), &out) == TQ_OK);
  REQUIRE(contains(out, "\"window\""));
  REQUIRE(contains(out, "\"values\""));
  tq_string_free(out);
  out = nullptr;
  // det != 1 is rejected with the dedicated status.
  std::string bad_g = std::string("{\"p\":3,\"space\":") + kHyp +
                      ",\"g\":[[\"2\",\"0\"],[\"0\",\"1\"]]}";
  REQUIRE(tq_weil_apply(ctx, bad_g.c_str(), &out) == TQ_NOT_SPECIAL_LINEAR);
  REQUIRE(out == nullptr);

  // Plucker coordinates and the basic function.
  const char* id6 =
      "[[\"1\",\"0\",\"0\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\",\"0\","
      "\"0\"],[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"1\","
      "\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\","
      "\"0\",\"0\",\"1\"]]";
  std::string plu = std::string("{\"g\":") + id6 + ",\"p\":3}";
  REQUIRE(tq_plucker(ctx, plu.c_str(), &out) == TQ_OK);
  REQUIRE(contains(out, "\"cell\":0"));
  REQUIRE(contains(out, "\"norm\":\"1\""));
  tq_string_free(out);
  out = nullptr;

  std::string bas = std::string("{\"p\":3,\"g\":") + id6 + "}";
  REQUIRE(tq_basic_b(ctx, bas.c_str(), &out) == TQ_OK);
  REQUIRE(contains(out, "\"value\":\"1\""));
  tq_string_free(out);
  out = nullptr;
  // A non-symplectic matrix is rejected.
  const char* skew =
      "{\"p\":3,\"g\":[[\"1\",\"1\",\"0\",\"0\",\"0\",\"0\"],[\"0\",\"1\","
      "\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"1\",\"0\",\"0\",\"0\"],[\"0\","
      "\"0\",\"0\",\"1\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\",\"1\",\"0\"],"
      "[\"0\",\"0\",\"0\",\"0\",\"0\",\"1\"]]}";
  REQUIRE(tq_basic_b(ctx, skew, &out) == TQ_NOT_SYMPLECTIC);

  // Local integral: closed, oracle, and the comparison mode.
  std::string req =
      hyp_triple_request("[[\"3\",\"3\"],[\"3\",\"3\"],[\"3\",\"3\"]]",
                         "compare");
  REQUIRE(tq_local_integral(ctx, req.c_str(), &out) == TQ_OK);
  REQUIRE(contains(out, "\"value\":\"4\""));
  REQUIRE(contains(out, "\"oracle_value\":\"4\""));
  REQUIRE(contains(out, "\"match\":true"));
  tq_string_free(out);
  out = nullptr;

  req = hyp_triple_request("[[\"0\",\"0\"],[\"3\",\"0\"],[\"3\",\"0\"]]",
                           "closed");
  REQUIRE(tq_local_integral(ctx, req.c_str(), &out) == TQ_OK);
  REQUIRE(contains(out, "\"value\":\"6\""));
  tq_string_free(out);
  out = nullptr;

  req = hyp_triple_request("[[\"1\",\"1\"],[\"2\",\"1\"],[\"3\",\"1\"]]",
                           "closed");
  REQUIRE(tq_local_integral(ctx, req.c_str(), &out) == TQ_NOT_IN_DOMAIN);
  req = hyp_triple_request("[[\"1\",\"1\"],[\"1\",\"1\"],[\"1\",\"1\"]]",
                           "inexact");
  REQUIRE(tq_local_integral(ctx, req.c_str(), &out) == TQ_PARSE);
  REQUIRE(tq_local_integral(ctx, "{\"p\":3}", &out) == TQ_PARSE);
  REQUIRE(tq_local_integral(ctx, "{{{", &out) == TQ_PARSE);

  // Orbit census.
  REQUIRE(tq_orbits(ctx, "{\"q\":2,\"points\":true}", &out) == TQ_OK);
  REQUIRE(contains(out, "\"lagrangian_count\":135"));
  REQUIRE(contains(out, "\"bijection\":true"));
  tq_string_free(out);
  out = nullptr;
  REQUIRE(tq_orbits(ctx, "{\"q\":9}", &out) == TQ_INVALID_ARGUMENT);

  // Verification sweep: a cheap deterministic suite, twice, byte-identical.
  const char* vreq =
      "{\"suites\":[\"orbits\"],\"p\":3,\"seed\":11,\"threads\":2}";
  char* r1 = nullptr;
  char* r2 = nullptr;
  REQUIRE(tq_verify(ctx, vreq, &r1) == TQ_OK);
  REQUIRE(tq_verify(ctx, vreq, &r2) == TQ_OK);
  REQUIRE(r1 != nullptr && r2 != nullptr && std::strcmp(r1, r2) == 0);
  REQUIRE(contains(r1, "\"all_pass\":true"));
  tq_string_free(r1);
  tq_string_free(r2);
  REQUIRE(tq_verify(ctx, "{\"suites\":[\"nope\"]}", &out) ==
          TQ_INVALID_ARGUMENT);

  tq_ctx_free(ctx);
  tq_ctx_free(nullptr);  // must be a no-op

  if (failures != 0) {
    std::fprintf(stderr, "%d assertion(s) failed\n", failures);
    return 1;
  }
  std::puts("all C API checks passed");
  return 0;
}
