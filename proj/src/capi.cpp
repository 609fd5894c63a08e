// SPDX-License-Identifier: MIT
//
// C boundary: every entry point parses JSON, calls the C++ core, serializes
// the result, and converts exceptions into status codes.  No exception and
// no C++ type crosses the boundary.
#include "triadic.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "triadic/errors.hpp"
#include "triadic/json_io.hpp"
#include "triadic/local_integral.hpp"
#include "triadic/orbits_ff.hpp"
#include "triadic/schwartz.hpp"
#include "triadic/symplectic.hpp"
#include "triadic/verify.hpp"

struct tq_ctx {
  std::string last_error;
};

namespace {

using namespace triadic;

tq_status status_of(ErrorCode c) { return static_cast<tq_status>(c); }

// Run `body` and translate any escaping exception into a status code plus a
// stored message.
template <typename F>
tq_status guarded(tq_ctx* ctx, F&& body) {
  if (ctx == nullptr) return TQ_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return TQ_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = std::string("unexpected error: ") + e.what();
    return TQ_INTERNAL;
  } catch (...) {
    ctx->last_error = "unexpected non-standard exception";
    return TQ_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out_json, const Json& j) {
  require(out_json != nullptr, ErrorCode::InvalidArgument,
          "output parameter must not be null");
  *out_json = dup_string(j.dump());
}

Json parse_request(const char* text) {
  require(text != nullptr, ErrorCode::Parse, "request must not be null");
  return parse_json_text(text);
}

Rat rat_arg(const char* s, const char* what) {
  require(s != nullptr, ErrorCode::Parse,
          std::string(what) + " must not be null");
  return rat_from_string(s);
}

long long_field(const Json& j, const char* key, long fallback,
                bool required) {
  if (!j.contains(key)) {
    require(!required, ErrorCode::Parse,
            std::string("missing field '") + key + "'");
    return fallback;
  }
  require(j.at(key).is_number_integer(), ErrorCode::Parse,
          std::string("field '") + key + "' must be an integer");
  return static_cast<long>(j.at(key).get<long long>());
}

}  // namespace

extern "C" {

tq_ctx* tq_ctx_new(void) {
  try {
    return new tq_ctx();
  } catch (...) {
    return nullptr;
  }
}

void tq_ctx_free(tq_ctx* ctx) { delete ctx; }

const char* tq_last_error(const tq_ctx* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void tq_string_free(char* s) { std::free(s); }

const char* tq_version(void) { return "1.0.0"; }

tq_status tq_hilbert(tq_ctx* ctx, const char* a, const char* b, long p,
                     int* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, ErrorCode::InvalidArgument,
            "output parameter must not be null");
    *out = hilbert_symbol(rat_arg(a, "a"), rat_arg(b, "b"), p);
  });
}

tq_status tq_chi(tq_ctx* ctx, const char* space_json, const char* a, long p,
                 int* out) {
  return guarded(ctx, [&] {
    require(out != nullptr, ErrorCode::InvalidArgument,
            "output parameter must not be null");
    QuadraticSpace V = space_from_json(parse_request(space_json));
    *out = V.chi(rat_arg(a, "a"), p);
  });
}

tq_status tq_weil_apply(tq_ctx* ctx, const char* request_json,
                        char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    long p = long_field(req, "p", 0, true);
    int depth = static_cast<int>(long_field(req, "depth", 6, false));
    require(depth >= 1 && depth <= 12, ErrorCode::Parse,
            "depth must be between 1 and 12");
    PAdicContext pctx(p, depth);
    QuadraticSpace V = space_from_json(
        req.contains("space") ? req.at("space") : Json::object());
    Mat2 g = mat2_from_json(
        req.contains("g") ? req.at("g")
                          : throw Error(ErrorCode::Parse, "missing field 'g'"));
    SchwartzFn f = req.contains("function")
                       ? schwartz_from_json(pctx, V, req.at("function"))
                       : SchwartzFn::lattice_indicator(pctx, V);
    SchwartzFn out = weil_apply(g, f);
    Json resp = Json::object();
    resp["p"] = p;
    resp["depth"] = depth;
    resp["function"] = schwartz_json(out);
    emit(out_json, resp);
  });
}

tq_status tq_plucker(tq_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    Sp6Element g(mat6_from_json(req.contains("g")
                              ? req.at("g")
                              : throw Error(ErrorCode::Parse,
                                            "missing field 'g'")));
    Vec20 w = plucker(g);
    Json resp = Json::object();
    resp["coordinates"] = vec20_json(w);
    if (req.contains("p")) {
      long p = long_field(req, "p", 0, true);
      long cell = iwasawa_cell(g, p);
      resp["cell"] = cell;
      resp["norm"] = rat_to_string(plucker_norm(g, p));
    }
    emit(out_json, resp);
  });
}

tq_status tq_basic_b(tq_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    long p = long_field(req, "p", 0, true);
    Sp6Element g(mat6_from_json(req.contains("g")
                              ? req.at("g")
                              : throw Error(ErrorCode::Parse,
                                            "missing field 'g'")));
    Json resp = Json::object();
    resp["cell"] = iwasawa_cell(g, p);
    resp["value"] = rat_to_string(basic_b(g, p));
    emit(out_json, resp);
  });
}

tq_status tq_local_integral(tq_ctx* ctx, const char* request_json,
                            char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    long p = long_field(req, "p", 0, true);
    QuadTriple T = triple_from_json(
        req.contains("forms")
            ? req
            : throw Error(ErrorCode::Parse, "missing field 'forms'"));
    PointV v = point_from_json(
        req.contains("point")
            ? req.at("point")
            : throw Error(ErrorCode::Parse, "missing field 'point'"));
    std::string method = "closed";
    if (req.contains("method")) {
      require(req.at("method").is_string(), ErrorCode::Parse,
              "'method' must be a string");
      method = req.at("method").get<std::string>();
    }
    require(method == "closed" || method == "oracle" || method == "compare",
            ErrorCode::Parse,
            "'method' must be \"closed\", \"oracle\", or \"compare\"");
    CellFunction f1 = req.contains("f1")
                          ? cell_function_from_json(req.at("f1"))
                          : default_cell_function(T, v, p);
    Json resp = Json::object();
    resp["p"] = p;
    resp["method"] = method;
    if (method == "closed") {
      ClosedResult r = local_integral_closed(T, v, p);
      resp["value"] = rat_to_string(r.value);
      resp["terms"] = r.terms;
      Json trunc = Json::object();
      trunc["lattice_points"] = r.terms;
      resp["truncation"] = std::move(trunc);
    } else {
      OracleResult r = local_integral_oracle(T, v, f1, p);
      Json trunc = Json::object();
      trunc["psi_terms"] = r.psi_terms;
      trunc["torus_boxes"] = r.e_boxes;
      trunc["deepest_shell"] = r.s_depth;
      trunc["character_depth"] = r.context_depth;
      if (method == "oracle") {
        resp["value"] = rat_to_string(r.rational);
        resp["terms"] = r.psi_terms;
        resp["truncation"] = std::move(trunc);
      } else {
        ClosedResult c = local_integral_closed(T, v, p);
        resp["value"] = rat_to_string(c.value);
        resp["terms"] = c.terms;
        resp["oracle_value"] = rat_to_string(r.rational);
        resp["truncation"] = std::move(trunc);
        resp["match"] = (c.value == r.rational);
      }
    }
    emit(out_json, resp);
  });
}

tq_status tq_orbits(tq_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    long q = long_field(req, "q", 0, true);
    bool points = false;
    if (req.contains("points")) {
      require(req.at("points").is_boolean(), ErrorCode::Parse,
              "'points' must be a boolean");
      points = req.at("points").get<bool>();
    }
    Json resp = Json::object();
    resp["planes"] = orbit_report_json(orbit_decompose(q));
    if (points) resp["points"] = xpoint_report_json(xpoints_decompose(q));
    emit(out_json, resp);
  });
}

tq_status tq_verify(tq_ctx* ctx, const char* request_json, char** out_json) {
  return guarded(ctx, [&] {
    Json req = parse_request(request_json);
    VerifyOptions opt;
    if (req.contains("suites")) {
      require(req.at("suites").is_array(), ErrorCode::Parse,
              "'suites' must be an array of strings");
      for (const Json& s : req.at("suites")) {
        require(s.is_string(), ErrorCode::Parse,
                "'suites' must be an array of strings");
        opt.suites.push_back(s.get<std::string>());
      }
    }
    opt.p = long_field(req, "p", 0, false);
    if (req.contains("seed")) {
      require(req.at("seed").is_number_integer() &&
                  !req.at("seed").is_number_float(),
              ErrorCode::Parse, "'seed' must be an integer");
      opt.seed = req.at("seed").get<std::uint64_t>();
    }
    opt.threads = static_cast<int>(long_field(req, "threads", 1, false));
    require(opt.threads >= 1 && opt.threads <= 256, ErrorCode::Parse,
            "'threads' must be between 1 and 256");
    emit(out_json, verify_report_json(run_verify(opt)));
  });
}

}  // extern "C"
