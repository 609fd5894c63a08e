// SPDX-License-Identifier: MIT
//
// Command-line front end.  Talks to the library exclusively through the C
// API (triadic.h); its own work is limited to argument handling, JSON
// formatting, and an optional result cache for the orbit census.
//
// Exit codes: 0 success / checks passed; 1 a verification check or a
// closed-vs-oracle comparison failed (the counterexample is printed);
// 2 usage error, malformed input, or any library error.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triadic.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

// ---------------------------------------------------------------------------
// C API plumbing

struct CtxDeleter {
  void operator()(tq_ctx* c) const { tq_ctx_free(c); }
};
using CtxPtr = std::unique_ptr<tq_ctx, CtxDeleter>;

struct StrDeleter {
  void operator()(char* s) const { tq_string_free(s); }
};
using StrPtr = std::unique_ptr<char, StrDeleter>;

[[noreturn]] void die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitError);
}

void check_status(const tq_ctx* ctx, tq_status st) {
  if (st != TQ_OK) die(tq_last_error(ctx));
}

// Run a request/response entry point and hand back the parsed response.
template <typename Fn>
Json call_json(tq_ctx* ctx, Fn fn, const Json& request) {
  char* raw = nullptr;
  check_status(ctx, fn(ctx, request.dump().c_str(), &raw));
  StrPtr guard(raw);
  return Json::parse(raw);
}

// ---------------------------------------------------------------------------
// Argument helpers

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An argument value is either inline JSON or @file.
std::string payload(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return slurp(arg.substr(1));
  return arg;
}

Json parse_payload(const std::string& arg, const std::string& what) {
  try {
    return Json::parse(payload(arg));
  } catch (const std::exception& e) {
    die(what + ": " + e.what());
  }
}

// Named 2- and 4-dimensional quadratic spaces (Gram matrices; the form is
// v G v^T / 2).
std::optional<Json> named_space(const std::string& name) {
  auto gram = [](std::vector<std::vector<const char*>> rows) {
    Json g = Json::array();
    for (const auto& r : rows) {
      Json jr = Json::array();
      for (const char* x : r) jr.push_back(x);
      g.push_back(std::move(jr));
    }
    Json space = Json::object();
    space["gram"] = std::move(g);
    return space;
  };
  if (name == "hyperbolic") return gram({{"0", "1"}, {"1", "0"}});
  if (name == "unit-diagonal") return gram({{"1", "0"}, {"0", "1"}});
  if (name == "diagonal-1-m2") return gram({{"1", "0"}, {"0", "-2"}});
  if (name == "double-hyperbolic")
    return gram({{"0", "1", "0", "0"},
                 {"1", "0", "0", "0"},
                 {"0", "0", "0", "1"},
                 {"0", "0", "1", "0"}});
  return std::nullopt;
}

Json space_arg(const std::string& arg) {
  if (auto s = named_space(arg)) return *s;
  Json j = parse_payload(arg, "--space");
  if (j.is_array()) {  // bare Gram matrix
    Json space = Json::object();
    space["gram"] = std::move(j);
    return space;
  }
  return j;
}

// Named triples of quadratic spaces for the local integral.
std::optional<Json> named_triple(const std::string& name) {
  auto triple = [](const char* a, const char* b, const char* c) {
    Json forms = Json::array();
    forms.push_back(*named_space(a));
    forms.push_back(*named_space(b));
    forms.push_back(*named_space(c));
    return forms;
  };
  if (name == "hyperbolic")
    return triple("hyperbolic", "hyperbolic", "hyperbolic");
  if (name == "unit-diagonal")
    return triple("hyperbolic", "unit-diagonal", "diagonal-1-m2");
  if (name == "mixed")
    return triple("hyperbolic", "diagonal-1-m2", "double-hyperbolic");
  return std::nullopt;
}

Json forms_arg(const std::string& arg) {
  if (auto t = named_triple(arg)) return *t;
  Json j = parse_payload(arg, "--forms");
  if (j.is_object() && j.contains("forms")) return j.at("forms");
  return j;
}

Json point_arg(const std::string& arg) {
  Json j = parse_payload(arg, "--point");
  if (j.is_array()) {  // bare list of three slot vectors
    Json pt = Json::object();
    pt["slots"] = std::move(j);
    return pt;
  }
  return j;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Table renderers

int render_verify(const Json& report, const std::string& style) {
  bool all_pass = report.at("all_pass").get<bool>();
  if (style == "json") {
    print_json(report);
  } else {
    for (const Json& c : report.at("checks")) {
      std::cout << (c.at("pass").get<bool>() ? "[PASS] " : "[FAIL] ")
                << c.at("suite").get<std::string>() << "/"
                << c.at("name").get<std::string>() << " ("
                << c.at("cases").get<long long>() << " cases)";
      std::string detail = c.at("detail").get<std::string>();
      if (!detail.empty()) std::cout << " — " << detail;
      std::cout << "\n";
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? 0 : kExitCheckFailed;
}

void render_orbit_table(const Json& out) {
  const Json& pl = out.at("planes");
  std::cout << "q=" << pl.at("q").get<long long>() << ": "
            << pl.at("lagrangian_count").get<long long>()
            << " Lagrangian planes, acting group order "
            << pl.at("group_order").get<long long>() << "\n";
  for (const Json& o : pl.at("orbits"))
    std::cout << "  plane orbit " << o.at("label").get<std::string>()
              << ": size " << o.at("size").get<long long>() << ", stabilizer "
              << o.at("stabilizer_order").get<long long>() << " (parametric "
              << o.at("parametric_order").get<long long>() << ")\n";
  if (out.contains("points")) {
    const Json& xp = out.at("points");
    std::cout << "  cone points: " << xp.at("xpoint_count").get<long long>()
              << " in " << xp.at("orbit_count").get<long long>()
              << " orbits, bijection with plane orbits: "
              << (xp.at("bijection").get<bool>() ? "yes" : "NO") << "\n";
    for (const Json& o : xp.at("orbits"))
      std::cout << "  point orbit " << o.at("label").get<std::string>()
                << ": size " << o.at("size").get<long long>()
                << ", stabilizer " << o.at("stabilizer_order").get<long long>()
                << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact Weil-representation and orbital-integral calculator for "
      "triples of quadratic spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("triadic ") + tq_version());

  CtxPtr ctx(tq_ctx_new());
  if (!ctx) die("out of memory");

  // --- hilbert ---------------------------------------------------------
  auto* c_hil = app.add_subcommand(
      "hilbert", "Hilbert symbol (a, b)_p for nonzero rationals at an odd "
                 "prime");
  std::string hil_a, hil_b;
  long hil_p = 0;
  c_hil->add_option("--a", hil_a, "first argument (rational)")->required();
  c_hil->add_option("--b", hil_b, "second argument (rational)")->required();
  c_hil->add_option("--p", hil_p, "odd prime")->required();

  // --- chi -------------------------------------------------------------
  auto* c_chi = app.add_subcommand(
      "chi", "Quadratic character chi_Q(a) = (a, (-1)^{d(d-1)/2} det Q)_p");
  std::string chi_space, chi_a;
  long chi_p = 0;
  c_chi->add_option("--space", chi_space,
                    "quadratic space: name, inline JSON, or @file")
      ->required();
  c_chi->add_option("--a", chi_a, "argument (rational)")->required();
  c_chi->add_option("--p", chi_p, "odd prime")->required();

  // --- weil-apply ------------------------------------------------------
  auto* c_weil = app.add_subcommand(
      "weil-apply",
      "Apply the Weil-representation operator of an SL2(Q) element to a "
      "Schwartz function on V(Q_p)");
  std::string weil_space, weil_g, weil_fn;
  long weil_p = 0;
  int weil_depth = 6;
  c_weil->add_option("--p", weil_p, "odd prime")->required();
  c_weil
      ->add_option("--space", weil_space,
                   "quadratic space: name, inline JSON, or @file")
      ->required();
  c_weil->add_option("--g", weil_g, "2x2 matrix, det 1 (JSON or @file)")
      ->required();
  c_weil->add_option("--function", weil_fn,
                     "input function (JSON or @file); default: lattice "
                     "indicator");
  c_weil->add_option("--depth", weil_depth,
                     "character depth for the ambient cyclotomic field");

  // --- plucker ---------------------------------------------------------
  auto* c_plu = app.add_subcommand(
      "plucker", "Plucker coordinates of the distinguished Lagrangian plane "
                 "moved by a 6x6 symplectic matrix");
  std::string plu_g;
  long plu_p = 0;
  c_plu->add_option("--g", plu_g, "6x6 symplectic matrix (JSON or @file)")
      ->required();
  c_plu->add_option("--p", plu_p,
                    "odd prime: also report the cell index and p-adic norm");

  // --- basic-b ---------------------------------------------------------
  auto* c_bas = app.add_subcommand(
      "basic-b", "Evaluate the basic spherical function b at a 6x6 "
                 "symplectic matrix");
  std::string bas_g;
  long bas_p = 0;
  c_bas->add_option("--p", bas_p, "odd prime")->required();
  c_bas->add_option("--g", bas_g, "6x6 symplectic matrix (JSON or @file)")
      ->required();

  // --- local-integral --------------------------------------------------
  auto* c_loc = app.add_subcommand(
      "local-integral",
      "Orbital integral of the basic function over a triple of quadratic "
      "spaces at a point of the equal-value locus");
  std::string loc_forms, loc_point, loc_method = "closed", loc_f1;
  long loc_p = 0;
  c_loc->add_option("--p", loc_p, "odd prime")->required();
  c_loc->add_option("--forms", loc_forms,
                    "triple of spaces: name (hyperbolic, unit-diagonal, "
                    "mixed), inline JSON, or @file")
      ->required();
  c_loc->add_option("--point", loc_point,
                    "point: {\"slots\": [v1, v2, v3]} (JSON or @file)")
      ->required();
  c_loc->add_option("--method", loc_method, "closed | oracle | compare")
      ->check(CLI::IsMember({"closed", "oracle", "compare"}));
  c_loc->add_option("--f1", loc_f1,
                    "override the cell function (JSON or @file)");

  // --- orbits ----------------------------------------------------------
  auto* c_orb = app.add_subcommand(
      "orbits", "Census of Lagrangian planes over F_q under the product "
                "SL2 x SL2 x SL2 action");
  long orb_q = 0;
  bool orb_points = false;
  std::string orb_style = "json";
  c_orb->add_option("--q", orb_q, "odd prime power (2 is also accepted)")
      ->required();
  c_orb->add_flag("--xpoints", orb_points,
                  "also decompose the pointed cone over the plane variety");
  c_orb->add_option("--report", orb_style, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  // --- verify ----------------------------------------------------------
  auto* c_ver = app.add_subcommand(
      "verify", "Run the randomized self-verification suites");
  std::vector<std::string> ver_suites;
  long ver_p = 0;
  long long ver_seed = 1;
  int ver_threads = 1;
  std::string ver_style = "json";
  c_ver->add_option("--suite", ver_suites,
                    "suite name (repeatable; default: all)");
  c_ver->add_option("--p", ver_p, "restrict to one prime (3 or 5)");
  c_ver->add_option("--seed", ver_seed, "random seed");
  c_ver->add_option("--threads", ver_threads, "worker threads");
  c_ver->add_option("--report", ver_style, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  if (c_hil->parsed()) {
    int out = 0;
    check_status(ctx.get(),
                 tq_hilbert(ctx.get(), hil_a.c_str(), hil_b.c_str(), hil_p,
                            &out));
    std::cout << out << "\n";
    return 0;
  }

  if (c_chi->parsed()) {
    int out = 0;
    check_status(ctx.get(),
                 tq_chi(ctx.get(), space_arg(chi_space).dump().c_str(),
                        chi_a.c_str(), chi_p, &out));
    std::cout << out << "\n";
    return 0;
  }

  if (c_weil->parsed()) {
    Json req = Json::object();
    req["p"] = weil_p;
    req["depth"] = weil_depth;
    req["space"] = space_arg(weil_space);
    req["g"] = parse_payload(weil_g, "--g");
    if (!weil_fn.empty()) req["function"] = parse_payload(weil_fn, "--function");
    print_json(call_json(ctx.get(), tq_weil_apply, req));
    return 0;
  }

  if (c_plu->parsed()) {
    Json req = Json::object();
    req["g"] = parse_payload(plu_g, "--g");
    if (plu_p != 0) req["p"] = plu_p;
    print_json(call_json(ctx.get(), tq_plucker, req));
    return 0;
  }

  if (c_bas->parsed()) {
    Json req = Json::object();
    req["p"] = bas_p;
    req["g"] = parse_payload(bas_g, "--g");
    print_json(call_json(ctx.get(), tq_basic_b, req));
    return 0;
  }

  if (c_loc->parsed()) {
    Json req = Json::object();
    req["p"] = loc_p;
    req["forms"] = forms_arg(loc_forms);
    req["point"] = point_arg(loc_point);
    req["method"] = loc_method;
    if (!loc_f1.empty()) req["f1"] = parse_payload(loc_f1, "--f1");
    auto t0 = std::chrono::steady_clock::now();
    Json out = call_json(ctx.get(), tq_local_integral, req);
    auto t1 = std::chrono::steady_clock::now();
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count();
    print_json(out);
    if (loc_method == "compare" && !out.at("match").get<bool>()) {
      Json counter = Json::object();
      counter["request"] = std::move(req);
      counter["closed"] = out.at("value");
      counter["oracle"] = out.at("oracle_value");
      std::cerr << "counterexample: " << counter.dump() << "\n";
      return kExitCheckFailed;
    }
    return 0;
  }

  if (c_orb->parsed()) {
    // Optional file cache: the census is deterministic in q, so a cached
    // report is emitted verbatim.
    std::string cache_path;
    if (const char* dir = std::getenv("TRIADIC_CACHE_DIR");
        dir != nullptr && *dir != '\0') {
      cache_path = std::string(dir) + "/orbits-q" + std::to_string(orb_q) +
                   (orb_points ? "-points" : "") + ".json";
      std::ifstream in(cache_path, std::ios::binary);
      if (in) {
        Json cached;
        try {
          in >> cached;
        } catch (const std::exception&) {
          cached = nullptr;  // unreadable cache entry: recompute below
        }
        if (!cached.is_null()) {
          if (orb_style == "table")
            render_orbit_table(cached);
          else
            print_json(cached);
          return 0;
        }
      }
    }
    Json req = Json::object();
    req["q"] = orb_q;
    req["points"] = orb_points;
    Json out = call_json(ctx.get(), tq_orbits, req);
    if (!cache_path.empty()) {
      std::ofstream cache(cache_path, std::ios::binary);
      if (cache) cache << out.dump(2) << "\n";
    }
    if (orb_style == "table")
      render_orbit_table(out);
    else
      print_json(out);
    return 0;
  }

  if (c_ver->parsed()) {
    Json req = Json::object();
    if (!ver_suites.empty()) req["suites"] = ver_suites;
    req["p"] = ver_p;
    req["seed"] = ver_seed;
    req["threads"] = ver_threads;
    return render_verify(call_json(ctx.get(), tq_verify, req), ver_style);
  }

  die("no subcommand selected");
}
