#include <doctest.h>

#include <array>
#include <vector>

#include "triadic/errors.hpp"
#include "triadic/schwartz.hpp"

using namespace triadic;

namespace {

QuadraticSpace hyp() {
  return QuadraticSpace{RatMat{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}};
}

Mat2 mat2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Mat2 m;
  m[0][0] = a;
  m[0][1] = b;
  m[1][0] = c;
  m[1][1] = d;
  return m;
}

std::vector<Rat> vec(const Rat& x, const Rat& y) { return {x, y}; }

}  // namespace

TEST_SUITE("schwartz") {

TEST_CASE("lattice indicator evaluates cosets exactly") {
  PAdicContext ctx(3);
  QuadraticSpace V = hyp();
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
  CHECK(ind.dim() == 2);
  CHECK(ind.eval(vec(Rat(0), Rat(0))) == CycValue(Rat(1)));
  CHECK(ind.eval(vec(Rat(1), Rat(-7))) == CycValue(Rat(1)));
  CHECK(ind.eval(vec(Rat(9), Rat(27))) == CycValue(Rat(1)));
  // 5/7 is a 3-adic integer.
  CHECK(ind.eval(vec(Rat(5) / Rat(7), Rat(1))) == CycValue(Rat(1)));
  CHECK(ind.eval(vec(Rat(1) / Rat(3), Rat(0))).is_zero());
  CHECK(ind.eval(vec(Rat(1), Rat(5) / Rat(9))).is_zero());
}

TEST_CASE("refinement and compaction preserve the function") {
  PAdicContext ctx(3);
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, hyp());
  SchwartzFn wide = ind.refined(2, 2);
  CHECK(wide.window_m() == 2);
  CHECK(wide.window_n() == 2);
  CHECK(schwartz_equal(ind, wide));
  SchwartzFn back = wide.compacted();
  CHECK(back.window_m() == 0);
  CHECK(back.window_n() == 0);
  CHECK(schwartz_equal(ind, back));
}

TEST_CASE("shear operator multiplies by the quadratic phase") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    QuadraticSpace V = hyp();
    SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
    const Rat t = Rat(1) / Rat(p);
    SchwartzFn g = weil_n(t, ind);
    for (const auto& v :
         {vec(Rat(1), Rat(1)), vec(Rat(2), Rat(p)), vec(Rat(0), Rat(0)),
          vec(Rat(p), Rat(p))}) {
      CHECK(g.eval(v) == psi(ctx, t * V.q_value(v)) * ind.eval(v));
    }
    // Integral shears fix the lattice indicator.
    CHECK(schwartz_equal(weil_n(Rat(1), ind), ind));
    // Off the support the phase does not resurrect the function.
    CHECK(g.eval(vec(Rat(1) / Rat(p), Rat(0))).is_zero());
  }
}

TEST_CASE("torus operator rescales the argument and the mass") {
  const long p = 5;
  PAdicContext ctx(p);
  QuadraticSpace V = hyp();
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
  // rho(diag(a, 1/a)) f(v) = chi(a) |a|^{d/2} f(a v) with d = 2.
  SchwartzFn g = weil_torus(Rat(p), ind);
  CHECK(g.eval(vec(Rat(1) / Rat(p), Rat(2) / Rat(p))) ==
        CycValue(Rat(1) / Rat(p)));
  CHECK(g.eval(vec(Rat(1), Rat(1))) == CycValue(Rat(1) / Rat(p)));
  CHECK(g.eval(vec(Rat(1) / Rat(p * p), Rat(0))).is_zero());
  // a = 1 is the identity.
  CHECK(schwartz_equal(weil_torus(Rat(1), ind), ind));
  // Composition: t(a) then t(b) equals t(ab).
  SchwartzFn two = weil_torus(Rat(p), weil_torus(Rat(1) / Rat(p), ind));
  CHECK(schwartz_equal(two, ind));
}

TEST_CASE("fourier transform fixes the self-dual lattice") {
  for (long p : {3L, 5L}) {
    PAdicContext ctx(p);
    SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, hyp());
    CHECK(schwartz_equal(fourier(ind), ind));
  }
}

TEST_CASE("double fourier transform is reflection") {
  const long p = 3;
  PAdicContext ctx(p);
  QuadraticSpace V = hyp();
  // An asymmetric function: indicator of the coset (1, 0) + p Z_p^2.
  SchwartzFn f(ctx, V, 0, 1);
  f.set(vec(Rat(1), Rat(0)), CycValue(Rat(1)));
  SchwartzFn ff = fourier(fourier(f));
  CHECK(ff.eval(vec(Rat(-1), Rat(0))) == CycValue(Rat(1)));
  CHECK(ff.eval(vec(Rat(2), Rat(0))) == CycValue(Rat(1)));  // 2 = -1 mod 3
  CHECK(ff.eval(vec(Rat(1), Rat(0))).is_zero());
  CHECK(ff.eval(vec(Rat(0), Rat(0))).is_zero());
}

TEST_CASE("weil_w is the gamma-normalized fourier transform") {
  PAdicContext ctx(3);
  QuadraticSpace V{RatMat{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
  SchwartzFn lhs = weil_w(ind);
  SchwartzFn rhs = schwartz_scale(weil_index(V, ctx), fourier(ind));
  CHECK(schwartz_equal(lhs, rhs));
}

TEST_CASE("weil_apply matches the generator operators") {
  const long p = 3;
  PAdicContext ctx(p);
  QuadraticSpace V = hyp();
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
  const Rat t = Rat(2) / Rat(p);
  CHECK(schwartz_equal(weil_apply(mat2(Rat(1), t, Rat(0), Rat(1)), ind),
                       weil_n(t, ind)));
  CHECK(schwartz_equal(weil_apply(mat2(Rat(0), Rat(1), Rat(-1), Rat(0)), ind),
                       weil_w(ind)));
  const Rat a = Rat(1) / Rat(p);
  CHECK(schwartz_equal(
      weil_apply(mat2(a, Rat(0), Rat(0), Rat(1) / a), ind),
      weil_torus(a, ind)));
  CHECK(schwartz_equal(weil_apply(mat2(Rat(1), Rat(0), Rat(0), Rat(1)), ind),
                       ind));
  CHECK_THROWS_AS(weil_apply(mat2(Rat(2), Rat(0), Rat(0), Rat(1)), ind),
                  Error);  // determinant 2 is not in SL2
}

TEST_CASE("translation acts through the inverse argument") {
  PAdicContext ctx(3);
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, hyp());
  // An integral isometry of the lattice fixes the indicator.
  CHECK(schwartz_equal(translate(mat2(Rat(0), Rat(1), Rat(-1), Rat(0)), ind),
                       ind));
  // h = diag(3, 1) moves the support to 3Z_p x Z_p.
  SchwartzFn g = translate(mat2(Rat(3), Rat(0), Rat(0), Rat(1)), ind);
  CHECK(g.eval(vec(Rat(3), Rat(1))) == CycValue(Rat(1)));
  CHECK(g.eval(vec(Rat(1), Rat(1))).is_zero());
}

TEST_CASE("linear structure and function equality across windows") {
  PAdicContext ctx(3);
  QuadraticSpace V = hyp();
  SchwartzFn ind = SchwartzFn::lattice_indicator(ctx, V);
  SchwartzFn doubled = schwartz_add(ind, ind);
  CHECK(doubled.eval(vec(Rat(0), Rat(0))) == CycValue(Rat(2)));
  CHECK(schwartz_equal(doubled, schwartz_scale(CycValue(Rat(2)), ind)));
  CHECK(!schwartz_equal(doubled, ind));
  // Adding functions on different windows refines automatically.
  SchwartzFn f(ctx, V, 1, 1);
  f.set(vec(Rat(1) / Rat(3), Rat(0)), CycValue(Rat(5)));
  SchwartzFn s = schwartz_add(ind, f);
  CHECK(s.eval(vec(Rat(1) / Rat(3), Rat(0))) == CycValue(Rat(5)));
  CHECK(s.eval(vec(Rat(1), Rat(2))) == CycValue(Rat(1)));
}

TEST_CASE("product functions evaluate slotwise") {
  PAdicContext ctx(3);
  std::vector<QuadraticSpace> spaces = {hyp(), hyp(), hyp()};
  QuadTriple T{spaces};
  ProductFn F = ProductFn::lattice_indicator(ctx, T);
  CHECK(F.eval(vec(Rat(1), Rat(1)), vec(Rat(0), Rat(3)),
               vec(Rat(2), Rat(2))) == CycValue(Rat(1)));
  CHECK(F.eval(vec(Rat(1) / Rat(3), Rat(1)), vec(Rat(0), Rat(0)),
               vec(Rat(0), Rat(0)))
            .is_zero());
  // The triple Weil action of three identities is the identity.
  std::array<Mat2, 3> id3 = {mat2(Rat(1), Rat(0), Rat(0), Rat(1)),
                             mat2(Rat(1), Rat(0), Rat(0), Rat(1)),
                             mat2(Rat(1), Rat(0), Rat(0), Rat(1))};
  ProductFn G = rho_triple(id3, F);
  CHECK(G.eval(vec(Rat(1), Rat(1)), vec(Rat(1), Rat(1)), vec(Rat(1), Rat(1))) ==
        CycValue(Rat(1)));
  // One slot sheared by an integral element still fixes the indicator.
  std::array<Mat2, 3> sheared = id3;
  sheared[0] = mat2(Rat(1), Rat(1), Rat(0), Rat(1));
  ProductFn H = rho_triple(sheared, F);
  CHECK(H.eval(vec(Rat(2), Rat(5)), vec(Rat(0), Rat(0)), vec(Rat(1), Rat(0))) ==
        CycValue(Rat(1)));
}

}  // TEST_SUITE
