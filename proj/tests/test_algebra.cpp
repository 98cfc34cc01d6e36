#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratel/interp.hpp"
#include "testutil.hpp"

using namespace ratel;
using tu::bp;
using tu::up;

TEST_CASE("upoly divrem and arithmetic") {
  tu::Rng rng(1);
  for (int it = 0; it < 50; it++) {
    UPoly a = rng.poly(rng.range(0, 8));
    UPoly b = rng.poly(rng.range(0, 5));
    UPoly q, r;
    UPoly::divrem(a, b, q, r);
    CHECK(a == q * b + r);
    CHECK((r.is_zero_poly() || r.degree() < b.degree()));
  }
  CHECK(up({1, 2}).derivative() == up({2}));
  CHECK(UPoly().degree() == kNegInfDeg);
  CHECK(kNegInfDeg != -1);
  CHECK(kNegInfDeg + kNegInfDeg < kNegInfDeg);  // sentinel survives additions
}

TEST_CASE("modular gcd agrees with monic euclid") {
  tu::Rng rng(2);
  for (int it = 0; it < 60; it++) {
    UPoly g = rng.poly(rng.range(0, 4));
    UPoly a = rng.poly(rng.range(0, 4));
    UPoly b = rng.poly(rng.range(0, 4));
    UPoly ga = g * a, gb = g * b;
    UPoly fast = upoly_gcd(ga, gb);
    UPoly slow = gcd_monic(ga, gb);
    // same polynomial up to normalization
    CHECK(upoly_primitive(slow) == fast);
    CHECK((ga / fast) * fast == ga);
    CHECK((gb / fast) * fast == gb);
  }
  // huge-coefficient smoke: gcd of c*(x+10^40) and c*(x-1)*(x+10^40)
  Rat big = rat_from_string("10000000000000000000000000000000000000000");
  UPoly f1(std::vector<Rat>{big, Rat(1)});
  UPoly f2 = f1 * up({-1, 1});
  CHECK(upoly_gcd(f1 * UPoly(Rat(7)), f2) == f1);
}

TEST_CASE("xgcd and diophantine solves") {
  tu::Rng rng(3);
  for (int it = 0; it < 40; it++) {
    UPoly a = rng.poly(rng.range(1, 5));
    UPoly b = rng.poly(rng.range(1, 5));
    UPoly g, s, t;
    xgcd(a, b, g, s, t);
    CHECK(s * a + t * b == g);
    if (g.degree() == 0) {
      UPoly c = rng.poly(rng.range(0, 6));
      UPoly x, y;
      solve_diophantine(a, b, c, x, y);
      CHECK(x * a + y * b == c);
      CHECK((x.is_zero_poly() || x.degree() < b.degree()));
    }
  }
}

TEST_CASE("newton interpolation reconstructs polynomials") {
  tu::Rng rng(4);
  for (int it = 0; it < 25; it++) {
    UPoly f = rng.poly(rng.range(0, 7), -50, 50);
    std::vector<Rat> xs, vs;
    for (int i = 0; i <= f.degree(); i++) {
      xs.push_back(Rat(i));
      vs.push_back(f.eval(Rat(i)));
    }
    CHECK(newton_interpolate(xs, vs) == f);
  }
}

TEST_CASE("cauchy rational interpolation") {
  tu::Rng rng(5);
  for (int it = 0; it < 25; it++) {
    UPoly num = rng.poly(rng.range(0, 3));
    UPoly den = rng.poly(rng.range(0, 3));
    int nb = num.degree(), db = den.degree();
    std::vector<Rat> xs, vs;
    for (long x = 0; static_cast<int>(xs.size()) < nb + db + 3; x++) {
      Rat dv = den.eval(Rat(x));
      if (sgn(dv) == 0) continue;
      xs.push_back(Rat(x));
      vs.push_back(num.eval(Rat(x)) / dv);
    }
    auto rec = algebra::rational_interpolate(xs, vs, nb, db);
    REQUIRE(rec.has_value());
    CHECK(*rec == XFrac(num, den));
  }

  // thin bounds reject: values of 1/x are not a polynomial of degree <= 1
  std::vector<Rat> xs{Rat(1), Rat(2), Rat(3), Rat(4)};
  std::vector<Rat> vs{Rat(1), Rat(1, 2), Rat(1, 3), Rat(1, 4)};
  CHECK(!algebra::rational_interpolate(xs, vs, 1, 0).has_value());
  CHECK(algebra::rational_interpolate(xs, vs, 0, 1).has_value());
  CHECK_THROWS_AS(algebra::rational_interpolate(xs, vs, 2, 2), InputError);  // too few points
}

TEST_CASE("xfrac canonical form") {
  XFrac a(up({0, 2, 2}), up({0, 4}));  // (2x^2+2x)/(4x) = (x+1)/2
  CHECK(a.is_poly());
  CHECK(a.num() == Rat(1, 2) * up({1, 1}));
  CHECK(a.den() == up({1}));
  XFrac b(up({1}), up({-2, 0, 2}));  // 1/(2x^2-2)
  CHECK(b.den() == up({-1, 0, 1}));
  CHECK(b.num() == UPoly(Rat(1, 2)));
  CHECK(a + b == b + a);
  CHECK(a * b / b == a);
  XFrac c = XFrac(up({0, 1})).derivative();
  CHECK(c == XFrac(1));
}

TEST_CASE("bpoly arithmetic and exact division") {
  tu::Rng rng(6);
  for (int it = 0; it < 30; it++) {
    BPoly a = rng.bpoly(rng.range(0, 3), rng.range(0, 3));
    BPoly b = rng.bpoly(rng.range(0, 3), rng.range(0, 3));
    CHECK(bpoly_divexact(a * b, b) == a);
    CHECK((a * b).swap_xy() == a.swap_xy() * b.swap_xy());
    CHECK((a * b).derivative_y() == a.derivative_y() * b + a * b.derivative_y());
    CHECK((a * b).derivative_x() == a.derivative_x() * b + a * b.derivative_x());
    CHECK((a * b).eval_x(Rat(5)) == a.eval_x(Rat(5)) * b.eval_x(Rat(5)));
  }
  CHECK_THROWS_AS(bpoly_divexact(bp({{1}, {1}}), bp({{0, 1}})), InternalError);
}

TEST_CASE("content and primitive part") {
  // q = (y^2+1)*(x*y+1): content w.r.t. x is y^2+1
  BPoly t = bp({{1}, {0}, {1}});           // y^2 + 1
  BPoly T = bp({{1}, {0, 1}});             // x*y + 1
  UPoly ty;
  BPoly Tp;
  content_primitive_x(t * T, ty, Tp);
  CHECK(ty == up({1, 0, 1}));  // content lives in Q[y] (encoded as a upoly)
  CHECK(Tp == T);

  BPoly f = bp({{0, 2}, {0, 0, 4}});  // 2x + 4x^2 y
  CHECK(content_y(f) == up({0, 2}));
  CHECK(primitive_part_y(f) == bp({{1}, {0, 2}}));
}

TEST_CASE("bivariate gcd") {
  tu::Rng rng(7);
  for (int it = 0; it < 20; it++) {
    BPoly g = rng.bpoly(1, 1, -5, 5);
    BPoly a = rng.bpoly(2, 2, -5, 5);
    BPoly b = rng.bpoly(2, 2, -5, 5);
    if (!gcd_y(a, b).is_one()) continue;  // want coprime cofactors
    BPoly got = gcd_y(g * a, g * b);
    CHECK(got == bpoly_int_primitive(g).first);
  }
  CHECK(gcd_y(bp({{0, 1}}), bp({{0, 2}, {0, 4}})) == bp({{0, 1}}));
  CHECK(gcd_y(BPoly(), bp({{0, -2}})) == bp({{0, 1}}));  // gcd(0, -2x) normalized
}

TEST_CASE("squarefree decomposition in y") {
  // y^2 (y - 1): content 1, Q1 = y-1, Q2 = y
  BPoly q = bp({{0}, {0}, {-1}, {1}});
  SqfDecomp d = squarefree_decomp_y(q);
  CHECK(d.content_x == up({1}));
  REQUIRE(d.m() == 2);
  CHECK(d.parts[0] == bp({{-1}, {1}}));
  CHECK(d.parts[1] == bp({{0}, {1}}));
  CHECK(d.qstar() == bp({{0}, {-1}, {1}}));  // y^2 - y
  CHECK(d.qminus() == bp({{0}, {1}}));
  auto defl = d.deflation_quotients();
  CHECK(defl[0] == bp({{0}, {1}}));
  CHECK(defl[1] == bp({{-1}, {1}}));

  // structured random: q = x * (y^2 - x) * (y + x)^2, content x
  BPoly q1 = bp({{0, -1}, {0}, {1}});
  BPoly q2 = bp({{0, 1}, {1}});
  BPoly big = BPoly(up({0, 1})) * q1 * q2 * q2;
  SqfDecomp e = squarefree_decomp_y(big);
  CHECK(e.content_x == up({0, 1}));
  REQUIRE(e.m() == 2);
  CHECK(e.parts[0] == q1);
  CHECK(e.parts[1] == q2);

  // Fact-3 style identity: Q* D_y(Q-) / Q- == sum (i-1) Qhat_i D_y(Q_i)
  BPoly lhs = bpoly_divexact(e.qstar() * e.qminus().derivative_y(), e.qminus());
  BPoly rhs;
  auto hats = e.deflation_quotients();
  for (int i = 0; i < e.m(); i++) rhs += Rat(i) * (hats[i] * e.parts[i].derivative_y());
  CHECK(lhs == rhs);

  CHECK_THROWS_AS(squarefree_decomp_y(bp({{1, 2}})), InputError);
}

TEST_CASE("rfunc canonical form and calculus") {
  RFunc f(bp({{1}}), bp({{0, 1}, {0, 0, -1}}));  // 1/(xy... ) den = x*y... here den = x - x^2 y
  // canonical denominator must have positive leading sign
  CHECK(sgn(f.den().lc_y().lc()) > 0);
  RFunc one_over_xy(bp({{1}}), BPoly(up({0, 1})) * BPoly::yvar());
  CHECK(one_over_xy.den() == bp({{0}, {0, 1}}));  // x*y stays in the denominator

  RFunc g(bp({{0, 2}, {2}}), bp({{4}}));  // (2x + 2y)/4 = (x + y)/2
  CHECK(g.is_poly());
  CHECK(g.num() == Rat(1, 2) * bp({{0, 1}, {1}}));
  CHECK(g.den() == bp({{1}}));
  CHECK(Rat(2) * g == g + g);

  RFunc inv_y(bp({{1}}), BPoly::yvar());
  CHECK(inv_y.derivative_y() == -RFunc(bp({{1}}), BPoly::yvar() * BPoly::yvar()));
  CHECK(inv_y.derivative_x().is_zero_rf());

  tu::Rng rng(8);
  for (int it = 0; it < 15; it++) {
    RFunc a(rng.bpoly(2, 2), rng.bpoly(1, 1));
    RFunc b(rng.bpoly(1, 2), rng.bpoly(2, 1));
    CHECK((a + b) - b == a);
    CHECK((a * b).derivative_x() == a.derivative_x() * b + a * b.derivative_x());
    CHECK((a * b).derivative_y() == a.derivative_y() * b + a * b.derivative_y());
  }
}

TEST_CASE("make_proper splits polynomial part") {
  // (y^3+1)/(y^2-1) = y + 1/(y-1)
  RFunc f(bp({{1}, {0}, {0}, {1}}), bp({{-1}, {0}, {1}}));
  ProperSplit s = make_proper(f);
  CHECK(s.poly == YPolyX(std::vector<XFrac>{XFrac(0), XFrac(1)}));
  CHECK(s.proper == RFunc(bp({{1}}), bp({{-1}, {1}})));
  // identity f = poly + proper over a common denominator
  BPoly pn;
  UPoly pd;
  bpoly_from_ypolyx(s.poly, pn, pd);
  CHECK(rfunc_cross_equal(pn * s.proper.den() + s.proper.num() * BPoly(pd),
                          BPoly(pd) * s.proper.den(), f.num(), f.den()));

  RFunc g(bp({{0, 1}, {2}}), bp({{0, 2}}));  // (x + 2y)/(2x)
  ProperSplit t = make_proper(g);
  CHECK(t.proper.is_zero_rf());
  CHECK(t.poly == YPolyX(std::vector<XFrac>{XFrac(Rat(1, 2)), XFrac(up({1}), up({0, 1}))}));
}

TEST_CASE("split_x_content isolates the k[x] denominator content") {
  RFunc f(bp({{1}}), BPoly(up({0, 1})) * bp({{1}, {0, -1}}));  // 1/(x(1-xy))
  HForm h = split_x_content(f);
  CHECK(h.qx == up({0, 1}));
  CHECK(h.Q == bp({{-1}, {0, 1}}));  // sign-normalized xy - 1
  CHECK(h.P == bp({{-1}}));          // the sign flip lives in the numerator
}

TEST_CASE("cross multiplication equality") {
  CHECK(rfunc_cross_equal(bp({{1}}), bp({{0, 2}}), bp({{2}}), bp({{0, 4}})));
  CHECK(!rfunc_cross_equal(bp({{1}}), bp({{0, 2}}), bp({{1}}), bp({{0, 4}})));
}
