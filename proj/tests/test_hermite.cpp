#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratel/hermite.hpp"
#include "testutil.hpp"

using namespace ratel;
using namespace ratel::hermite;
using tu::bp;
using tu::up;

namespace {

const Method kMethods[] = {Method::Classic, Method::LinearSystem, Method::EvalInterp};

RFunc rf(std::vector<std::vector<long>> num, std::vector<std::vector<long>> den) {
  return RFunc(bp(std::move(num)), bp(std::move(den)));
}

}  // namespace

TEST_CASE("classic raw reduction over Q") {
  // 1/(y^2 (y-1)): g = 1/y, r = 1/(y^2 - y), worked out by partial fractions
  UPoly D = up({0, 0, -1, 1});  // y^3 - y^2
  RawPair<Rat> raw = classic<Rat>(UPoly(Rat(1)), D);
  CHECK(raw.gnum == up({1}));
  CHECK(raw.gden == up({0, 1}));
  CHECK(raw.rnum == up({1}));
  CHECK(raw.rden == up({0, -1, 1}));

  // 1/y^2: pure derivative of -1/y
  RawPair<Rat> raw2 = classic<Rat>(UPoly(Rat(1)), up({0, 0, 1}));
  CHECK(raw2.gnum == up({-1}));
  CHECK(raw2.gden == up({0, 1}));
  CHECK(raw2.rnum.is_zero_poly());

  // squarefree denominator: nothing moves
  RawPair<Rat> raw3 = classic<Rat>(up({0, 1}), up({-1, 0, 1}));
  CHECK(raw3.gnum.is_zero_poly());
  CHECK(raw3.rnum == up({0, 1}));
  CHECK(raw3.rden == up({-1, 0, 1}));

  CHECK_THROWS_AS(classic<Rat>(up({0, 0, 1}), up({0, 1})), InternalError);  // improper
}

TEST_CASE("reduce: frozen examples, all methods agree") {
  RFunc f1 = rf({{1}}, {{0}, {0}, {1}});  // 1/y^2
  RFunc g1 = rf({{-1}}, {{0}, {1}});      // -1/y
  RFunc f2 = rf({{0}, {1}}, {{-1}, {0}, {1}});       // y/(y^2-1)
  RFunc f3 = rf({{1}}, {{0}, {0}, {-1}, {1}});       // 1/(y^2 (y-1))
  RFunc g3 = rf({{1}}, {{0}, {1}});                  // 1/y
  RFunc r3 = rf({{1}}, {{0}, {-1}, {1}});            // 1/(y^2 - y)

  for (Method m : kMethods) {
    CAPTURE(static_cast<int>(m));
    Reduction red1 = reduce(f1, m);
    CHECK(red1.g == g1);
    CHECK(red1.r.is_zero_rf());

    Reduction red2 = reduce(f2, m);
    CHECK(red2.g.is_zero_rf());
    CHECK(red2.r == f2);

    Reduction red3 = reduce(f3, m);
    CHECK(red3.g == g3);
    CHECK(red3.r == r3);
    CHECK(check_reduction(f3, red3));
  }
}

TEST_CASE("reduce with x in the denominator") {
  // 1/(1-xy)^2 = D_y(-1/(x(xy-1))), remainder zero
  BPoly q = bp({{-1}, {0, 1}});  // xy - 1
  RFunc f(bp({{1}}), q * q);
  RFunc gexp(bp({{-1}}), BPoly(up({0, 1})) * q);
  for (Method m : kMethods) {
    CAPTURE(static_cast<int>(m));
    Reduction red = reduce(f, m);
    CHECK(red.g == gexp);
    CHECK(red.r.is_zero_rf());
  }

  // same with an extra x-content in the denominator: 1/(x (1-xy)^2)
  RFunc fc(bp({{1}}), BPoly(up({0, 1})) * q * q);
  RFunc gcexp(bp({{-1}}), BPoly(up({0, 0, 1})) * q);
  for (Method m : kMethods) {
    CAPTURE(static_cast<int>(m));
    Reduction red = reduce(fc, m);
    CHECK(red.g == gcexp);
    CHECK(red.r.is_zero_rf());
  }
}

TEST_CASE("structured output shape") {
  // (1, y^2): A = -1 over qminus = y, a = 0
  StructuredPair st = reduce_structured(bp({{1}}), bp({{0}, {0}, {1}}), Method::LinearSystem);
  CHECK(st.qminus == bp({{0}, {1}}));
  CHECK(st.qstar == bp({{0}, {1}}));
  CHECK(st.A == YPolyX(XFrac(-1)));
  CHECK(st.a.is_zero_poly());

  // (1, y^2 (y-1)): A = 1, a = 1
  StructuredPair st2 =
      reduce_structured(bp({{1}}), bp({{0}, {0}, {-1}, {1}}), Method::EvalInterp);
  CHECK(st2.A == YPolyX(XFrac(1)));
  CHECK(st2.a == YPolyX(XFrac(1)));
  CHECK(st2.qminus == bp({{0}, {1}}));
  CHECK(st2.qstar == bp({{0}, {-1}, {1}}));
}

TEST_CASE("polynomial part folds into g") {
  // (y^3+1)/(y^2-1) = y + 1/(y-1): g = y^2/2, r = 1/(y-1)
  RFunc f = rf({{1}, {0}, {0}, {1}}, {{-1}, {0}, {1}});
  for (Method m : kMethods) {
    Reduction red = reduce(f, m);
    CHECK(red.g == RFunc(Rat(1, 2) * bp({{0}, {0}, {1}}), bp({{1}})));
    CHECK(red.r == rf({{1}}, {{-1}, {1}}));
    CHECK(check_reduction(f, red));
  }
}

TEST_CASE("three-way agreement on random structured inputs") {
  tu::Rng rng(42);
  int done = 0;
  for (int it = 0; done < 25; it++) {
    REQUIRE(it < 200);
    BPoly q1 = rng.bpoly(rng.range(0, 2), rng.range(1, 2), -4, 4);
    BPoly q2 = rng.bpoly(rng.range(0, 2), 1, -4, 4);
    BPoly Q = q1 * q2 * q2;
    if (Q.deg_y() < 2 || gcd_y(q1, q2).deg_y() > 0) continue;
    BPoly P = rng.bpoly(2, Q.deg_y() - 1, -6, 6);
    RFunc f(P, Q);
    if (f.den().deg_y() < Q.deg_y()) continue;  // cancellation spoiled the shape
    done++;

    Reduction a = reduce(f, Method::Classic);
    Reduction b = reduce(f, Method::LinearSystem);
    Reduction c = reduce(f, Method::EvalInterp);
    CHECK(a.g == b.g);
    CHECK(a.r == b.r);
    CHECK(a.g == c.g);
    CHECK(a.r == c.r);
    std::string why;
    bool ok = check_reduction(f, a, &why);
    CAPTURE(why);
    CHECK(ok);
  }
}

TEST_CASE("luckiness") {
  BPoly q_xy = bp({{-1}, {0, 1}});  // xy - 1
  CHECK(!is_lucky(q_xy, Rat(0)));   // leading y-coefficient x vanishes
  CHECK(is_lucky(q_xy, Rat(1)));
  CHECK(count_unlucky_in_range(q_xy, 100) == 1);

  BPoly ysq = bp({{0}, {0}, {1}});  // y^2: every point is lucky
  CHECK(count_unlucky_in_range(ysq, 100) == 0);

  BPoly q3 = bp({{0, -1}, {0}, {1}});  // y^2 - x, squarefree
  CHECK(!is_lucky(q3, Rat(0)));        // double root at x0 = 0
  CHECK(is_lucky(q3, Rat(2)));

  // the unlucky count never exceeds deg_x(Q) * (2 deg_y(Q*) - 1)
  tu::Rng rng(7);
  for (int it = 0; it < 5; it++) {
    BPoly a = rng.bpoly(1, 1, -3, 3);
    BPoly b = rng.bpoly(1, 1, -3, 3);
    BPoly Q = a * b * b;
    SqfDecomp dec = squarefree_decomp_y(Q);
    long bound = static_cast<long>(Q.deg_x()) * (2 * dec.qstar().deg_y() - 1);
    CHECK(count_unlucky_in_range(Q, bound + 10) <= bound);
  }
}

TEST_CASE("check_reduction rejects tampering") {
  RFunc f = rf({{1}}, {{0}, {0}, {-1}, {1}});
  Reduction red = reduce(f, Method::Classic);
  std::string why;
  CHECK(check_reduction(f, red, &why));
  Reduction bad = red;
  bad.g = bad.g + rf({{1}}, {{0}, {1}});
  CHECK(!check_reduction(f, bad, &why));
  CHECK(why == "f != D_y(g) + r");

  // a remainder with a squareful denominator must be rejected
  Reduction bad2;
  bad2.r = f;
  CHECK(!check_reduction(f, bad2, &why));
  CHECK(why == "denominator of r is not squarefree");
}
