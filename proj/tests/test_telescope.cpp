#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratel/ht.hpp"
#include "testutil.hpp"

using namespace ratel;
using tu::bp;
using tu::up;

namespace {

// the Cramer-style degree bound for the primitive minimal telescoper of the
// content-free proper part of f, plus the x-content degree picked up by the
// final conjugation
long telescoper_degree_bound(const RFunc& f, int rho, long* qx_deg = nullptr) {
  ProperSplit sp = make_proper(f);
  HForm hf = split_x_content(sp.proper);
  SqfDecomp dec = squarefree_decomp_y(hf.Q);
  UPoly tstar_content;
  BPoly tstar;
  content_primitive_x(dec.qstar(), tstar_content, tstar);
  long dx = std::max(0, std::max(hf.P.deg_x(), hf.Q.deg_x()));
  long nx = dx + static_cast<long>(rho) * std::max(0, tstar.deg_x()) - rho;
  long beta = std::max(0, dec.qminus().deg_y()) +
              static_cast<long>(rho) * std::max(0, tstar.deg_y());
  if (qx_deg) *qx_deg = hf.qx.degree();
  return std::max(nx, 0L) * (rho + 1) + dx * (beta + 1);
}

}  // namespace

TEST_CASE("exact derivative input: 1/y^2") {
  RFunc f(BPoly(Rat(1)), bp({{}, {}, {1}}));
  ht::TelescoperResult res = ht::hermite_telescoping(f);
  CHECK(res.L == DiffOp::identity());
  CHECK(res.order == 0);
  CHECK(res.rho0 == 0);
  CHECK(res.dy_star == 1);
  RFunc g = ht::normalize_certificate(res.certificate);
  CHECK(g == RFunc(BPoly(Rat(-1)), bp({{}, {1}})));  // -1/y
  CHECK(ht::verify_telescoper(f, res.L, g));
  CHECK(ht::lower_order_bound(f) == 0);
}

TEST_CASE("telescoper of 1/(1-xy)") {
  RFunc f(BPoly(Rat(1)), bp({{1}, {0, -1}}));
  ht::TelescoperResult res = ht::hermite_telescoping(f);
  CHECK(res.L == DiffOp({up({1}), up({0, 1})}));  // x*Dx + 1
  CHECK(res.order == 1);
  CHECK(res.rho0 == 1);
  CHECK(res.dy_star == 1);
  RFunc g = ht::normalize_certificate(res.certificate);
  RFunc expected(BPoly(Rat(1)), BPoly::xvar() * bp({{1}, {0, -1}}));  // 1/(x(1-xy))
  CHECK(g == expected);
  CHECK(ht::verify_telescoper(f, res.L, g));
  CHECK_FALSE(ht::verify_telescoper(f, res.L, -g));
  CHECK(ht::lower_order_bound(f) == 1);

  // frozen certificate term schedule: the single term x * (-1/(x^2(xy-1)))
  REQUIRE(res.certificate.terms.size() == 1);
  CHECK(res.certificate.terms[0].coeff == XFrac(up({0, 1})));
  RFunc body(BPoly(Rat(-1)), BPoly::xvar() * BPoly::xvar() * bp({{-1}, {0, 1}}));
  CHECK(res.certificate.terms[0].body == body);
}

TEST_CASE("telescoper of 1/(x-y)") {
  RFunc f(BPoly(Rat(1)), bp({{0, 1}, {-1}}));  // 1/(x-y)
  ht::TelescoperResult res = ht::hermite_telescoping(f);
  CHECK(res.L == DiffOp::dx());
  CHECK(res.order == 1);
  RFunc g = ht::normalize_certificate(res.certificate);
  CHECK(g == RFunc(BPoly(Rat(1)), bp({{0, -1}, {1}})));  // -1/(x-y) = 1/(y-x)
  CHECK(ht::verify_telescoper(f, res.L, g));
  RFunc wrong(BPoly(Rat(1)), bp({{0, 1}, {-1}}));  // +1/(x-y): wrong sign
  CHECK_FALSE(ht::verify_telescoper(f, res.L, wrong));
}

TEST_CASE("denominator x-content conjugates into the operator") {
  // 1/(x(1-xy)): inner part matches 1/(1-xy), then L picks up the x factor
  RFunc f(BPoly(Rat(1)), BPoly::xvar() * bp({{1}, {0, -1}}));
  ht::TelescoperResult res = ht::hermite_telescoping(f);
  CHECK(res.L == DiffOp({up({2}), up({0, 1})}));  // x*Dx + 2
  CHECK(res.order == 1);
  RFunc g = ht::normalize_certificate(res.certificate);
  RFunc expected(BPoly(Rat(-1)), BPoly::xvar() * BPoly::xvar() * bp({{-1}, {0, 1}}));
  CHECK(g == expected);  // -1/(x^2(xy-1))
  CHECK(ht::verify_telescoper(f, res.L, g));

  RFunc f2(BPoly(Rat(1)), BPoly::xvar() * BPoly::xvar() * bp({{1}, {0, -1}}));
  ht::TelescoperResult res2 = ht::hermite_telescoping(f2);
  CHECK(res2.L == DiffOp({up({3}), up({0, 1})}));  // x*Dx + 3
  CHECK(ht::verify_telescoper(f2, res2.L, ht::normalize_certificate(res2.certificate)));
}

TEST_CASE("polynomial and y-free inputs") {
  RFunc fy(bp({{}, {1}}));  // y
  ht::TelescoperResult ry = ht::hermite_telescoping(fy);
  CHECK(ry.L == DiffOp::identity());
  CHECK(ht::normalize_certificate(ry.certificate) == Rat(1, 2) * RFunc(bp({{}, {}, {1}})));

  RFunc fx(BPoly(Rat(1)), BPoly::xvar());  // 1/x
  ht::TelescoperResult rx = ht::hermite_telescoping(fx);
  CHECK(rx.L == DiffOp::identity());
  CHECK(ht::normalize_certificate(rx.certificate) == RFunc(bp({{}, {1}}), BPoly::xvar()));

  RFunc fm(bp({{0, 0, 1}, {}}) + bp({{}, {0, 0, 1}}));  // x^2 y + x... built as x^2*y + x
  fm = RFunc(bp({{0, 1}, {0, 0, 1}}));                  // x + x^2 y
  ht::TelescoperResult rm = ht::hermite_telescoping(fm);
  CHECK(rm.L == DiffOp::identity());
  // antiderivative x*y + x^2 y^2/2
  RFunc gm = ht::normalize_certificate(rm.certificate);
  CHECK(gm == RFunc(bp({{}, {0, 1}})) + Rat(1, 2) * RFunc(bp({{}, {}, {0, 0, 1}})));

  RFunc f1y(BPoly(Rat(1)), bp({{}, {1}}));  // 1/y: minimal telescoper Dx, g = 0
  ht::TelescoperResult r1y = ht::hermite_telescoping(f1y);
  CHECK(r1y.L == DiffOp::dx());
  CHECK(r1y.certificate.terms.empty());
  CHECK(ht::normalize_certificate(r1y.certificate).is_zero_rf());
  CHECK(ht::verify_telescoper(f1y, r1y.L, RFunc()));
  CHECK(ht::lower_order_bound(f1y) == 1);
}

TEST_CASE("zero input is rejected") {
  CHECK_THROWS_AS(ht::hermite_telescoping(RFunc()), InputError);
  CHECK_THROWS_AS(ht::lower_order_bound(RFunc()), InputError);
}

TEST_CASE("normalize_certificate sums exactly") {
  RFunc oy(BPoly(Rat(1)), bp({{}, {1}}));  // 1/y
  ht::CertificateSum c;
  c.terms.push_back(ht::CertTerm{XFrac(Rat(1)), oy});
  c.terms.push_back(ht::CertTerm{XFrac(Rat(1)), -oy});
  CHECK(ht::normalize_certificate(c).is_zero_rf());

  ht::CertificateSum single;
  single.terms.push_back(ht::CertTerm{XFrac(up({0, 1})), oy});
  CHECK(ht::normalize_certificate(single) == RFunc(bp({{0, 1}}), bp({{}, {1}})));  // x/y
}

TEST_CASE("random corpus in content-free form: invariants and degree bounds") {
  tu::Rng rng(0x7e1e5c01ULL ^ 0x9e3779b97f4a7c15ULL);
  int done = 0;
  for (uint64_t trial = 0; done < 6; trial++) {
    REQUIRE(trial < 60);
    // monic-in-y factors keep the denominator primitive w.r.t. x
    BPoly q1(std::vector<UPoly>{rng.poly(1, -4, 4), UPoly(Rat(1))});
    BPoly q2(std::vector<UPoly>{rng.poly(1, -4, 4), UPoly(Rat(1))});
    if (q1 == q2) continue;
    BPoly den = q1 * q2 * q2;
    BPoly num = rng.bpoly(1, 2, -4, 4);
    RFunc f(num, den);
    if (f.den().deg_y() < 3) continue;  // a factor cancelled; resample
    done++;

    ht::Options opt;
    opt.check_loop_invariant = true;
    ht::TelescoperResult res = ht::hermite_telescoping(f, opt);
    RFunc g = ht::normalize_certificate(res.certificate);
    CHECK(ht::verify_telescoper(f, res.L, g));
    CHECK(res.rho0 >= 0);
    CHECK(res.rho0 <= res.order);
    CHECK(res.order <= res.dy_star);

    long qx_deg = 0;
    long bound = telescoper_degree_bound(f, res.order, &qx_deg);
    CHECK(qx_deg == 0);
    CHECK(res.L.deg_x() <= bound);
    CHECK(std::max(g.num().deg_x(), g.den().deg_x()) <= bound);
  }
}

TEST_CASE("random corpus with x-content: determinism and method agreement") {
  tu::Rng rng(0x7e1e5c02ULL ^ 0xbf58476d1ce4e5b9ULL);
  int done = 0;
  for (uint64_t trial = 0; done < 6; trial++) {
    REQUIRE(trial < 60);
    BPoly q1 = rng.bpoly(1, 1, -4, 4);
    BPoly q2 = rng.bpoly(1, 1, -4, 4);
    UPoly qx = rng.poly(1, -3, 3);
    BPoly den = BPoly(qx) * q1 * q2 * q2;
    if (den.deg_y() < 3) continue;
    BPoly num = rng.bpoly(1, 2, -4, 4);
    RFunc f(num, den);
    if (f.is_zero_rf() || f.den().deg_y() < 1) continue;
    done++;

    ht::TelescoperResult res = ht::hermite_telescoping(f);
    RFunc g = ht::normalize_certificate(res.certificate);
    CHECK(ht::verify_telescoper(f, res.L, g));
    CHECK(res.order <= res.dy_star);
    if (res.rho0 >= 0) CHECK(res.rho0 <= res.order);

    long qx_deg = 0;
    long bound = telescoper_degree_bound(f, res.order, &qx_deg);
    CHECK(res.L.deg_x() <= bound + qx_deg);

    // the order-bound flag changes no output, only the rho0 report
    ht::Options noopt;
    noopt.use_order_bound = false;
    ht::TelescoperResult res2 = ht::hermite_telescoping(f, noopt);
    CHECK(res2.rho0 == -1);
    CHECK(res2.L == res.L);
    REQUIRE(res2.certificate.terms.size() == res.certificate.terms.size());
    for (size_t t = 0; t < res.certificate.terms.size(); t++) {
      CHECK(res2.certificate.terms[t].coeff == res.certificate.terms[t].coeff);
      CHECK(res2.certificate.terms[t].body == res.certificate.terms[t].body);
    }

    // reductions are unique, so the step method cannot change any output
    for (hermite::Method m : {hermite::Method::Classic, hermite::Method::LinearSystem}) {
      ht::Options alt;
      alt.step_method = m;
      ht::TelescoperResult resm = ht::hermite_telescoping(f, alt);
      CHECK(resm.L == res.L);
      CHECK(ht::normalize_certificate(resm.certificate) == g);
    }
  }
}
