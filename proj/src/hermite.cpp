#include "ratel/hermite.hpp"

#include <algorithm>
#include <optional>

#include "ratel/interp.hpp"
#include "ratel/linalg.hpp"

namespace ratel {
namespace hermite {

template <class K>
RawPair<K> classic(const Poly<K>& A0, const Poly<K>& D) {
  using PK = Poly<K>;
  RATEL_CHECK(D.degree() >= 1, "hermite classic: denominator must be nonconstant");
  RATEL_CHECK(A0.degree() < D.degree(), "hermite classic: input must be proper");
  RawPair<K> out;
  PK Dm = gcd_monic(D, D.derivative());
  PK Ds = D / Dm;
  const PK Dm0 = Dm;
  PK A = A0;
  PK gnum;  // accumulated over the fixed denominator Dm0
  while (Dm.degree() > 0) {
    deadline_check();
    PK Dm2 = gcd_monic(Dm, Dm.derivative());
    PK Dms = Dm / Dm2;                   // squarefree part of Dm, monic
    PK S = (Ds * Dm.derivative()) / Dm;  // polynomial by the deflation identity
    PK B, C;
    solve_diophantine(-S, Dms, A, B, C);  // B*(-S) + C*Dms = A, deg B < deg Dms
    gnum += B * (Dm0 / Dm);
    A = C - B.derivative() * (Ds / Dms);
    Dm = Dm2;
  }
  out.gnum = std::move(gnum);
  out.gden = Dm0;
  out.rnum = std::move(A);
  out.rden = std::move(Ds);
  RATEL_CHECK(out.rnum.degree() < out.rden.degree(), "hermite classic: remainder must be proper");
  RATEL_CHECK(out.gnum.degree() < out.gden.degree(), "hermite classic: g must be proper");
  return out;
}
template RawPair<Rat> classic<Rat>(const Poly<Rat>&, const Poly<Rat>&);
template RawPair<XFrac> classic<XFrac>(const Poly<XFrac>&, const Poly<XFrac>&);

namespace {

// g = A/Q⁻ read off from the classic output: A = lc_y(Q⁻) * gnum since the
// monic gcd tower denominator equals Q⁻ up to its leading y-coefficient
std::pair<YPolyX, YPolyX> solve_classic(const BPoly& P, const BPoly& Qm, const BPoly& Q) {
  RawPair<XFrac> raw = classic<XFrac>(ypolyx_from_bpoly(P), ypolyx_from_bpoly(Q));
  XFrac c{Qm.lc_y()};
  RATEL_CHECK(c * raw.gden == ypolyx_from_bpoly(Qm),
              "hermite classic: gcd tower disagrees with the squarefree decomposition");
  YPolyX A = c * raw.gnum;
  YPolyX a = (XFrac(1) / c) * raw.rnum;
  return {std::move(A), std::move(a)};
}

// linear system P = Q* D_y(A) - W A + Q⁻ a with W = Q* D_y(Q⁻)/Q⁻,
// solved exactly over k(x) via a fraction-free kernel of the augmented matrix
std::pair<YPolyX, YPolyX> solve_linear(const BPoly& P, const BPoly& Qm, const BPoly& Qs) {
  const int dym = Qm.deg_y(), dys = Qs.deg_y(), dy = dym + dys;
  BPoly W = bpoly_divexact(Qs * Qm.derivative_y(), Qm);
  linalg::PMatrix M(dy, dy + 1);
  for (int k = 0; k < dym; k++) {
    BPoly col = -W.shifted_up_y(k);
    if (k > 0) col += Rat(k) * Qs.shifted_up_y(k - 1);
    for (int j = 0; j < dy; j++) M.at(j, k) = col.coeff_y(j);
  }
  for (int k = 0; k < dys; k++) {
    BPoly col = Qm.shifted_up_y(k);
    for (int j = 0; j < dy; j++) M.at(j, dym + k) = col.coeff_y(j);
  }
  for (int j = 0; j < dy; j++) M.at(j, dy) = -P.coeff_y(j);

  auto ker = linalg::nullspace(M);
  RATEL_CHECK(ker.size() == 1, "hermite linear system: kernel must be one-dimensional");
  const std::vector<UPoly>& v = ker[0];
  const UPoly& w = v[dy];
  RATEL_CHECK(!w.is_zero_poly(), "hermite linear system: degenerate kernel");
  std::vector<XFrac> Ac(dym), ac(dys);
  for (int k = 0; k < dym; k++) Ac[k] = XFrac(v[k], w);
  for (int k = 0; k < dys; k++) ac[k] = XFrac(v[dym + k], w);
  return {YPolyX(std::move(Ac)), YPolyX(std::move(ac))};
}

// evaluation at the smallest lucky integers, one cheap reduction over Q per
// point, then per-coefficient rational interpolation within proven bounds
std::pair<YPolyX, YPolyX> solve_interp(const BPoly& P, const BPoly& Qm, const BPoly& Qs,
                                       const BPoly& Q) {
  const int dym = Qm.deg_y(), dys = Qs.deg_y();
  const int dxm = std::max(Qm.deg_x(), 0), dxs = std::max(Qs.deg_x(), 0);
  const int dxp = std::max(P.deg_x(), 0);
  const long mu = static_cast<long>(dxs) * dym + static_cast<long>(dxm) * dys;
  const long lambda = 2 * mu + dxp - std::min(dxm, dxs);
  const size_t npts = static_cast<size_t>(lambda) + 1;
  const long unlucky_cap = static_cast<long>(Q.deg_x()) * (2L * dys - 1);

  std::vector<Rat> xs;
  xs.reserve(npts);
  std::vector<std::vector<Rat>> Avals(dym), avals(dys);
  for (auto& v : Avals) v.reserve(npts);
  for (auto& v : avals) v.reserve(npts);

  for (long i = 0; xs.size() < npts; i++) {
    RATEL_CHECK(i <= lambda + unlucky_cap + 1, "hermite interp: lucky point scan overran bound");
    deadline_check();
    Rat x0(static_cast<long>(i));
    if (sgn(Q.lc_y().eval(x0)) == 0) continue;
    UPoly Dq = Q.eval_x(x0);
    if (gcd_monic(Dq, Dq.derivative()).degree() != dym) continue;

    UPoly Qm0 = Qm.eval_x(x0);
    RATEL_CHECK(Qm0.degree() == dym, "hermite interp: multiple part degenerates at a lucky point");
    const Rat c = Qm0.lc();
    RawPair<Rat> raw = classic<Rat>(P.eval_x(x0), Dq);
    xs.push_back(x0);
    for (int j = 0; j < dym; j++) Avals[j].push_back(c * raw.gnum[j]);
    for (int j = 0; j < dys; j++) avals[j].push_back(raw.rnum[j] / c);
  }

  const int nbA = static_cast<int>(mu - dxs + dxp), nba = static_cast<int>(mu - dxm + dxp);
  const int db = static_cast<int>(mu);
  std::vector<XFrac> Ac(dym), ac(dys);
  for (int j = 0; j < dym; j++) {
    auto r = algebra::rational_interpolate(xs, Avals[j], nbA, db);
    RATEL_CHECK(r.has_value(), "hermite interp: coefficient of A not recoverable within bounds");
    Ac[j] = *r;
  }
  for (int j = 0; j < dys; j++) {
    auto r = algebra::rational_interpolate(xs, avals[j], nba, db);
    RATEL_CHECK(r.has_value(), "hermite interp: coefficient of a not recoverable within bounds");
    ac[j] = *r;
  }
  return {YPolyX(std::move(Ac)), YPolyX(std::move(ac))};
}

// cross-multiplied identity check, no gcd anywhere:
// P/(Qm Qs) == D_y(An/(dA Qm)) + an/(da Qs)
void verify_structured(const BPoly& P, const StructuredPair& st) {
  BPoly An, an;
  UPoly dA, da;
  bpoly_from_ypolyx(st.A, An, dA);
  bpoly_from_ypolyx(st.a, an, da);
  const BPoly& Qm = st.qminus;
  BPoly lhs = (dA * da) * (P * Qm);
  BPoly rhs = da * ((An.derivative_y() * Qm - An * Qm.derivative_y()) * st.qstar) +
              dA * (an * (Qm * Qm));
  RATEL_CHECK(lhs == rhs, "hermite reduction identity failed");
  RATEL_CHECK(st.A.degree() < Qm.deg_y() || st.A.is_zero_poly(),
              "hermite reduction: A breaks the properness bound");
  RATEL_CHECK(st.a.degree() < st.qstar.deg_y() || st.a.is_zero_poly(),
              "hermite reduction: a breaks the properness bound");
}

RFunc rfunc_quotient(const YPolyX& A, const BPoly& den) {
  BPoly num;
  UPoly d;
  bpoly_from_ypolyx(A, num, d);
  return RFunc(num, BPoly(d) * den);
}

}  // namespace

StructuredPair reduce_structured(const BPoly& P, const BPoly& Q, Method method) {
  RATEL_CHECK(!Q.is_zero_b(), "hermite: zero denominator");
  RATEL_CHECK(P.deg_y() < Q.deg_y(), "hermite: input must be proper in y");
  StructuredPair st;
  if (Q.deg_y() == 0) {  // proper forces P == 0
    st.qminus = Q;
    st.qstar = BPoly(Rat(1));
    return st;
  }
  SqfDecomp dec = squarefree_decomp_y(Q);
  return reduce_with_parts(P, dec.qminus(), dec.qstar(), method);
}

StructuredPair reduce_with_parts(const BPoly& P, const BPoly& qminus, const BPoly& qstar,
                                 Method method) {
  RATEL_CHECK(!qminus.is_zero_b() && !qstar.is_zero_b(), "hermite: zero denominator");
  RATEL_CHECK(P.deg_y() < qminus.deg_y() + qstar.deg_y(), "hermite: input must be proper in y");
  StructuredPair st;
  st.qminus = qminus;
  st.qstar = qstar;
  if (st.qminus.deg_y() == 0) {
    // squarefree denominator: nothing to integrate, a = P / qminus over k(x)
    XFrac inv(UPoly(Rat(1)), st.qminus.coeff_y(0));
    st.a = inv * ypolyx_from_bpoly(P);
  } else {
    std::pair<YPolyX, YPolyX> Aa;
    switch (method) {
      case Method::Classic:
        Aa = solve_classic(P, st.qminus, qminus * qstar);
        break;
      case Method::LinearSystem:
        Aa = solve_linear(P, st.qminus, st.qstar);
        break;
      case Method::EvalInterp:
        Aa = solve_interp(P, st.qminus, st.qstar, qminus * qstar);
        break;
    }
    st.A = std::move(Aa.first);
    st.a = std::move(Aa.second);
  }
  verify_structured(P, st);
  return st;
}

Reduction reduce(const RFunc& f, Method method) {
  ProperSplit sp = make_proper(f);
  Reduction out;
  YPolyX gpoly = antiderivative(sp.poly);
  BPoly gp_num;
  UPoly gp_den;
  bpoly_from_ypolyx(gpoly, gp_num, gp_den);
  out.g = RFunc(gp_num, BPoly(gp_den));
  if (sp.proper.is_zero_rf()) return out;

  StructuredPair st = reduce_structured(sp.proper.num(), sp.proper.den(), method);
  if (!st.A.is_zero_poly()) out.g = out.g + rfunc_quotient(st.A, st.qminus);
  if (!st.a.is_zero_poly()) out.r = rfunc_quotient(st.a, st.qstar);
  return out;
}

bool check_reduction(const RFunc& f, const Reduction& red, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f != red.g.derivative_y() + red.r) return fail("f != D_y(g) + r");
  if (!red.r.is_zero_rf()) {
    if (red.r.num().deg_y() >= red.r.den().deg_y()) return fail("r is not proper");
    const BPoly& den = red.r.den();
    if (den.deg_y() > 0) {
      BPoly g = gcd_y(den, den.derivative_y());
      if (g.deg_y() > 0) return fail("denominator of r is not squarefree");
    }
  }
  return true;
}

bool is_lucky(const BPoly& Q, int dy_minus, const Rat& x0) {
  if (sgn(Q.lc_y().eval(x0)) == 0) return false;
  UPoly Dq = Q.eval_x(x0);
  UPoly g = Dq.degree() >= 1 ? gcd_monic(Dq, Dq.derivative()) : UPoly(Rat(1));
  return g.degree() == dy_minus;
}

bool is_lucky(const BPoly& Q, const Rat& x0) {
  int dym = Q.deg_y() >= 1 ? gcd_y(Q, Q.derivative_y()).deg_y() : 0;
  return is_lucky(Q, dym, x0);
}

int count_unlucky_in_range(const BPoly& Q, long hi) {
  int dym = Q.deg_y() >= 1 ? gcd_y(Q, Q.derivative_y()).deg_y() : 0;
  int count = 0;
  for (long i = 0; i <= hi; i++) {
    deadline_check();
    if (!is_lucky(Q, dym, Rat(i))) count++;
  }
  return count;
}

}  // namespace hermite
}  // namespace ratel
