#include "ratel/ht.hpp"

#include <chrono>
#include <optional>

#include "ratel/linalg.hpp"

namespace ratel {
namespace ht {

namespace {

// A / (xden * yden) as a reduced rational function
RFunc make_quotient(const YPolyX& A, const UPoly& xden, const BPoly& yden) {
  if (A.is_zero_poly()) return RFunc();
  BPoly n;
  UPoly d;
  bpoly_from_ypolyx(A, n, d);
  return RFunc(n, BPoly(d * xden) * yden);
}

// incremental Gaussian elimination over Q; true when v was independent
bool gauss_insert(std::vector<std::vector<Rat>>& rows, std::vector<int>& piv,
                  std::vector<Rat> v) {
  for (size_t k = 0; k < rows.size(); k++) {
    if (sgn(v[piv[k]]) == 0) continue;
    Rat f = v[piv[k]] / rows[k][piv[k]];
    for (size_t c = 0; c < v.size(); c++) v[c] -= f * rows[k][c];
  }
  int p = -1;
  for (size_t c = 0; c < v.size(); c++)
    if (sgn(v[c]) != 0) {
      p = static_cast<int>(c);
      break;
    }
  if (p < 0) return false;
  rows.push_back(std::move(v));
  piv.push_back(p);
  return true;
}

// first i with the reduced residuals of Dx^0(f)..Dx^i(f) at x0 dependent,
// for f = P/Q with the squarefree split of Q already computed
int order_bound_inner(const BPoly& P, const BPoly& Q, const SqfDecomp& dec) {
  const int dys = dec.qstar().deg_y();
  const int dym = dec.qminus().deg_y();
  // smallest lucky nonnegative integer; the number of unlucky points is
  // bounded, so the scan is guaranteed to stop inside the window
  const long guard = static_cast<long>(std::max(0, Q.deg_x())) * (2L * dys - 1) + 1;
  long x0 = 0;
  while (x0 <= guard && !hermite::is_lucky(Q, dym, Rat(x0))) x0++;
  RATEL_CHECK(x0 <= guard, "no lucky evaluation point in the guaranteed window");

  const UPoly Qx0 = Q.eval_x(Rat(x0));
  std::vector<std::vector<Rat>> rows;
  std::vector<int> piv;
  BPoly N = P;   // numerator of Dx^i(f) over Q^(i+1)
  UPoly D = Qx0; // Qx0^(i+1)
  for (int i = 0;; i++) {
    deadline_check();
    RATEL_CHECK(i <= dys, "order lower bound failed to terminate");
    UPoly u = N.eval_x(Rat(x0));
    std::vector<Rat> v(static_cast<size_t>(dys), Rat(0));
    if (!u.is_zero_poly()) {
      auto raw = hermite::classic<Rat>(u, D);
      RATEL_CHECK(raw.rnum.degree() < dys, "residual degree bound at x0");
      for (size_t j = 0; j < raw.rnum.size(); j++) v[j] = raw.rnum.coeffs()[j];
    }
    if (!gauss_insert(rows, piv, std::move(v))) return i;
    N = N.derivative_x() * Q - Rat(i + 1) * (N * Q.derivative_x());
    D = D * Qx0;
  }
}

}  // namespace

RFunc normalize_certificate(const CertificateSum& c) {
  RFunc acc;
  for (const auto& t : c.terms) {
    deadline_check();
    acc = acc + t.coeff * t.body;
  }
  return acc;
}

void finalize_result(TelescoperResult& res, DiffOp L, std::vector<CertTerm> terms,
                     const YPolyX& poly_part,
                     std::chrono::steady_clock::time_point t_start) {
  res.L = std::move(L);
  res.order = res.L.order();
  // the y-polynomial part integrates directly under any operator
  if (!poly_part.is_zero_poly()) {
    YPolyX img = op_apply_poly(res.L, poly_part);
    if (!img.is_zero_poly()) {
      BPoly n;
      UPoly d;
      bpoly_from_ypolyx(antiderivative(img), n, d);
      terms.push_back(CertTerm{XFrac(Rat(1)), RFunc(n, BPoly(d))});
    }
  }
  res.certificate.terms = std::move(terms);
  res.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
}

int lower_order_bound(const RFunc& f) {
  if (f.is_zero_rf()) throw InputError("order bound of the zero function");
  ProperSplit sp = make_proper(f);
  if (sp.proper.is_zero_rf()) return 0;
  HForm hf = split_x_content(sp.proper);
  SqfDecomp dec = squarefree_decomp_y(hf.Q);
  return order_bound_inner(hf.P, hf.Q, dec);
}

TelescoperResult hermite_telescoping(const RFunc& f, const Options& opt) {
  const auto t_start = std::chrono::steady_clock::now();
  if (f.is_zero_rf()) throw InputError("cannot telescope the zero function");

  TelescoperResult res;
  res.method = "hermite";
  ProperSplit sp = make_proper(f);

  auto finish = [&](DiffOp L, std::vector<CertTerm> terms) -> TelescoperResult {
    finalize_result(res, std::move(L), std::move(terms), sp.poly, t_start);
    return res;
  };

  if (sp.proper.is_zero_rf()) {
    // polynomial in y over k(x): already an exact y-derivative
    res.dy_star = 0;
    if (opt.use_order_bound) res.rho0 = 0;
    return finish(DiffOp::identity(), {});
  }

  HForm hf = split_x_content(sp.proper);
  const BPoly& P = hf.P;
  const BPoly& Q = hf.Q;
  SqfDecomp dec = squarefree_decomp_y(Q);
  const BPoly Qs = dec.qstar();
  const int dys = Qs.deg_y();
  RATEL_CHECK(dys >= 1, "squarefree part of a nontrivial denominator is constant");
  res.dy_star = dys;
  if (opt.use_order_bound) res.rho0 = order_bound_inner(P, Q, dec);

  // f = D_y(g_0) + a_0/Q*
  hermite::StructuredPair st0 = hermite::reduce_with_parts(P, dec.qminus(), Qs, opt.step_method);
  std::vector<RFunc> gt;  // gt[0] = g_0; gt[i] = the new piece from step i
  gt.push_back(make_quotient(st0.A, UPoly(Rat(1)), dec.qminus()));

  std::vector<UPoly> eta;
  {
    BPoly an;  // a_i = an/ad with an over Q[x,y], ad over Q[x]
    UPoly ad;
    bpoly_from_ypolyx(st0.a, an, ad);
    if (an.is_zero_b()) {
      eta.assign(1, UPoly(Rat(1)));  // a_0 = 0: f itself is an exact derivative
    } else {
      linalg::DependenceFinder finder(dys);
      std::vector<UPoly> dens;
      auto push_state = [&](const BPoly& num, const UPoly& den) {
        std::vector<UPoly> w(static_cast<size_t>(dys));
        for (int j = 0; j < dys; j++) w[j] = num.coeff_y(j);
        dens.push_back(den);
        return finder.push(w);
      };
      auto dep0 = push_state(an, ad);
      RATEL_CHECK(!dep0, "nonzero residual reported as dependent");
      const BPoly DxQs = Qs.derivative_x();
      RFunc dxf, gi;  // maintained only under the invariant check
      if (opt.check_loop_invariant) {
        dxf = RFunc(P, Q);
        gi = gt[0];
      }
      for (int i = 1;; i++) {
        deadline_check();
        RATEL_CHECK(i <= dys, "telescoping loop exceeded the order cap");
        // reduce -a_{i-1} * Dx(Q*) / (Q*)^2, numerator taken over dens ad
        BPoly what = -(an * DxQs);
        YPolyX atil;
        if (what.is_zero_b()) {
          gt.push_back(RFunc());
        } else {
          hermite::StructuredPair sti = hermite::reduce_with_parts(what, Qs, Qs, opt.step_method);
          gt.push_back(make_quotient(sti.A, ad, Qs));
          atil = std::move(sti.a);
        }
        // a_i = Dx(a_{i-1}) + atil/ad, re-reduced coefficientwise
        BPoly tn;
        UPoly td;
        bpoly_from_ypolyx(atil, tn, td);
        BPoly num_raw =
            (an.derivative_x() * BPoly(ad) - an * BPoly(ad.derivative())) * BPoly(td) +
            tn * BPoly(ad);
        UPoly den_raw = ad * ad * td;
        bpoly_from_ypolyx(ypolyx_scale(num_raw, den_raw), an, ad);
        RATEL_CHECK(an.deg_y() < dys, "residual degree bound violated");
        if (opt.check_loop_invariant) {
          dxf = dxf.derivative_x();
          gi = gi.derivative_x() + gt[static_cast<size_t>(i)];
          RFunc rhs = gi.derivative_y() + RFunc(an, BPoly(ad) * Qs);
          RATEL_CHECK(dxf == rhs, "telescoping loop invariant failed");
        }
        auto dep = push_state(an, ad);
        if (dep) {
          if (res.rho0 >= 0)
            RATEL_CHECK(i >= res.rho0, "dependence below the order lower bound");
          // eta over k(x) absorbs the cleared denominators of the a_j
          eta.resize(dep->size());
          for (size_t j = 0; j < eta.size(); j++) eta[j] = (*dep)[j] * dens[j];
          eta = linalg::primitive_vector_p(eta);
          break;
        }
      }
    }
  }

  const int rho = static_cast<int>(eta.size()) - 1;
  RATEL_CHECK(!eta.back().is_zero_poly(), "top dependence coefficient vanished");

  DiffOp lraw(eta);
  if (!(hf.qx == UPoly(Rat(1)))) lraw = ore_mul(lraw, DiffOp::from_xpoly(hf.qx));
  XFrac content;
  DiffOp L = primitivize(lraw, &content);
  RATEL_CHECK(L.order() == rho, "content removal changed the order");
  RATEL_CHECK(!content.is_zero_frac(), "vanishing operator content");
  const XFrac invc = XFrac(Rat(1)) / content;

  std::vector<CertTerm> terms;
  for (int s = 0; s <= rho; s++) {
    if (gt[static_cast<size_t>(s)].is_zero_rf()) continue;
    RFunc body = gt[static_cast<size_t>(s)];
    for (int j = s; j <= rho; j++) {
      if (j > s) body = body.derivative_x();
      if (eta[static_cast<size_t>(j)].is_zero_poly() || body.is_zero_rf()) continue;
      terms.push_back(CertTerm{XFrac(eta[static_cast<size_t>(j)]) * invc, body});
    }
  }
  return finish(std::move(L), std::move(terms));
}

bool verify_telescoper(const RFunc& f, const DiffOp& L, const RFunc& g) {
  if (L.is_zero_op()) return false;
  const BPoly& qf = f.den();
  const int r = L.order();
  // Dx^i(f) = N_i / qf^(i+1), with no reduction along the way
  std::vector<BPoly> num(static_cast<size_t>(r) + 1);
  num[0] = f.num();
  for (int i = 0; i < r; i++) {
    num[static_cast<size_t>(i) + 1] =
        num[static_cast<size_t>(i)].derivative_x() * qf -
        Rat(i + 1) * (num[static_cast<size_t>(i)] * qf.derivative_x());
    deadline_check();
  }
  // L(f) = lhs / qf^(r+1) by a Horner pass over descending powers of qf
  BPoly lhs;
  for (int i = 0; i <= r; i++) {
    lhs = lhs * qf;
    if (!L.coeff(i).is_zero_poly()) lhs = lhs + BPoly(L.coeff(i)) * num[static_cast<size_t>(i)];
  }
  BPoly rn = g.num().derivative_y() * g.den() - g.num() * g.den().derivative_y();
  BPoly rd = g.den() * g.den();
  return lhs * rd == rn * qf.pow(static_cast<unsigned>(r) + 1);
}

}  // namespace ht
}  // namespace ratel
