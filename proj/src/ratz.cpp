#include "ratel/ratz.hpp"

#include <algorithm>
#include <chrono>
#include <utility>
#include <vector>

#include "ratel/linalg.hpp"

namespace ratel {
namespace ratz {

namespace {

// y-only polynomial as a bivariate
BPoly bpoly_in_y(const UPoly& t) {
  std::vector<UPoly> yc(t.coeffs().size());
  for (size_t j = 0; j < yc.size(); j++) yc[j] = UPoly(t.coeffs()[j]);
  return BPoly(std::move(yc));
}

YPolyX shift_y(const YPolyX& p, int k) {
  YPolyX out;
  for (int i = 0; i <= p.degree(); i++)
    if (!p[i].is_zero_frac()) out.set_coeff(i + k, p[i]);
  return out;
}

// denominator structure shared by the Gosper form and the ansatz loop
struct Split {
  BPoly P, Q;   // proper input P/Q
  BPoly Qm;     // Q / Q*, the repeated part
  BPoly Qs;     // Q*, squarefree part of Q
  BPoly Tstar;  // x-primitive part of Q*
  UPoly ts_y;   // x-content of Q* (a polynomial in y)
  BPoly E;      // T* Dx(T) / T, with T the x-primitive part of Q
  BPoly H0;     // -Q* Dy(Q) / Q
};

Split split_proper(const BPoly& P, const BPoly& Q) {
  RATEL_CHECK(Q.deg_y() >= 1, "proper part must depend on y");
  Split s;
  s.P = P;
  s.Q = Q;
  s.Qm = gcd_y(Q, Q.derivative_y());
  s.Qs = bpoly_divexact(Q, s.Qm);
  UPoly t_y;
  BPoly T;
  content_primitive_x(Q, t_y, T);
  content_primitive_x(s.Qs, s.ts_y, s.Tstar);
  // both divisions are exact: T* collects every distinct y-factor of T, and
  // Q* divides Dy(Q) times the squarefree part, factor by factor
  s.E = bpoly_divexact(s.Tstar * T.derivative_x(), T);
  s.H0 = Rat(-1) * bpoly_divexact(s.Qs * Q.derivative_y(), Q);
  return s;
}

}  // namespace

std::vector<BPoly> derivative_numerators_T(const RFunc& f, int upto) {
  RATEL_CHECK(upto >= 0, "negative derivative count");
  if (f.is_zero_rf()) return std::vector<BPoly>(static_cast<size_t>(upto) + 1);
  if (!(f.num().deg_y() < f.den().deg_y()))
    throw InputError("derivative numerators need an input proper in y");

  Split s = split_proper(f.num(), f.den());
  const BPoly DxTs = s.Tstar.derivative_x();
  const int dxP = std::max(s.P.deg_x(), 0);
  const int dxTs = std::max(s.Tstar.deg_x(), 0);
  const int dyQ = s.Q.deg_y();
  const int dyTs = std::max(s.Tstar.deg_y(), 0);

  std::vector<BPoly> out;
  out.reserve(static_cast<size_t>(upto) + 1);
  out.push_back(s.P);
  for (int i = 0; i < upto; i++) {
    deadline_check();
    BPoly next =
        out.back().derivative_x() * s.Tstar - out.back() * (s.E + Rat(i) * DxTs);
    if (!next.is_zero_b()) {
      RATEL_CHECK(next.deg_x() <= dxP + (i + 1) * dxTs - (i + 1),
                  "numerator x-degree exceeds its bound");
      RATEL_CHECK(next.deg_y() <= dyQ + (i + 1) * dyTs - 1,
                  "numerator y-degree exceeds its bound");
    }
    out.push_back(std::move(next));
  }
  return out;
}

GosperForm gosper_form(const RFunc& f, int rho) {
  RATEL_CHECK(rho >= 0, "negative order");
  if (f.is_zero_rf()) throw InputError("gosper form of the zero function");
  GosperForm out;
  out.numerators = derivative_numerators_T(f, rho);
  Split s = split_proper(f.num(), f.den());
  out.Qstar = s.Qs;
  out.H = s.H0 - Rat(rho) * (bpoly_in_y(s.ts_y) * s.Tstar.derivative_y());
  return out;
}

bool gosper_certificate_check(const GosperForm& form, int tau_max) {
  RATEL_CHECK(tau_max >= 0, "negative shift cap");
  const BPoly DyQs = form.Qstar.derivative_y();
  for (int tau = 0; tau <= tau_max; tau++) {
    BPoly g = gcd_y(form.Qstar, form.H - Rat(tau) * DyQs);
    if (g.deg_y() != 0 || g.deg_x() != 0) return false;
  }
  return true;
}

ht::TelescoperResult rat_az(const RFunc& f) {
  const auto t_start = std::chrono::steady_clock::now();
  if (f.is_zero_rf()) throw InputError("cannot telescope the zero function");

  ht::TelescoperResult res;
  res.method = "az";

  ProperSplit sp = make_proper(f);
  if (sp.proper.is_zero_rf()) {
    // polynomial in y over k(x): already an exact y-derivative
    res.dy_star = 0;
    ht::finalize_result(res, DiffOp::identity(), {}, sp.poly, t_start);
    return res;
  }

  HForm hf = split_x_content(sp.proper);
  Split s = split_proper(hf.P, hf.Q);
  const int dys = s.Qs.deg_y();
  res.dy_star = dys;

  const BPoly DxTstar = s.Tstar.derivative_x();
  const BPoly DyTstar = s.Tstar.derivative_y();
  const BPoly tstar_y = bpoly_in_y(s.ts_y);
  const int dy_ts = std::max(s.Tstar.deg_y(), 0);

  // At candidate order l we look for eta_0..eta_l in k[x], not all zero,
  // and z in k(x)[y] with deg_y(z) < beta = deg_y(Q^- (T*)^l) such that
  //   sum_i eta_i N_i (T*)^(l-i) = Q* Dy(z) + (Dy(Q*) + H) z;
  // then sum_i eta_i Dx^i(f) = Dy(z / (Q^- (T*)^l)).  Restricting z below
  // beta loses nothing — z = Q^- (T*)^l itself solves the homogeneous
  // equation (it makes the certificate the constant 1), so any solution of
  // y-degree beta properizes by subtracting a multiple of it — and it makes
  // the kernel trivial below the minimal order and one-dimensional at it.
  BPoly H = s.H0;           // updated in place as l grows
  std::vector<BPoly> cols;  // cols[i] = N_i (T*)^(l-i)
  cols.push_back(s.P);
  int beta = std::max(s.Qm.deg_y(), 0);

  const YPolyX Qsf = ypolyx_from_bpoly(s.Qs);
  const XFrac qs_top = Qsf[dys];

  for (int l = 0;; l++) {
    deadline_check();
    RATEL_CHECK(l <= dys, "ansatz loop exceeded the order cap");

    // The image of z_j under z -> Q* Dy(z) + (Dy(Q*) + H) z is
    //   ic_j = j Q* y^(j-1) + B y^j,   B = Dy(Q*) + H,
    // whose top coefficient, at y-degree dys-1+j, equals (j - beta) lc(Q*):
    // the gauge solution z = Q^- (T*)^l of degree beta forces the top
    // coefficient there to vanish, and nowhere else.  So the z-unknowns
    // eliminate by back-substitution from degree dys-1+beta-1 downward, and
    // each eta-column leaves a residue supported on y-degrees 0..dys-2 plus
    // the single top degree dys-1+beta.
    const YPolyX Bf = ypolyx_from_bpoly(s.Qs.derivative_y() + H);
    const XFrac b_top = Bf[dys - 1];

    std::vector<YPolyX> ic(beta);
    for (int j = 0; j < beta; j++) {
      ic[j] = shift_y(Bf, j);
      if (j > 0) ic[j] = ic[j] + XFrac(Rat(j)) * shift_y(Qsf, j - 1);
    }

    auto reduce_z = [&](YPolyX r, std::vector<XFrac>* z) -> YPolyX {
      RATEL_CHECK(r.degree() <= dys - 1 + beta, "column exceeds the ansatz degree range");
      for (int d = r.degree(); d >= dys - 1; d--) {
        const int j = d - (dys - 1);
        if (j >= beta) continue;
        const XFrac cd = r[d];
        if (cd.is_zero_frac()) continue;
        const XFrac top = XFrac(Rat(j)) * qs_top + b_top;
        RATEL_CHECK(!top.is_zero_frac(), "z-pivot vanished below the gauge degree");
        const XFrac fac = cd / top;
        r = r - fac * ic[j];
        if (z) (*z)[j] = fac;
      }
      return r;
    };

    std::vector<std::vector<XFrac>> rescol(l + 1);
    for (int i = 0; i <= l; i++) {
      YPolyX r = reduce_z(ypolyx_from_bpoly(cols[i]), nullptr);
      std::vector<XFrac> v(dys);
      for (int d = 0; d <= dys - 2; d++) v[d] = r[d];
      v[dys - 1] = r[dys - 1 + beta];
      rescol[i] = std::move(v);
    }

    // clear denominators row by row (row scaling keeps the kernel)
    linalg::PMatrix M(dys, l + 1);
    for (int r = 0; r < dys; r++) {
      UPoly den{Rat(1)};
      for (int i = 0; i <= l; i++)
        if (!rescol[i][r].is_zero_frac()) den = upoly_lcm(den, rescol[i][r].den());
      for (int i = 0; i <= l; i++)
        if (!rescol[i][r].is_zero_frac())
          M.at(r, i) = rescol[i][r].num() * (den / rescol[i][r].den());
    }

    const auto hit = linalg::kernel_vector(M);
    if (hit) {
      const std::vector<UPoly>& eta = *hit;
      DiffOp lraw{std::vector<UPoly>(eta)};
      RATEL_CHECK(!lraw.is_zero_op(), "ansatz solution without telescoper part");
      RATEL_CHECK(lraw.order() == l, "leading ansatz coefficient vanished");

      // back-substitute the certificate numerator for this eta; its residue
      // must vanish identically, which re-verifies the solve
      YPolyX comb;
      for (int i = 0; i <= l; i++)
        if (!eta[i].is_zero_poly())
          comb = comb + XFrac(eta[i]) * ypolyx_from_bpoly(cols[i]);
      std::vector<XFrac> zc(beta);
      YPolyX resid = reduce_z(comb, &zc);
      RATEL_CHECK(resid.is_zero_poly(), "solution residue must vanish");
      YPolyX zf;
      for (int j = 0; j < beta; j++) zf.set_coeff(j, zc[j]);

      if (!(hf.qx == UPoly(Rat(1)))) lraw = ore_mul(lraw, DiffOp::from_xpoly(hf.qx));
      XFrac content;
      DiffOp L = primitivize(lraw, &content);
      RATEL_CHECK(L.order() == l, "denominator conjugation must preserve the order");
      const XFrac invc = XFrac(Rat(1)) / content;

      std::vector<ht::CertTerm> terms;
      if (!zf.is_zero_poly()) {
        BPoly zn;
        UPoly zd;
        bpoly_from_ypolyx(zf, zn, zd);
        terms.push_back(
            ht::CertTerm{invc, RFunc(zn, s.Qm * s.Tstar.pow(l) * BPoly(zd))});
      }
      ht::finalize_result(res, std::move(L), std::move(terms), sp.poly, t_start);
      return res;
    }

    // advance the ansatz to order l + 1
    BPoly next =
        cols.back().derivative_x() * s.Tstar - cols.back() * (s.E + Rat(l) * DxTstar);
    for (BPoly& c : cols) c = c * s.Tstar;
    cols.push_back(std::move(next));
    beta += dy_ts;
    H = H - tstar_y * DyTstar;
  }
}

}  // namespace ratz
}  // namespace ratel
