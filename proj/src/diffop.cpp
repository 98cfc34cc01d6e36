#include "ratel/diffop.hpp"

namespace ratel {

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  std::vector<UPoly> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); i++) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) r[i] = r[i] + b.c_[i];
  return DiffOp(std::move(r));
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
  std::vector<UPoly> r(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); i++) r[i] = a.c_[i];
  for (size_t i = 0; i < b.c_.size(); i++) r[i] = r[i] - b.c_[i];
  return DiffOp(std::move(r));
}

DiffOp operator*(const UPoly& s, const DiffOp& a) {
  std::vector<UPoly> r(a.c_.size());
  for (size_t i = 0; i < r.size(); i++) r[i] = s * a.c_[i];
  return DiffOp(std::move(r));
}

DiffOp operator*(const Rat& s, const DiffOp& a) {
  std::vector<UPoly> r(a.c_.size());
  for (size_t i = 0; i < r.size(); i++) r[i] = s * a.c_[i];
  return DiffOp(std::move(r));
}

DiffOp ore_mul(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero_op() || b.is_zero_op()) return DiffOp();
  DiffOp acc;
  DiffOp t = b;  // t = Dx^i * b
  for (int i = 0;; i++) {
    acc = acc + a.coeff(i) * t;
    if (i == a.order()) break;
    // Dx * t: shift orders up and add the derivative of each coefficient
    std::vector<UPoly> nt(t.coeffs().size() + 1);
    for (size_t j = 0; j < t.coeffs().size(); j++) {
      nt[j + 1] = nt[j + 1] + t.coeffs()[j];
      nt[j] = nt[j] + t.coeffs()[j].derivative();
    }
    t = DiffOp(std::move(nt));
  }
  return acc;
}

DiffOp primitivize(const DiffOp& L, XFrac* content) {
  if (L.is_zero_op()) {
    if (content) *content = XFrac(Rat(1));
    return L;
  }
  // reuse the bivariate helpers: coefficients as a y-major carrier
  BPoly carrier(L.coeffs());
  UPoly cont = content_y(carrier);
  carrier = bpoly_div_xpoly(carrier, cont);
  auto [prim, scale] = bpoly_int_primitive(carrier);
  if (content) *content = XFrac(scale * cont);
  std::vector<UPoly> c(L.coeffs().size());
  for (size_t i = 0; i < c.size(); i++) c[i] = prim.coeff_y(static_cast<int>(i));
  return DiffOp(std::move(c));
}

DiffOp primitivize(const DiffOp& L) { return primitivize(L, nullptr); }

RFunc op_apply(const DiffOp& L, const RFunc& f) {
  RFunc acc;
  RFunc d = f;
  for (int i = 0;; i++) {
    if (!L.coeff(i).is_zero_poly()) acc = acc + RFunc(L.coeff(i) * d.num(), d.den());
    if (i >= L.order()) break;
    d = d.derivative_x();
    deadline_check();
  }
  return acc;
}

YPolyX op_apply_poly(const DiffOp& L, const YPolyX& p) {
  YPolyX acc;
  YPolyX d = p;
  auto dx_poly = [](const YPolyX& g) {
    std::vector<XFrac> c(g.coeffs().size());
    for (size_t j = 0; j < c.size(); j++) c[j] = g.coeffs()[j].derivative();
    return YPolyX(std::move(c));
  };
  for (int i = 0;; i++) {
    if (!L.coeff(i).is_zero_poly()) {
      XFrac s{L.coeff(i)};
      acc = acc + s * d;
    }
    if (i >= L.order()) break;
    d = dx_poly(d);
  }
  return acc;
}

XDiffOp xdiff_from(const DiffOp& L) {
  XDiffOp r;
  r.c.resize(L.coeffs().size());
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] = XFrac(L.coeffs()[i]);
  r.trim();
  return r;
}

XDiffOp ore_mul_x(const XDiffOp& a, const XDiffOp& b) {
  if (a.is_zero_op() || b.is_zero_op()) return XDiffOp{};
  XDiffOp acc;
  acc.c.assign(a.c.size() + b.c.size(), XFrac());
  XDiffOp t = b;
  for (size_t i = 0; i < a.c.size(); i++) {
    for (size_t j = 0; j < t.c.size(); j++) acc.c[j] = acc.c[j] + a.c[i] * t.c[j];
    if (i + 1 == a.c.size()) break;
    XDiffOp nt;
    nt.c.assign(t.c.size() + 1, XFrac());
    for (size_t j = 0; j < t.c.size(); j++) {
      nt.c[j + 1] = nt.c[j + 1] + t.c[j];
      nt.c[j] = nt.c[j] + t.c[j].derivative();
    }
    nt.trim();
    t = std::move(nt);
  }
  acc.trim();
  return acc;
}

XDiffOp xop_sub(const XDiffOp& a, const XDiffOp& b) {
  XDiffOp r;
  r.c.assign(std::max(a.c.size(), b.c.size()), XFrac());
  for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); i++) r.c[i] = r.c[i] - b.c[i];
  r.trim();
  return r;
}

void op_right_divide(const DiffOp& a, const DiffOp& b, XDiffOp& quo, XDiffOp& rem) {
  if (b.is_zero_op()) throw InputError("right division by the zero operator");
  XDiffOp bb = xdiff_from(b);
  rem = xdiff_from(a);
  quo = XDiffOp{};
  quo.c.assign(std::max<int>(0, a.order() - b.order() + 1), XFrac());
  while (!rem.is_zero_op() && rem.order() >= bb.order()) {
    int k = rem.order() - bb.order();
    XFrac f = rem.c.back() / bb.c.back();
    XDiffOp mono;
    mono.c.assign(k + 1, XFrac());
    mono.c[k] = f;
    quo.c[k] = quo.c[k] + f;
    rem = xop_sub(rem, ore_mul_x(mono, bb));
    RATEL_CHECK(rem.order() < k + bb.order(), "right division degree drop");
    deadline_check();
  }
  quo.trim();
}

bool right_divides(const DiffOp& b, const DiffOp& a) {
  XDiffOp q, r;
  op_right_divide(a, b, q, r);
  return r.is_zero_op();
}

std::string to_string(const DiffOp& L) {
  if (L.is_zero_op()) return "(0)";
  std::string out;
  for (int i = L.order(); i >= 0; i--) {
    if (L.coeff(i).is_zero_poly()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(L.coeff(i), "x") + ")";
    if (i > 0) out += "*Dx^" + std::to_string(i);
  }
  return out;
}

}  // namespace ratel
