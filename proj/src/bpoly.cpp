#include "ratel/bpoly.hpp"

#include <algorithm>

namespace ratel {

BPoly operator+(const BPoly& a, const BPoly& b) {
  std::vector<UPoly> r(std::max(a.yc_.size(), b.yc_.size()));
  for (size_t i = 0; i < a.yc_.size(); i++) r[i] = a.yc_[i];
  for (size_t i = 0; i < b.yc_.size(); i++) r[i] = r[i] + b.yc_[i];
  return BPoly(std::move(r));
}

BPoly operator-(const BPoly& a, const BPoly& b) {
  std::vector<UPoly> r(std::max(a.yc_.size(), b.yc_.size()));
  for (size_t i = 0; i < a.yc_.size(); i++) r[i] = a.yc_[i];
  for (size_t i = 0; i < b.yc_.size(); i++) r[i] = r[i] - b.yc_[i];
  return BPoly(std::move(r));
}

BPoly operator*(const BPoly& a, const BPoly& b) {
  if (a.yc_.empty() || b.yc_.empty()) return BPoly();
  std::vector<UPoly> r(a.yc_.size() + b.yc_.size() - 1);
  for (size_t i = 0; i < a.yc_.size(); i++) {
    if (a.yc_[i].is_zero_poly()) continue;
    for (size_t j = 0; j < b.yc_.size(); j++) {
      if (b.yc_[j].is_zero_poly()) continue;
      r[i + j] += a.yc_[i] * b.yc_[j];
    }
    deadline_check();
  }
  return BPoly(std::move(r));
}

BPoly BPoly::operator-() const {
  BPoly r = *this;
  for (auto& c : r.yc_) c = -c;
  return r;
}

BPoly operator*(const UPoly& s, const BPoly& a) {
  if (s.is_zero_poly()) return BPoly();
  BPoly r = a;
  for (auto& c : r.yc_) c = s * c;
  return r;
}

BPoly operator*(const Rat& s, const BPoly& a) {
  if (sgn(s) == 0) return BPoly();
  BPoly r = a;
  for (auto& c : r.yc_) c = s * c;
  return r;
}

BPoly BPoly::derivative_y() const {
  if (yc_.size() <= 1) return BPoly();
  std::vector<UPoly> r(yc_.size() - 1);
  for (size_t j = 1; j < yc_.size(); j++) r[j - 1] = Rat(static_cast<int>(j)) * yc_[j];
  return BPoly(std::move(r));
}

BPoly BPoly::derivative_x() const {
  std::vector<UPoly> r(yc_.size());
  for (size_t j = 0; j < yc_.size(); j++) r[j] = yc_[j].derivative();
  return BPoly(std::move(r));
}

BPoly BPoly::shifted_up_y(int k) const {
  if (yc_.empty() || k == 0) return *this;
  std::vector<UPoly> r(yc_.size() + k);
  for (size_t j = 0; j < yc_.size(); j++) r[j + k] = yc_[j];
  return BPoly(std::move(r));
}

BPoly BPoly::swap_xy() const {
  int dx = deg_x();
  if (is_zero_b()) return BPoly();
  std::vector<UPoly> r(dx + 1);
  for (int i = 0; i <= dx; i++) {
    std::vector<Rat> c(yc_.size(), Rat(0));
    for (size_t j = 0; j < yc_.size(); j++) c[j] = yc_[j][i];
    r[i] = UPoly(std::move(c));
  }
  return BPoly(std::move(r));
}

BPoly BPoly::pow(unsigned e) const {
  BPoly r(Rat(1));
  BPoly b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

UPoly BPoly::eval_x(const Rat& x0) const {
  std::vector<Rat> c(yc_.size(), Rat(0));
  for (size_t j = 0; j < yc_.size(); j++) c[j] = yc_[j].eval(x0);
  return UPoly(std::move(c));
}

BPoly BPoly::subst_y_rat(const Rat& y0) const {
  UPoly acc;
  for (size_t j = yc_.size(); j-- > 0;) acc = y0 * acc + yc_[j];
  return BPoly(acc);
}

UPoly content_y(const BPoly& f) {
  if (f.is_zero_b()) return UPoly();
  // polynomial part of the content: primitive gcd of the coefficients
  UPoly g;
  Rat cont;
  bool first = true;
  for (const auto& c : f.ycoeffs()) {
    if (c.is_zero_poly()) continue;
    auto [prim, scale] = to_int_primitive(c);
    cont = first ? Rat(abs(scale)) : rat_gcd(cont, abs(scale));
    first = false;
    if (g.degree() != 0 || g.is_zero_poly()) g = upoly_gcd(g, upoly_from_int(prim));
  }
  UPoly out = cont * g;
  // sign chosen so the primitive part gets a positive leading coefficient
  if (sgn(f.lc_y().lc()) < 0) out = Rat(-1) * out;
  return out;
}

BPoly primitive_part_y(const BPoly& f) {
  if (f.is_zero_b()) return f;
  return bpoly_div_xpoly(f, content_y(f));
}

void content_primitive_x(const BPoly& f, UPoly& t_in_y, BPoly& T) {
  if (f.is_zero_b()) {
    t_in_y = UPoly();
    T = BPoly();
    return;
  }
  BPoly fx = f.swap_xy();       // x-major view: coefficients of x^i are polys in y
  UPoly t = content_y(fx);      // content in Q[y]
  t_in_y = t;
  if (t == UPoly(Rat(1)))
    T = f;
  else
    T = bpoly_div_xpoly(fx, t).swap_xy();
}

BPoly bpoly_div_xpoly(const BPoly& a, const UPoly& s) {
  if (s.is_zero_poly()) throw InternalError("division by zero x-polynomial");
  std::vector<UPoly> r(a.ycoeffs().size());
  for (size_t j = 0; j < r.size(); j++) r[j] = a.ycoeffs()[j] / s;  // throws if inexact
  return BPoly(std::move(r));
}

BPoly bpoly_divexact(const BPoly& a, const BPoly& b) {
  if (b.is_zero_b()) throw InternalError("bivariate division by zero");
  if (a.is_zero_b()) return BPoly();
  if (b.deg_y() == 0) return bpoly_div_xpoly(a, b.coeff_y(0));
  BPoly r = a, q;
  int db = b.deg_y();
  while (!r.is_zero_b() && r.deg_y() >= db) {
    UPoly f = r.lc_y() / b.lc_y();  // exact when b | a
    int k = r.deg_y() - db;
    BPoly term = (f * b).shifted_up_y(k);
    q.set_coeff_y(k, f);
    r = r - term;
    if (!r.is_zero_b() && r.deg_y() >= db + k) throw InternalError("inexact bivariate division");
    deadline_check();
  }
  if (!r.is_zero_b()) throw InternalError("inexact bivariate division");
  return q;
}

// pseudo-remainder of a by b w.r.t. y (up to a power of lc_y(b); callers
// remove content afterwards, so the exact power is irrelevant)
static BPoly prem_y(const BPoly& a, const BPoly& b) {
  BPoly r = a;
  int db = b.deg_y();
  const UPoly& lb = b.lc_y();
  while (!r.is_zero_b() && r.deg_y() >= db) {
    int k = r.deg_y() - db;
    BPoly t = (r.lc_y() * b).shifted_up_y(k);
    r = lb * r - t;
    deadline_check();
  }
  return r;
}

std::pair<BPoly, Rat> bpoly_int_primitive(const BPoly& f) {
  if (f.is_zero_b()) return {f, Rat(0)};
  Int den_lcm = 1;
  for (const auto& c : f.ycoeffs())
    for (const Rat& a : c.coeffs())
      if (sgn(a) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
  Int cont = 0;
  for (const auto& c : f.ycoeffs())
    for (const Rat& a : c.coeffs())
      if (sgn(a) != 0) {
        Int n = Rat(a * den_lcm).get_num();
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), n.get_mpz_t());
      }
  if (sgn(f.lc_y().lc()) < 0) cont = -cont;
  Rat scale(cont, den_lcm);
  scale.canonicalize();
  Rat inv = 1 / scale;
  return {inv * f, scale};
}

// subresultant-style fallback on y-primitive inputs; exact but slow when
// intermediate coefficients grow
static BPoly gcd_y_prs(BPoly A, BPoly B) {
  while (!B.is_zero_b() && B.deg_y() > 0) {
    BPoly R = prem_y(A, B);
    A = std::move(B);
    B = R.is_zero_b() ? R : primitive_part_y(R);
    deadline_check();
  }
  return B.is_zero_b() ? A : BPoly(Rat(1));  // deg_y(B)==0: primitive parts coprime
}

// Newton interpolation through (xs[i], vs[i]); xs pairwise distinct
static UPoly newton_upoly(const std::vector<Rat>& xs, const std::vector<Rat>& vs) {
  size_t n = xs.size();
  std::vector<Rat> c(vs);
  for (size_t j = 1; j < n; j++)
    for (size_t i = n; i-- > j;) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  UPoly acc;
  for (size_t i = n; i-- > 0;) acc = acc * (UPoly({-xs[i], Rat(1)})) + UPoly(c[i]);
  return acc;
}

// gcd of y-primitive inputs by evaluating x at integers, taking univariate
// gcds in y, correcting leading coefficients, and interpolating.  Evaluation
// can only overstate the gcd degree (at points where neither leading
// coefficient vanishes), so the minimum observed degree wins; the candidate
// is confirmed by exact trial division, falling back to the remainder
// sequence if confirmation keeps failing.
static BPoly gcd_y_eval(const BPoly& A, const BPoly& B) {
  const UPoly& lcA = A.lc_y();
  const UPoly& lcB = B.lc_y();
  UPoly gamma = upoly_gcd(lcA, lcB);
  const int npts = std::min(A.deg_x(), B.deg_x()) + gamma.degree() + 1;
  std::vector<Rat> xs;
  std::vector<UPoly> gs;  // scaled univariate images, all of degree dmin
  int dmin = -1, fails = 0;
  for (long t = 0; t < 16 * npts + 64; t++) {
    deadline_check();
    Rat x0(t);
    if (sgn(lcA.eval(x0)) == 0 || sgn(lcB.eval(x0)) == 0) continue;
    UPoly g0 = upoly_gcd(A.eval_x(x0), B.eval_x(x0));
    if (g0.degree() == 0) return BPoly(Rat(1));
    if (dmin >= 0 && g0.degree() > dmin) continue;  // unlucky point
    if (dmin < 0 || g0.degree() < dmin) {
      dmin = g0.degree();
      xs.clear();
      gs.clear();
    }
    xs.push_back(x0);
    gs.push_back((gamma.eval(x0) / g0.lc()) * g0);
    if (static_cast<int>(xs.size()) < npts) continue;
    std::vector<UPoly> yc(dmin + 1);
    std::vector<Rat> vs(xs.size());
    for (int j = 0; j <= dmin; j++) {
      for (size_t i = 0; i < xs.size(); i++) vs[i] = gs[i][j];
      yc[j] = newton_upoly(xs, vs);
    }
    BPoly cand = primitive_part_y(BPoly(std::move(yc)));
    try {
      bpoly_divexact(A, cand);
      bpoly_divexact(B, cand);
      return cand;
    } catch (const InternalError&) {
      // every sample point overstated the degree; resample from scratch
      if (++fails >= 2) break;
      xs.clear();
      gs.clear();
      dmin = -1;
    }
  }
  return gcd_y_prs(A, B);
}

BPoly gcd_y(const BPoly& a, const BPoly& b) {
  if (a.is_zero_b()) return bpoly_int_primitive(b).first;
  if (b.is_zero_b()) return bpoly_int_primitive(a).first;
  UPoly ca = content_y(a), cb = content_y(b);
  UPoly cg = upoly_gcd(ca, cb);
  BPoly A = bpoly_div_xpoly(a, ca), B = bpoly_div_xpoly(b, cb);
  if (A.deg_y() < B.deg_y()) std::swap(A, B);
  BPoly g = B.deg_y() == 0 ? BPoly(Rat(1)) : gcd_y_eval(A, B);
  g = bpoly_int_primitive(cg * g).first;
  return g;
}

YPolyX ypolyx_from_bpoly(const BPoly& f) {
  std::vector<XFrac> c(f.ycoeffs().size());
  for (size_t j = 0; j < c.size(); j++) c[j] = XFrac(f.ycoeffs()[j]);
  return YPolyX(std::move(c));
}

YPolyX ypolyx_scale(const BPoly& num, const UPoly& den) {
  std::vector<XFrac> c(num.ycoeffs().size());
  for (size_t j = 0; j < c.size(); j++) c[j] = XFrac(num.ycoeffs()[j], den);
  return YPolyX(std::move(c));
}

void bpoly_from_ypolyx(const YPolyX& f, BPoly& num, UPoly& den) {
  den = UPoly(Rat(1));
  for (const auto& c : f.coeffs())
    if (!c.is_zero_frac()) den = upoly_lcm(den, c.den());
  std::vector<UPoly> nc(f.coeffs().size());
  for (size_t j = 0; j < nc.size(); j++) {
    const XFrac& c = f.coeffs()[j];
    if (!c.is_zero_frac()) nc[j] = c.num() * (den / c.den());
  }
  num = BPoly(std::move(nc));
}

std::string to_string(const BPoly& f) {
  if (f.is_zero_b()) return "0";
  std::string out;
  for (int j = f.deg_y(); j >= 0; j--) {
    const UPoly& c = f.coeff_y(j);
    if (c.is_zero_poly()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c, "x") + ")";
    if (j > 0) {
      out += "*y";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

BPoly SqfDecomp::qstar() const {
  BPoly r(Rat(1));
  for (const auto& p : parts) r = r * p;
  return r;
}

BPoly SqfDecomp::qminus() const {
  BPoly r(scale * content_x);
  for (size_t i = 1; i < parts.size(); i++) r = r * parts[i].pow(static_cast<unsigned>(i));
  return r;
}

std::vector<BPoly> SqfDecomp::deflation_quotients() const {
  BPoly qs = qstar();
  std::vector<BPoly> r(parts.size());
  for (size_t i = 0; i < parts.size(); i++) r[i] = bpoly_divexact(qs, parts[i]);
  return r;
}

SqfDecomp squarefree_decomp_y(const BPoly& q) {
  if (q.is_zero_b()) throw InputError("squarefree decomposition of zero");
  if (q.deg_y() < 1) throw InputError("squarefree decomposition w.r.t. y needs deg_y >= 1");
  SqfDecomp out;
  UPoly cont = content_y(q);
  BPoly f = bpoly_int_primitive(bpoly_div_xpoly(q, cont)).first;
  out.content_x = cont;

  // Yun's algorithm over Q[x], gcds kept primitive so every division is exact
  BPoly fy = f.derivative_y();
  BPoly a = gcd_y(f, fy);
  BPoly b = bpoly_divexact(f, a);
  BPoly d = bpoly_divexact(fy, a) - b.derivative_y();
  while (b.deg_y() > 0) {
    deadline_check();
    BPoly p = gcd_y(b, d);
    out.parts.push_back(p);
    b = bpoly_divexact(b, p);
    d = bpoly_divexact(d, p) - b.derivative_y();
  }
  while (!out.parts.empty() && out.parts.back().is_one()) out.parts.pop_back();
  RATEL_CHECK(!out.parts.empty(), "empty squarefree decomposition");

  // the rational scale is fixed by comparing leading coefficients, then the
  // whole decomposition is checked by multiplying back
  BPoly prod(out.content_x);
  for (size_t i = 0; i < out.parts.size(); i++)
    prod = prod * out.parts[i].pow(static_cast<unsigned>(i + 1));
  out.scale = q.lc_y().lc() / prod.lc_y().lc();
  RATEL_CHECK(out.scale * prod == q, "squarefree decomposition does not multiply back");
  return out;
}

}  // namespace ratel
