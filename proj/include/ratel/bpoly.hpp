#ifndef RATEL_BPOLY_HPP
#define RATEL_BPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ratel/xfrac.hpp"

namespace ratel {

// Dense bivariate polynomial over Q, stored y-major: yc_[j] is the
// coefficient of y^j, a polynomial in x.
class BPoly {
 public:
  BPoly() = default;
  explicit BPoly(const UPoly& xpoly) {
    if (!xpoly.is_zero_poly()) yc_.assign(1, xpoly);
  }
  explicit BPoly(const Rat& c) : BPoly(UPoly(c)) {}
  explicit BPoly(std::vector<UPoly> yc) : yc_(std::move(yc)) { trim(); }

  static BPoly xvar() { return BPoly(UPoly::var()); }
  static BPoly yvar() {
    std::vector<UPoly> v(2);
    v[1] = UPoly(Rat(1));
    return BPoly(std::move(v));
  }

  bool is_zero_b() const { return yc_.empty(); }
  bool is_one() const { return deg_y() == 0 && yc_[0].degree() == 0 && yc_[0][0] == 1; }
  int deg_y() const { return yc_.empty() ? kNegInfDeg : static_cast<int>(yc_.size()) - 1; }
  int deg_x() const {
    int d = kNegInfDeg;
    for (const auto& c : yc_)
      if (!c.is_zero_poly()) d = std::max(d, c.degree());
    return d;
  }
  std::pair<int, int> bidegree() const { return {deg_x(), deg_y()}; }

  const UPoly& coeff_y(int j) const {
    static const UPoly zero;
    if (j < 0 || j >= static_cast<int>(yc_.size())) return zero;
    return yc_[j];
  }
  void set_coeff_y(int j, const UPoly& c) {
    if (j >= static_cast<int>(yc_.size())) {
      if (c.is_zero_poly()) return;
      yc_.resize(j + 1);
    }
    yc_[j] = c;
    trim();
  }
  const std::vector<UPoly>& ycoeffs() const { return yc_; }
  const UPoly& lc_y() const {
    if (yc_.empty()) throw InternalError("lc_y of zero polynomial");
    return yc_.back();
  }

  friend BPoly operator+(const BPoly& a, const BPoly& b);
  friend BPoly operator-(const BPoly& a, const BPoly& b);
  friend BPoly operator*(const BPoly& a, const BPoly& b);
  BPoly operator-() const;
  friend BPoly operator*(const UPoly& s, const BPoly& a);
  friend BPoly operator*(const Rat& s, const BPoly& a);
  BPoly& operator+=(const BPoly& b) { return *this = *this + b; }
  BPoly& operator-=(const BPoly& b) { return *this = *this - b; }
  BPoly& operator*=(const BPoly& b) { return *this = *this * b; }
  friend bool operator==(const BPoly& a, const BPoly& b) { return a.yc_ == b.yc_; }
  friend bool operator!=(const BPoly& a, const BPoly& b) { return !(a == b); }

  BPoly derivative_y() const;
  BPoly derivative_x() const;
  BPoly shifted_up_y(int k) const;
  BPoly swap_xy() const;  // exchange the roles of x and y
  BPoly pow(unsigned e) const;

  UPoly eval_x(const Rat& x0) const;          // polynomial in y over Q
  BPoly subst_y_rat(const Rat& y0) const;     // not used often; evaluate y

 private:
  std::vector<UPoly> yc_;
  void trim() {
    while (!yc_.empty() && yc_.back().is_zero_poly()) yc_.pop_back();
  }
};

inline bool is_zero(const BPoly& p) { return p.is_zero_b(); }

// content of the coefficient list (gcd over Q[x]), integer-primitive, lc > 0
UPoly content_y(const BPoly& f);
BPoly primitive_part_y(const BPoly& f);  // f / content_y(f); keeps rational scale in the part

// f = t(y) * T(x,y) with t the content of f as a polynomial in x over Q[y]
void content_primitive_x(const BPoly& f, UPoly& t_in_y, BPoly& T);

// exact division; throws InternalError when not exact
BPoly bpoly_divexact(const BPoly& a, const BPoly& b);
BPoly bpoly_div_xpoly(const BPoly& a, const UPoly& s);

// full gcd in Q[x,y] (Gauss: content gcd times primitive-PRS gcd in y),
// integer-primitive and sign-normalized
BPoly gcd_y(const BPoly& a, const BPoly& b);

// f = scale * prim with prim having integer coefficients, overall content 1,
// and positive leading (top y, then top x) coefficient
std::pair<BPoly, Rat> bpoly_int_primitive(const BPoly& f);

// conversions to/from polynomials in y over k(x)
YPolyX ypolyx_from_bpoly(const BPoly& f);
void bpoly_from_ypolyx(const YPolyX& f, BPoly& num, UPoly& den);  // f = num/den, den in Q[x]
YPolyX ypolyx_scale(const BPoly& num, const UPoly& den);          // num/den as YPolyX

std::string to_string(const BPoly& f);  // debugging aid

// squarefree decomposition w.r.t. y: Q = content * Q_1 * Q_2^2 * ... * Q_m^m
// with the Q_i squarefree, pairwise coprime, primitive w.r.t. y (some may be 1)
struct SqfDecomp {
  UPoly content_x;           // content of Q w.r.t. y (in Q[x], up to the rational scale)
  Rat scale;                 // rational factor so Q = scale * content_x * prod parts[i]^(i+1)
  std::vector<BPoly> parts;  // parts[i] = Q_{i+1}, integer-primitive, sign-normalized

  int m() const { return static_cast<int>(parts.size()); }
  BPoly qstar() const;   // prod Q_i (the squarefree part, content excluded)
  BPoly qminus() const;  // Q / Q* (content included)
  std::vector<BPoly> deflation_quotients() const;  // Q̂_i = Q*/Q_i
};

SqfDecomp squarefree_decomp_y(const BPoly& q);

}  // namespace ratel

#endif
