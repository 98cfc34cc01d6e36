#ifndef RATEL_DIFFOP_HPP
#define RATEL_DIFFOP_HPP

#include "ratel/rfunc.hpp"

namespace ratel {

// Linear differential operator sum_i c_i(x) Dx^i with c_i in Q[x],
// acting on functions of x (and bivariate rational functions, where y is a
// transparent parameter).  Commutation rule: Dx * a(x) = a * Dx + a'.
class DiffOp {
 public:
  DiffOp() = default;
  explicit DiffOp(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }
  static DiffOp identity() { return DiffOp({UPoly(Rat(1))}); }
  static DiffOp dx() { return DiffOp({UPoly(), UPoly(Rat(1))}); }
  static DiffOp from_xpoly(const UPoly& a) { return DiffOp({a}); }

  bool is_zero_op() const { return c_.empty(); }
  int order() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
  int deg_x() const {
    int d = kNegInfDeg;
    for (const auto& c : c_)
      if (!c.is_zero_poly()) d = std::max(d, c.degree());
    return d;
  }
  const UPoly& coeff(int i) const {
    static const UPoly zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }
  const std::vector<UPoly>& coeffs() const { return c_; }

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const UPoly& s, const DiffOp& a);
  friend DiffOp operator*(const Rat& s, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

 private:
  std::vector<UPoly> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero_poly()) c_.pop_back();
  }
};

// noncommutative product (a then b applied first: (ore_mul(a,b))(f) = a(b(f)))
DiffOp ore_mul(const DiffOp& a, const DiffOp& b);

// divide by the joint integer*polynomial content and normalize the sign of
// the leading coefficient's leading term to +
DiffOp primitivize(const DiffOp& L);
// same, also reporting the removed factor: input = content * output
DiffOp primitivize(const DiffOp& L, XFrac* content);

RFunc op_apply(const DiffOp& L, const RFunc& f);
YPolyX op_apply_poly(const DiffOp& L, const YPolyX& p);  // y-polynomial argument

// operator with coefficients in k(x); needed for right division
struct XDiffOp {
  std::vector<XFrac> c;
  int order() const { return c.empty() ? kNegInfDeg : static_cast<int>(c.size()) - 1; }
  void trim() {
    while (!c.empty() && c.back().is_zero_frac()) c.pop_back();
  }
  bool is_zero_op() const { return c.empty(); }
};

XDiffOp xdiff_from(const DiffOp& L);
XDiffOp ore_mul_x(const XDiffOp& a, const XDiffOp& b);
XDiffOp xop_sub(const XDiffOp& a, const XDiffOp& b);

// right division A = quo * B + rem over k(x); requires B != 0
void op_right_divide(const DiffOp& a, const DiffOp& b, XDiffOp& quo, XDiffOp& rem);
bool right_divides(const DiffOp& b, const DiffOp& a);  // rem(a, b) == 0

std::string to_string(const DiffOp& L);

}  // namespace ratel

#endif
