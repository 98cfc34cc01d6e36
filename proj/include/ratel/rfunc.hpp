#ifndef RATEL_RFUNC_HPP
#define RATEL_RFUNC_HPP

#include "ratel/bpoly.hpp"

namespace ratel {

// Rational function in x,y over Q.  Canonical form: gcd(num,den)=1 in
// Q[x,y], den integer-primitive with positive leading (y, then x)
// coefficient; any rational content lives in num.  The zero function is
// 0/1.  Note the denominator may carry a k[x] content (think 1/(x*y)):
// that content cannot move into the numerator of a polynomial fraction,
// so Hypothesis-(H) style preprocessing happens in split_x_content.
class RFunc {
 public:
  RFunc() : num_(), den_(Rat(1)) {}
  RFunc(BPoly num, BPoly den);
  explicit RFunc(const BPoly& poly) : num_(poly), den_(Rat(1)) {}

  const BPoly& num() const { return num_; }
  const BPoly& den() const { return den_; }
  bool is_zero_rf() const { return num_.is_zero_b(); }
  bool is_poly() const { return den_.is_one(); }

  friend RFunc operator+(const RFunc& a, const RFunc& b) {
    return RFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RFunc operator-(const RFunc& a, const RFunc& b) {
    return RFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RFunc operator*(const RFunc& a, const RFunc& b) {
    return RFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RFunc operator*(const Rat& s, const RFunc& a) { return RFunc(s * a.num_, a.den_); }
  friend RFunc operator*(const XFrac& s, const RFunc& a) {
    return RFunc(s.num() * a.num_, s.den() * a.den_);
  }
  RFunc operator-() const {
    RFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const RFunc& a, const RFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RFunc& a, const RFunc& b) { return !(a == b); }

  RFunc derivative_x() const {
    return RFunc(num_.derivative_x() * den_ - num_ * den_.derivative_x(), den_ * den_);
  }
  RFunc derivative_y() const {
    return RFunc(num_.derivative_y() * den_ - num_ * den_.derivative_y(), den_ * den_);
  }

 private:
  BPoly num_, den_;
};

// f = p(x)[y-polynomial part] + proper, with deg_y(num(proper)) < deg_y(den)
struct ProperSplit {
  YPolyX poly;
  RFunc proper;
};
ProperSplit make_proper(const RFunc& f);

// denominator = qx(x) * Q with Q primitive w.r.t. y; f = P / (qx * Q)
struct HForm {
  BPoly P;
  BPoly Q;   // y-primitive, integer-primitive
  UPoly qx;  // the k[x] content of the denominator
};
HForm split_x_content(const RFunc& f);

// numerator/denominator comparison without any gcd: a == b as fractions
bool rfunc_cross_equal(const BPoly& anum, const BPoly& aden, const BPoly& bnum,
                       const BPoly& bden);

}  // namespace ratel

#endif
