#ifndef RATEL_XFRAC_HPP
#define RATEL_XFRAC_HPP

#include "ratel/upoly.hpp"

namespace ratel {

// Element of k(x): num/den with gcd(num,den)=1 and den integer-primitive
// with positive leading coefficient.  Canonical, so == is memberwise.
class XFrac {
 public:
  XFrac() : num_(), den_(Rat(1)) {}
  XFrac(int n) : num_(Rat(n)), den_(Rat(1)) {}
  explicit XFrac(const Rat& n) : num_(n), den_(Rat(1)) {}
  explicit XFrac(UPoly n) : num_(std::move(n)), den_(Rat(1)) {}
  XFrac(UPoly n, UPoly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero_poly()) throw InputError("zero denominator in k(x)");
    reduce();
  }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero_frac() const { return num_.is_zero_poly(); }
  bool is_poly() const { return den_.degree() == 0; }
  UPoly as_poly() const {
    if (!is_poly()) throw InternalError("k(x) element is not polynomial");
    Rat inv = 1 / den_[0];
    return inv * num_;
  }

  friend XFrac operator+(const XFrac& a, const XFrac& b) {
    return XFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend XFrac operator-(const XFrac& a, const XFrac& b) {
    return XFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend XFrac operator*(const XFrac& a, const XFrac& b) {
    if (a.is_zero_frac() || b.is_zero_frac()) return XFrac();
    return XFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend XFrac operator/(const XFrac& a, const XFrac& b) {
    if (b.is_zero_frac()) throw InternalError("division by zero in k(x)");
    if (a.is_zero_frac()) return XFrac();
    return XFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  XFrac operator-() const {
    XFrac r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend bool operator==(const XFrac& a, const XFrac& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const XFrac& a, const XFrac& b) { return !(a == b); }

  // d/dx by the quotient rule
  XFrac derivative() const {
    return XFrac(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  Rat eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (sgn(d) == 0) throw InternalError("k(x) evaluation at a pole");
    return num_.eval(x) / d;
  }

 private:
  UPoly num_, den_;
  void reduce() {
    if (num_.is_zero_poly()) {
      den_ = UPoly(Rat(1));
      return;
    }
    UPoly g = upoly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    auto [prim, scale] = to_int_primitive(den_);
    den_ = upoly_from_int(prim);
    num_ = Rat(1 / scale) * num_;
  }
};

inline bool is_zero(const XFrac& a) { return a.is_zero_frac(); }

// polynomial in y with coefficients in k(x)
using YPolyX = Poly<XFrac>;

}  // namespace ratel

#endif
