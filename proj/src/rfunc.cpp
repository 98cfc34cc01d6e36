#include "ratel/rfunc.hpp"

namespace ratel {

RFunc::RFunc(BPoly num, BPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero_b()) throw InputError("zero denominator");
  if (num_.is_zero_b()) {
    den_ = BPoly(Rat(1));
    return;
  }
  BPoly g = gcd_y(num_, den_);
  if (!g.is_one()) {
    num_ = bpoly_divexact(num_, g);
    den_ = bpoly_divexact(den_, g);
  }
  auto [dp, ds] = bpoly_int_primitive(den_);
  den_ = std::move(dp);
  if (!is_one(ds)) num_ = Rat(1 / ds) * num_;
}

ProperSplit make_proper(const RFunc& f) {
  ProperSplit out;
  if (f.is_zero_rf() || f.num().deg_y() < f.den().deg_y()) {
    out.proper = f;
    return out;
  }
  if (f.den().deg_y() == 0) {
    // denominator is a polynomial in x alone: f is already y-polynomial
    out.poly = ypolyx_scale(f.num(), f.den().coeff_y(0));
    out.proper = RFunc();
    return out;
  }
  // long division in y over k(x)
  YPolyX n = ypolyx_from_bpoly(f.num());
  YPolyX d = ypolyx_from_bpoly(f.den());
  YPolyX q, r;
  YPolyX::divrem(n, d, q, r);
  out.poly = q;
  BPoly rnum;
  UPoly rden;
  bpoly_from_ypolyx(r, rnum, rden);
  out.proper = RFunc(rnum, rden * f.den());
  return out;
}

HForm split_x_content(const RFunc& f) {
  HForm h;
  h.qx = content_y(f.den());
  h.Q = h.qx.degree() == 0 ? f.den() : bpoly_div_xpoly(f.den(), h.qx);
  h.P = f.num();
  return h;
}

bool rfunc_cross_equal(const BPoly& anum, const BPoly& aden, const BPoly& bnum,
                       const BPoly& bden) {
  return anum * bden == bnum * aden;
}

}  // namespace ratel
