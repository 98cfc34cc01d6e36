#ifndef RATEL_UPOLY_HPP
#define RATEL_UPOLY_HPP

#include <limits>
#include <utility>
#include <vector>

#include "ratel/rat.hpp"

namespace ratel {

// Dense univariate polynomial over a field K.  The zero polynomial has an
// empty coefficient vector and degree kNegInfDeg (a sentinel well below any
// real degree, so bounds like deg(a)+deg(b) stay safely negative; we never
// use -1 for it).
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const K& a) {
    if (!is_zero(a)) c_.assign(1, a);
  }
  explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly var() {  // the generator t
    std::vector<K> v(2, K(0));
    v[1] = K(1);
    return Poly(std::move(v));
  }

  bool is_zero_poly() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kNegInfDeg : static_cast<int>(c_.size()) - 1; }
  size_t size() const { return c_.size(); }

  const K& operator[](int i) const {
    static const K zero = K(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
  }
  void set_coeff(int i, const K& a) {
    if (i >= static_cast<int>(c_.size())) {
      if (is_zero(a)) return;
      c_.resize(i + 1, K(0));
    }
    c_[i] = a;
    trim();
  }
  const std::vector<K>& coeffs() const { return c_; }

  const K& lc() const {
    if (c_.empty()) throw InternalError("lc of zero polynomial");
    return c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); i++) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); i++) r[i] = r[i] + b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); i++) r[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); i++) r[i] = r[i] - b.c_[i];
    return Poly(std::move(r));
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c_.empty() || b.c_.empty()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); i++) {
      if (is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); j++) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const K& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  // multiply by t^k
  Poly shifted_up(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<K> r(c_.size() + k, K(0));
    for (size_t i = 0; i < c_.size(); i++) r[i + k] = c_[i];
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1, K(0));
    for (size_t i = 1; i < c_.size(); i++) r[i - 1] = K(static_cast<int>(i)) * c_[i];
    return Poly(std::move(r));
  }

  K eval(const K& t) const {
    K r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * t + c_[i];
    return r;
  }

  // euclidean division by a nonzero divisor; exact over the field K
  static void divrem(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero_poly()) throw InternalError("polynomial division by zero");
    q = Poly();
    r = a;
    int db = b.degree();
    const K& blc = b.lc();
    while (!r.is_zero_poly() && r.degree() >= db) {
      int k = r.degree() - db;
      K f = r.lc() / blc;
      q.set_coeff(k, f);
      // r -= f * t^k * b
      std::vector<K> rc = r.c_;
      for (size_t i = 0; i < b.c_.size(); i++) rc[i + k] = rc[i + k] - f * b.c_[i];
      rc.pop_back();
      r = Poly(std::move(rc));
    }
  }
  friend Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    divrem(a, b, q, r);
    if (!r.is_zero_poly()) throw InternalError("inexact polynomial division");
    return q;
  }

  Poly monic() const {
    if (c_.empty()) return *this;
    K inv = K(1) / lc();
    return inv * *this;
  }

  Poly pow(unsigned e) const {
    Poly r{K(1)};
    Poly b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

 private:
  std::vector<K> c_;
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
};

template <class K>
bool is_zero(const Poly<K>& p) {
  return p.is_zero_poly();
}

// antiderivative with zero constant term
template <class K>
Poly<K> antiderivative(const Poly<K>& f) {
  if (f.is_zero_poly()) return f;
  std::vector<K> r(f.size() + 1, K(0));
  for (size_t i = 0; i < f.size(); i++) r[i + 1] = f.coeffs()[i] / K(static_cast<int>(i) + 1);
  return Poly<K>(std::move(r));
}

// plain monic-remainder Euclid; fine for small degrees over any field
template <class K>
Poly<K> gcd_monic(Poly<K> a, Poly<K> b) {
  while (!b.is_zero_poly()) {
    Poly<K> q, r;
    Poly<K>::divrem(a, b, q, r);
    a = std::move(b);
    b = r.is_zero_poly() ? r : r.monic();
    deadline_check();
  }
  return a.monic();
}

// extended euclid: g = s*a + t*b with g monic (or zero)
template <class K>
void xgcd(const Poly<K>& a, const Poly<K>& b, Poly<K>& g, Poly<K>& s, Poly<K>& t) {
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0{K(1)}, s1, t0, t1{K(1)};
  while (!r1.is_zero_poly()) {
    Poly<K> q, r;
    Poly<K>::divrem(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    deadline_check();
  }
  g = r0;
  s = s0;
  t = t0;
  if (!g.is_zero_poly()) {
    K inv = K(1) / g.lc();
    g = inv * g;
    s = inv * s;
    t = inv * t;
  }
}

// minimal-degree solution (b, c) of b*s + c*t = a with deg(b) < deg(t);
// requires gcd(s,t) | a
template <class K>
void solve_diophantine(const Poly<K>& s, const Poly<K>& t, const Poly<K>& a, Poly<K>& b,
                       Poly<K>& c) {
  Poly<K> g, u, v;
  xgcd(s, t, g, u, v);
  Poly<K> q, r;
  Poly<K>::divrem(a, g, q, r);
  if (!r.is_zero_poly()) throw InternalError("diophantine: gcd does not divide rhs");
  Poly<K> b0 = u * q;
  Poly<K>::divrem(b0, t, q, b);
  c = (a - b * s) / t;
}

using UPoly = Poly<Rat>;
using IntVec = std::vector<Int>;

// f = scale * prim with prim integer, content 1, positive leading coefficient
std::pair<IntVec, Rat> to_int_primitive(const UPoly& f);
UPoly upoly_from_int(const IntVec& v);
UPoly upoly_primitive(const UPoly& f);  // drops the scale

// gcd over Q[x] via modular images, verified by exact trial division;
// result is integer-primitive with positive leading coefficient
UPoly upoly_gcd(const UPoly& a, const UPoly& b);
UPoly upoly_lcm(const UPoly& a, const UPoly& b);

bool int_poly_divides(const IntVec& g, const IntVec& a);  // exact division test over Z

Rat upoly_eval(const UPoly& f, const Rat& x);
UPoly upoly_from_string_coeffs(const std::vector<std::string>& coeffs);

// Newton interpolation: the unique polynomial of degree < n through
// (xs[i], vs[i]); xs must be pairwise distinct
UPoly newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs);

std::string to_string(const UPoly& f, const std::string& var = "x");

}  // namespace ratel

#endif
