#include "ratel/upoly.hpp"

#include <algorithm>
#include <cstdint>

namespace ratel {

std::pair<IntVec, Rat> to_int_primitive(const UPoly& f) {
  if (f.is_zero_poly()) return {IntVec{}, Rat(0)};
  Int den_lcm = 1;
  for (const Rat& c : f.coeffs())
    if (sgn(c) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  IntVec v(f.size());
  Int cont = 0;
  for (size_t i = 0; i < f.size(); i++) {
    Rat s = f.coeffs()[i] * den_lcm;
    RATEL_CHECK(s.get_den() == 1, "denominator clearing");
    v[i] = s.get_num();
    mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), v[i].get_mpz_t());
  }
  if (sgn(v.back()) < 0) cont = -cont;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
  Rat scale(cont, den_lcm);
  scale.canonicalize();
  return {std::move(v), scale};
}

UPoly upoly_from_int(const IntVec& v) {
  std::vector<Rat> c(v.size());
  for (size_t i = 0; i < v.size(); i++) c[i] = Rat(v[i]);
  return UPoly(std::move(c));
}

UPoly upoly_primitive(const UPoly& f) { return upoly_from_int(to_int_primitive(f).first); }

// ---------------------------------------------------------------- mod p ----

namespace {

using u32 = uint32_t;
using u64 = uint64_t;

bool small_prime(u32 n) {
  if (n < 2) return false;
  for (u32 d = 2; (u64)d * d <= n; d++)
    if (n % d == 0) return false;
  return true;
}

// deterministic descending sequence of 31-bit primes
u32 nth_prime(size_t i) {
  static std::vector<u32> cache;
  static u32 next = 2147483647u;
  while (cache.size() <= i) {
    while (!small_prime(next)) next -= 2;
    cache.push_back(next);
    next -= 2;
  }
  return cache[i];
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}
u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

using ModPoly = std::vector<u64>;  // dense, trailing zeros trimmed

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_reduce(const IntVec& f, u32 p) {
  ModPoly r(f.size());
  for (size_t i = 0; i < f.size(); i++) {
    long m = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    r[i] = (u64)m;
  }
  mp_trim(r);
  return r;
}

// monic gcd mod p
ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    // a mod b
    u64 binv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = a.back() * binv % p;
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); i++) {
        u64 t = f * b[i] % p;
        a[off + i] = (a[off + i] + p - t) % p;
      }
      mp_trim(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
    mp_trim(b);
  }
  if (!a.empty()) {
    u64 inv = inv_mod(a.back(), p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

Int sym_lift(const Int& r, const Int& m) {  // representative in (-m/2, m/2]
  Int h = m / 2;
  if (r > h) return r - m;
  return r;
}

}  // namespace

bool int_poly_divides(const IntVec& g, const IntVec& a) {
  if (a.empty()) return true;
  if (g.empty() || g.size() > a.size()) return false;
  IntVec r = a;
  const Int& glc = g.back();
  Int q, rem;
  for (size_t t = a.size(); t >= g.size(); t--) {
    size_t top = t - 1;
    if (r[top] == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[top].get_mpz_t(), glc.get_mpz_t());
    if (rem != 0) return false;
    size_t off = top + 1 - g.size();
    for (size_t i = 0; i < g.size(); i++) r[off + i] -= q * g[i];
  }
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero_poly()) return upoly_primitive(b);
  if (b.is_zero_poly()) return upoly_primitive(a);
  IntVec A = to_int_primitive(a).first;
  IntVec B = to_int_primitive(b).first;
  if (A.size() == 1 || B.size() == 1) return UPoly(Rat(1));

  Int lg;
  mpz_gcd(lg.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

  IntVec crt;           // symmetric-lifted candidate (scaled by lg)
  Int modulus = 0;      // product of primes used
  size_t crt_deg = SIZE_MAX;
  for (size_t pi = 0;; pi++) {
    RATEL_CHECK(pi < 10000, "modular gcd: prime supply exhausted");
    deadline_check();
    u32 p = nth_prime(pi);
    if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0)
      continue;
    ModPoly gp = mp_gcd(mod_reduce(A, p), mod_reduce(B, p), p);
    if (gp.size() == 1) return UPoly(Rat(1));  // coprime primitive parts
    if (gp.size() > crt_deg) continue;         // unlucky prime
    u64 scale = mpz_fdiv_ui(lg.get_mpz_t(), p);
    for (auto& x : gp) x = x * scale % p;
    bool fresh = gp.size() < crt_deg;
    if (fresh) {
      crt.assign(gp.size(), Int(0));
      modulus = 1;
      crt_deg = gp.size();
    }
    // CRT-merge gp into crt
    bool changed = false;
    Int newmod = modulus * p;
    u64 m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), p);
    u64 minv = inv_mod(m_mod_p, p);
    for (size_t i = 0; i < gp.size(); i++) {
      u64 cur_mod_p = mpz_fdiv_ui(crt[i].get_mpz_t(), p);  // non-negative even for crt[i] < 0
      u64 diff = (gp[i] + p - cur_mod_p) % p;
      if (diff != 0) {
        Int t = crt[i] + modulus * Int((unsigned long)(diff * minv % p));
        crt[i] = sym_lift(t, newmod);
        changed = true;
      }
      // diff == 0: the old symmetric representative stays valid mod newmod
    }
    modulus = newmod;
    if (!changed && !fresh) {
      // stabilized: verify
      IntVec cand = crt;
      Int cont = 0;
      for (const auto& x : cand) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), x.get_mpz_t());
      if (sgn(cand.back()) < 0) cont = -cont;
      if (cont != 0)
        for (auto& x : cand) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
      if (int_poly_divides(cand, A) && int_poly_divides(cand, B)) return upoly_from_int(cand);
    }
  }
}

UPoly upoly_lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return UPoly();
  UPoly g = upoly_gcd(a, b);
  return upoly_primitive(a * (b / g));
}

Rat upoly_eval(const UPoly& f, const Rat& x) { return f.eval(x); }

UPoly upoly_from_string_coeffs(const std::vector<std::string>& coeffs) {
  std::vector<Rat> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); i++) c[i] = rat_from_string(coeffs[i]);
  return UPoly(std::move(c));
}

UPoly newton_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs) {
  RATEL_CHECK(xs.size() == vs.size(), "interpolation point/value mismatch");
  size_t n = xs.size();
  if (n == 0) return UPoly();
  // divided differences in place
  std::vector<Rat> dd = vs;
  for (size_t k = 1; k < n; k++) {
    for (size_t i = n - 1; i >= k; i--) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
    deadline_check();
  }
  // horner on the newton basis
  UPoly r{dd[n - 1]};
  for (size_t i = n - 1; i-- > 0;) {
    UPoly lin(std::vector<Rat>{-xs[i], Rat(1)});
    r = r * lin + UPoly(dd[i]);
  }
  return r;
}

std::string to_string(const UPoly& f, const std::string& var) {
  if (f.is_zero_poly()) return "0";
  std::string out;
  for (int i = f.degree(); i >= 0; i--) {
    const Rat& c = f[i];
    if (sgn(c) == 0) continue;
    Rat a = abs(c);
    if (out.empty())
      out += (sgn(c) < 0 ? "-" : "");
    else
      out += (sgn(c) < 0 ? " - " : " + ");
    bool coeff1 = (a == 1);
    if (i == 0 || !coeff1) out += a.get_str();
    if (i > 0) {
      if (!coeff1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace ratel
