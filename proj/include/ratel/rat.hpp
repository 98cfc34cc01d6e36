#ifndef RATEL_RAT_HPP
#define RATEL_RAT_HPP

#include <gmpxx.h>

#include <string>

#include "ratel/common.hpp"

namespace ratel {

// Exact rational scalar.  mpq_class keeps gcd(num,den)=1 and den>0 on every
// operation, which is exactly the canonical form we need.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& a) { return sgn(a) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& a) { return a.get_str(); }
inline std::string to_string(const Int& a) { return a.get_str(); }

// number of decimal digits of |n| (0 -> 1)
inline int digits10(const Int& n) {
  if (sgn(n) == 0) return 1;
  return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 10));
}

inline Int pow_int(const Int& b, unsigned e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// gcd on Q as a fractional ideal: largest r >= 0 with a/r, b/r integers
inline Rat rat_gcd(const Rat& a, const Rat& b) {
  Rat r;
  Int x = a.get_num() * b.get_den();
  Int y = b.get_num() * a.get_den();
  mpz_gcd(r.get_num_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  r.get_den() = a.get_den() * b.get_den();
  r.canonicalize();
  return r;
}

inline Rat pow_rat(const Rat& b, unsigned e) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), e);
  return r;
}

}  // namespace ratel

#endif
