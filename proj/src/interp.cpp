#include "ratel/interp.hpp"

namespace ratel {
namespace algebra {

std::optional<XFrac> rational_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs,
                                          int num_bound, int den_bound) {
  RATEL_CHECK(xs.size() == vs.size(), "interpolation point/value mismatch");
  if (num_bound < 0 || den_bound < 0) return std::nullopt;
  if (static_cast<int>(xs.size()) < num_bound + den_bound + 1)
    throw InputError("rational interpolation needs num_bound + den_bound + 1 points");

  // G = prod (x - x_i), F = plain interpolant; run the extended euclidean
  // scheme on (G, F) until the remainder degree drops to num_bound
  UPoly G{Rat(1)};
  for (const Rat& x : xs) G = G * UPoly(std::vector<Rat>{-x, Rat(1)});
  UPoly F = newton_interpolate(xs, vs);

  UPoly r0 = G, r1 = F;
  UPoly t0, t1{Rat(1)};
  while (!r1.is_zero_poly() && r1.degree() > num_bound) {
    UPoly q, r;
    UPoly::divrem(r0, r1, q, r);
    UPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t2);
    deadline_check();
  }
  // r1 = t1 * F (mod G); candidate num/den = r1/t1
  if (t1.is_zero_poly()) return std::nullopt;
  UPoly g = upoly_gcd(r1, t1);
  UPoly num = r1, den = t1;
  if (g.degree() > 0) {
    num = num / g;
    den = den / g;
  }
  if (!num.is_zero_poly() && num.degree() > num_bound) return std::nullopt;
  if (den.degree() > den_bound) return std::nullopt;
  for (size_t i = 0; i < xs.size(); i++) {
    Rat dv = den.eval(xs[i]);
    if (sgn(dv) == 0) return std::nullopt;  // unreachable pole at a sample point
    if (num.eval(xs[i]) != vs[i] * dv) return std::nullopt;
  }
  return XFrac(num, den);
}

}  // namespace algebra
}  // namespace ratel
