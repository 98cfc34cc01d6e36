#ifndef RATEL_NONMIN_HPP
#define RATEL_NONMIN_HPP

#include <array>
#include <map>

#include "ratel/diffop.hpp"
#include "ratel/ht.hpp"

namespace ratel {
namespace nonmin {

// Operator in Q[x]<Dx, Dy>, stored as (x-power i, Dx-power j, Dy-power l) ->
// coefficient.  Since the coefficients are free of y, Dy is central, so the
// monomial order inside a term does not matter.
struct BivarOp {
  std::map<std::array<int, 3>, Rat> terms;
  bool is_zero() const { return terms.empty(); }
};

// Numerator H of x^i Dx^j Dy^l (f) = H / Q^(j+l+1) over the denominator Q of
// f, computed by the derivative recurrences without reduction.  With
// (dx, dy) the bidegree of f, the result satisfies
//   deg_x(H) <= (j+l+1) dx + i - j   and   deg_y(H) <= (j+l+1) dy - l,
// both asserted.  f need not be proper.
BPoly monomial_action_numerator(const RFunc& f, int i, int j, int l);

// dimension bookkeeping for the two ansatz families ("support" counts the
// candidate monomials, "image" the coefficient space their action spans)
long support_size_total(int nu);                             // i+j+l <= nu
long image_size_total(int nu, int dx, int dy);
long support_size_boxed(int kappa, int nu);                  // i <= kappa, j+l <= nu
long image_size_boxed(int kappa, int nu, int dx, int dy);

struct AnnihilatorResult {
  DiffOp L;         // telescoper extracted from A
  RFunc g;          // certificate: L(f) = Dy(g), verified
  BivarOp A;        // the annihilating operator found
  int nu = 0;       // support level of the hit
  int kappa = -1;   // x-degree cap of the hit (-1 for the total-degree scan)
  double seconds = 0.0;
};

// Nonminimal telescoper via an annihilator of total degree <= nu in
// (x, Dx, Dy).  Scans nu = 1, 2, ... up to 6(dx+1)(dy+1), where a hit is
// guaranteed by dimension count; each level solves one exact nullspace
// problem over Q.
AnnihilatorResult lipshitz_telescoper(const RFunc& f);

// Nonminimal telescoper via an annihilator with deg_x <= kappa and
// Dx/Dy-degree <= nu.  Scans nu = 1..max(1, 6 dy) outermost and finds the
// smallest kappa <= 3 dx dy with a nonzero kernel (binary search over a
// modular rank probe, confirmed exactly), guaranteeing
// deg_Dx(L) <= 6 dy and deg_x(L) <= 3 dx dy at the cap.
AnnihilatorResult cubic_telescoper(const RFunc& f);

// Split A = Dy^r (L + Dy R) with L nonzero and free of Dy, and turn the
// annihilation A(f) = 0 into a telescoping identity: h := L(f) + Dy(R(f))
// is a polynomial in y over Q(x) of degree < r, and
// g := (y-antiderivative of h) - R(f) satisfies L(f) = Dy(g), checked
// exactly.  Requires A != 0 and A(f) = 0.
std::pair<DiffOp, RFunc> extract_telescoper(const BivarOp& A, const RFunc& f);

}  // namespace nonmin
}  // namespace ratel

#endif
