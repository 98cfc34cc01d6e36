#ifndef RATEL_HERMITE_HPP
#define RATEL_HERMITE_HPP

#include <string>

#include "ratel/rfunc.hpp"

namespace ratel {
namespace hermite {

// One reduction: f = D_y(g) + r with r proper and den(r) squarefree w.r.t. y.
struct Reduction {
  RFunc g;
  RFunc r;
};

enum class Method { Classic, LinearSystem, EvalInterp };

// Reduce an arbitrary rational function.  The y-polynomial part of f always
// has a polynomial antiderivative in y, so it folds into g.
Reduction reduce(const RFunc& f, Method method = Method::EvalInterp);

// contract check used by tests and the CLI verifier
bool check_reduction(const RFunc& f, const Reduction& red, std::string* why = nullptr);

// Structured output for a proper P/Q: g = A/Q⁻ and r = a/Q* with
// A, a in k(x)[y], deg_y(A) < deg_y(Q⁻), deg_y(a) < deg_y(Q*).
// qminus carries the x-content and rational scale so qminus * qstar == Q.
struct StructuredPair {
  YPolyX A;
  YPolyX a;
  BPoly qminus;
  BPoly qstar;
};

StructuredPair reduce_structured(const BPoly& P, const BPoly& Q, Method method);

// Same reduction when the multiple/squarefree split of the denominator is
// already known: (qminus, qstar) must be exactly what squarefree_decomp_y
// reports for qminus * qstar.  The telescoping loop reduces over (Q*)^2
// every iteration, whose split is (Q*, Q*), so recomputing the bivariate
// gcd there would be wasted work.
StructuredPair reduce_with_parts(const BPoly& P, const BPoly& qminus, const BPoly& qstar,
                                 Method method);

// Classic quadratic Hermite reduction over an arbitrary coefficient field:
// A/D = D_y(gnum/gden) + rnum/rden with gden the (monic) multiple part of D
// and rden = D/gden.  Requires deg(A) < deg(D), deg(D) >= 1.
template <class K>
struct RawPair {
  Poly<K> gnum, gden, rnum, rden;
};
template <class K>
RawPair<K> classic(const Poly<K>& A, const Poly<K>& D);

// x0 is lucky when the leading y-coefficient of Q does not vanish and the
// multiple-part degree of Q(x0, y) matches the generic one
bool is_lucky(const BPoly& Q, int dy_minus, const Rat& x0);
bool is_lucky(const BPoly& Q, const Rat& x0);  // computes dy_minus itself

int count_unlucky_in_range(const BPoly& Q, long hi);  // unlucky integers in [0, hi]

}  // namespace hermite
}  // namespace ratel

#endif
