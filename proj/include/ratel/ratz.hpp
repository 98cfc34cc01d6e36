#ifndef RATEL_RATZ_HPP
#define RATEL_RATZ_HPP

#include <vector>

#include "ratel/ht.hpp"

namespace ratel {
namespace ratz {

// Differential Gosper data for a candidate combination F = sum_i c_i Dx^i(f)
// at order rho: D_y(F)/F = D_y(N)/N + H/Qstar with N = sum_i c_i N_i.  The
// numerators are kept per derivative index so the c_i stay symbolic.
struct GosperForm {
  std::vector<BPoly> numerators;  // N_0..N_rho with Dx^i(f) = N_i/(Q T*^i)
  BPoly H;
  BPoly Qstar;  // squarefree part of the denominator of f
};

// Numerators N_0..N_upto of the x-derivatives of a proper f = P/Q over the
// common denominators Q*(T*)^i, where T* is the x-primitive part of the
// squarefree part Q* of Q.  They satisfy the polynomial recurrence
//   N_{i+1} = Dx(N_i) T* - N_i (E + i Dx(T*)),   E = T* Dx(T) / T,
// with T the x-primitive part of Q, so no fraction ever appears.
std::vector<BPoly> derivative_numerators_T(const RFunc& f, int upto);

GosperForm gosper_form(const RFunc& f, int rho);

// gcd_y(Q*, H - tau * D_y(Q*)) is constant for every tau = 0..tau_max; this
// is the shift-free condition that keeps the certificate denominator inside
// Q^- (T*)^rho times the input denominator.
bool gosper_certificate_check(const GosperForm& form, int tau_max);

// Minimal telescoper via a bounded polynomial ansatz: for each order l
// solve  sum_i eta_i N_i (T*)^(l-i) = Q* Dy(z) + (Dy(Q*) + H_l) z  for
// z in k(x)[y] of y-degree <= beta_l and eta not all zero.  Emits the same
// primitive L and the same reduced certificate as ht::hermite_telescoping.
ht::TelescoperResult rat_az(const RFunc& f);

}  // namespace ratz
}  // namespace ratel

#endif
