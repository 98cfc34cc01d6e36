#ifndef RATEL_DIAG_HPP
#define RATEL_DIAG_HPP

#include <vector>

#include "ratel/telescope.hpp"

namespace ratel {
namespace diag {

// Diagonals of bivariate rational power series.  For f = sum f_{ij} x^i y^j
// with den(f)(0,0) != 0, the diagonal is the univariate series
// diag(f) = sum_n f_{nn} x^n.  Any telescoper of the substituted function
// f(y, x/y)/y (or of f(y/x, x)/x) annihilates diag(f), so an annihilating
// operator comes out of the telescoping backends for free.

// Which substituted function to telescope.
enum class Subst {
  y_xy,  // f(y, x/y) / y
  yx_x,  // f(y/x, x) / x
};

// First coefficients of diag(f): coeffs[n] = f_{nn}.
struct SeriesVec {
  std::vector<Rat> coeffs;
  int size() const { return static_cast<int>(coeffs.size()); }
};

// The substituted rational function, cleared of the fractional powers the
// substitution introduces and put into canonical form.
// Rejects f whose denominator vanishes at the origin (not a power series).
RFunc diagonal_substitute(const RFunc& f, Subst variant = Subst::y_xy);

// coeffs[n] = f_{nn} for n = 0..terms-1, by the linear recurrence the
// denominator imposes on the coefficient grid (den * series = num).
SeriesVec diagonal_series(const RFunc& f, int terms);

// Annihilator of diag(f): the telescoper of diagonal_substitute(f, variant)
// computed by the chosen backend.  The certificate never leaves the backend.
DiffOp diagonal_annihilator(const RFunc& f, Method m = Method::Hermite,
                            Subst variant = Subst::y_xy);

// Smallest series length ode_check accepts for L (order + coefficient
// degree + a safety margin, so the check exercises the induced recurrence
// past its initial segment).
int ode_check_min_terms(const DiffOp& L);

// Apply L = sum eta_i(x) Dx^i termwise to the truncated series s and test
// that every fully determined coefficient of the image vanishes.  Rejects
// the zero operator and series shorter than ode_check_min_terms(L).
bool ode_check(const DiffOp& L, const SeriesVec& s);

}  // namespace diag
}  // namespace ratel

#endif
