#include "ratel/diag.hpp"

namespace ratel {
namespace diag {

namespace {

void require_power_series(const RFunc& f) {
  if (f.den().coeff_y(0)[0] == 0)
    throw InputError("denominator vanishes at the origin: not a power series");
}

// y^s * p(y, x/y): the monomial x^i y^j of p lands on x^j y^{i-j+s}.
// Polynomial for any s >= deg_y(p).
BPoly substitute_y_xy(const BPoly& p, int s) {
  BPoly out;
  for (int j = 0; j <= p.deg_y(); j++) {
    const UPoly& pj = p.coeff_y(j);
    for (int i = 0; i <= pj.degree(); i++) {
      if (pj[i] == 0) continue;
      int yexp = i - j + s;
      UPoly row = out.coeff_y(yexp);
      row.set_coeff(j, row[j] + pj[i]);
      out.set_coeff_y(yexp, row);
    }
  }
  return out;
}

// x^s * p(y/x, x): the monomial x^i y^j of p lands on x^{j-i+s} y^i.
BPoly substitute_yx_x(const BPoly& p, int s) {
  BPoly out;
  for (int j = 0; j <= p.deg_y(); j++) {
    const UPoly& pj = p.coeff_y(j);
    for (int i = 0; i <= pj.degree(); i++) {
      if (pj[i] == 0) continue;
      UPoly row = out.coeff_y(i);
      row.set_coeff(j - i + s, row[j - i + s] + pj[i]);
      out.set_coeff_y(i, row);
    }
  }
  return out;
}

}  // namespace

RFunc diagonal_substitute(const RFunc& f, Subst variant) {
  require_power_series(f);
  const BPoly& p = f.num();
  const BPoly& q = f.den();
  if (variant == Subst::y_xy) {
    // f(y, x/y)/y = [y^s P(y, x/y)] / [y^{s+1} Q(y, x/y)]
    int s = std::max(std::max(p.deg_y(), q.deg_y()), 0);
    return RFunc(substitute_y_xy(p, s), substitute_y_xy(q, s).shifted_up_y(1));
  }
  // f(y/x, x)/x = [x^s P(y/x, x)] / [x^{s+1} Q(y/x, x)]
  int s = std::max(std::max(p.deg_x(), q.deg_x()), 0);
  return RFunc(substitute_yx_x(p, s), UPoly::var() * substitute_yx_x(q, s));
}

SeriesVec diagonal_series(const RFunc& f, int terms) {
  require_power_series(f);
  if (terms < 0) throw InputError("negative series length");
  SeriesVec out;
  if (terms == 0) return out;
  const BPoly& p = f.num();
  const BPoly& q = f.den();
  const Rat q00_inv = 1 / q.coeff_y(0)[0];
  // c[i][j], the coefficient grid of the series, filled row by row: each
  // entry only looks componentwise down and left, so the square suffices.
  std::vector<std::vector<Rat>> c(terms, std::vector<Rat>(terms));
  for (int i = 0; i < terms; i++) {
    for (int j = 0; j < terms; j++) {
      Rat acc = p.coeff_y(j)[i];
      for (int b = 0; b <= std::min(q.deg_y(), j); b++) {
        const UPoly& qb = q.coeff_y(b);
        for (int a = 0; a <= std::min(qb.degree(), i); a++) {
          if (a == 0 && b == 0) continue;
          if (qb[a] != 0) acc -= qb[a] * c[i - a][j - b];
        }
      }
      c[i][j] = acc * q00_inv;
    }
  }
  out.coeffs.reserve(terms);
  for (int n = 0; n < terms; n++) out.coeffs.push_back(c[n][n]);
  return out;
}

DiffOp diagonal_annihilator(const RFunc& f, Method m, Subst variant) {
  RFunc s = diagonal_substitute(f, variant);
  // The second substitution extracts the diagonal by integrating over the
  // FIRST argument, so its telescoping has the variable roles exchanged:
  // telescope the x<->y mirror (an x-telescoper of the unswapped function
  // annihilates row 0 of the coefficient grid, not the diagonal).
  if (variant == Subst::yx_x) s = RFunc(s.num().swap_xy(), s.den().swap_xy());
  return run_telescoper(s, m).L;
}

int ode_check_min_terms(const DiffOp& L) {
  if (L.is_zero_op()) throw InputError("ode_check on the zero operator");
  return L.order() + L.deg_x() + 5;
}

bool ode_check(const DiffOp& L, const SeriesVec& s) {
  int need = ode_check_min_terms(L);
  int n_terms = s.size();
  if (n_terms < need)
    throw InputError("series too short for ode_check: have " + std::to_string(n_terms) +
                     " terms, need at least " + std::to_string(need));
  const int ord = L.order();
  // coefficient of x^m in L(s): sum over i, d of eta_i[d] * n!/(n-i)! * c_n
  // with n = m + i - d; fully determined as long as m + ord < n_terms.
  for (int m = 0; m + ord < n_terms; m++) {
    Rat acc(0);
    for (int i = 0; i <= ord; i++) {
      const UPoly& eta = L.coeff(i);
      for (int d = 0; d <= eta.degree(); d++) {
        if (eta[d] == 0) continue;
        int n = m + i - d;
        if (n < 0 || n >= n_terms) continue;
        Rat fall(1);
        for (int t = 0; t < i; t++) fall *= Rat(n - t);
        acc += eta[d] * fall * s.coeffs[n];
      }
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace diag
}  // namespace ratel
