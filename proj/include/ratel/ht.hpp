#ifndef RATEL_HT_HPP
#define RATEL_HT_HPP

#include <chrono>
#include <string>
#include <vector>

#include "ratel/diffop.hpp"
#include "ratel/hermite.hpp"

namespace ratel {
namespace ht {

// Certificate kept as an exact linear combination sum_t coeff_t * body_t.
// hermite_telescoping emits one term per (eta_j, Dx^{j-s}(gtilde_s)) pair,
// derivatives applied, so emitting this form needs no normalization work.
struct CertTerm {
  XFrac coeff;
  RFunc body;
};
struct CertificateSum {
  std::vector<CertTerm> terms;
};

// exact sum of all terms, fully reduced
RFunc normalize_certificate(const CertificateSum& c);

struct TelescoperResult {
  DiffOp L;  // primitive; L(f) = D_y(normalized certificate)
  CertificateSum certificate;
  int order = 0;
  std::string method;
  int rho0 = -1;   // lower bound on the order (-1 when not computed)
  int dy_star = 0; // cap on the order: deg_y of the squarefree part
  double seconds = 0;
};

struct Options {
  hermite::Method step_method = hermite::Method::EvalInterp;
  // Compute the cheap order lower bound first and skip dependence solving
  // below it.  Off only for testing; the bound is also reported in rho0.
  bool use_order_bound = true;
  // Verify Dx^i(f) = D_y(g_i) + a_i/Q* at every loop step (slow; tests only).
  bool check_loop_invariant = false;
};

// Minimal telescoper L with certificate g for a rational function f(x,y):
// L(f) = D_y(g), by iterated Hermite reduction of the x-derivatives of f.
// The order of L is minimal and bounded by deg_y of the squarefree part of
// the denominator.  Rejects f = 0.
TelescoperResult hermite_telescoping(const RFunc& f, const Options& opt = {});

// Lower bound for the minimal telescoper order: reduce Dx^i(f) specialized
// at the smallest lucky nonnegative integer x0 and return the first i where
// the residuals r_{0,0}..r_{0,i} become linearly dependent over Q.
int lower_order_bound(const RFunc& f);

// exact check of L(f) = D_y(g), by cross multiplication (no gcd)
bool verify_telescoper(const RFunc& f, const DiffOp& L, const RFunc& g);

// Shared result assembly for all telescoper backends: installs L and its
// order, appends the antiderivative of L applied to the y-polynomial part
// of the input, and stamps the elapsed wall time.
void finalize_result(TelescoperResult& res, DiffOp L, std::vector<CertTerm> terms,
                     const YPolyX& poly_part,
                     std::chrono::steady_clock::time_point t_start);

}  // namespace ht
}  // namespace ratel

#endif
