#ifndef RATEL_LINALG_HPP
#define RATEL_LINALG_HPP

#include <cstdint>
#include <optional>

#include "ratel/xfrac.hpp"

namespace ratel {
namespace linalg {

// dense matrix over Q[x], row-major
struct PMatrix {
  int rows = 0, cols = 0;
  std::vector<UPoly> a;

  PMatrix() = default;
  PMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  UPoly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const UPoly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// basis of the right nullspace over k(x), one primitive k[x] vector per free
// column (first nonzero entry has positive leading coefficient); computed by
// fraction-free (Bareiss) elimination, deterministic
std::vector<std::vector<UPoly>> nullspace(const PMatrix& m);

// rank of m evaluated at x0, over Q
int rank_probe(const PMatrix& m, const Rat& x0);

// One primitive kernel vector — the nullspace basis vector attached to the
// first free column, same scale and sign convention — or nullopt when the
// kernel is trivial.  Computed by rank probing plus Newton interpolation of
// determinant-scaled Cramer solutions sampled at integer points, verified
// exactly against m, so it always agrees with nullspace(m) while avoiding
// fraction-free elimination on large entries.  Deterministic; falls back to
// nullspace(m) when probing or reconstruction misbehaves.
std::optional<std::vector<UPoly>> kernel_vector(const PMatrix& m);

// scale a k(x) vector to a primitive k[x] vector (unique up to sign; the
// first nonzero entry gets a positive leading coefficient)
std::vector<UPoly> primitive_vector(const std::vector<XFrac>& v);
std::vector<UPoly> primitive_vector_p(const std::vector<UPoly>& v);

// Incrementally detects the first k(x)-linear dependence among pushed
// vectors of fixed length n.  A random evaluation point acts as a cheap
// rank filter; every answer (dependent or independent) is certified
// exactly, and unlucky points are redrawn.
class DependenceFinder {
 public:
  explicit DependenceFinder(int n, uint64_t seed = 0x9e3779b97f4a7c15ull);

  // returns the dependence sum_j eta[j] * v_j = 0 (primitive, eta.back()
  // nonzero) as soon as the newest vector is k(x)-dependent on the others
  std::optional<std::vector<UPoly>> push(const std::vector<UPoly>& v);

  int size() const { return static_cast<int>(vectors_.size()); }

 private:
  int n_;
  uint64_t rng_state_;
  Rat x0_;
  std::vector<std::vector<UPoly>> vectors_;
  std::vector<std::vector<Rat>> reduced_;  // echelon rows of the evaluated vectors
  std::vector<int> pivot_of_row_;

  uint64_t next_u64();
  void draw_point();
  void rebuild();                               // re-evaluate all vectors at x0_
  bool reduce_row(std::vector<Rat>& row) const; // true if row survives (independent)
  void absorb(std::vector<Rat> row);
  std::optional<std::vector<UPoly>> exact_dependence();
};

// batch convenience: smallest prefix with a dependence, or nullopt
std::optional<std::pair<int, std::vector<UPoly>>> first_dependence(
    const std::vector<std::vector<UPoly>>& vectors);

}  // namespace linalg
}  // namespace ratel

#endif
