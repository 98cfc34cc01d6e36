#ifndef RATEL_QLINALG_HPP
#define RATEL_QLINALG_HPP

#include <cstdint>
#include <optional>

#include "ratel/rat.hpp"

namespace ratel {
namespace linalg {

// dense integer matrix, row-major; used for the large scalar kernels
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// rank of m modulo a 31-bit prime; optionally reports pivot rows/columns of
// the deterministic (first-nonzero pivot) echelon form
int rank_mod_p(const IntMatrix& m, uint32_t p, std::vector<int>* pivot_rows = nullptr,
               std::vector<int>* pivot_cols = nullptr, std::vector<int>* free_cols = nullptr);

// One exact rational vector of the right nullspace, or nullopt if the
// nullspace is trivial.  Works modulo a deterministic prime sequence: full
// column rank mod p certifies triviality; otherwise the first free column is
// completed to a candidate by Dixon lifting on the pivot submatrix and the
// candidate is verified exactly over Q (unlucky primes are retried).
std::optional<std::vector<Rat>> int_nullspace_vector(const IntMatrix& m);

// exact rank over Q of a small rational matrix
int rank_exact(int rows, int cols, const std::vector<Rat>& row_major);

}  // namespace linalg
}  // namespace ratel

#endif
