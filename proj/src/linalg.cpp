#include "ratel/linalg.hpp"

#include <algorithm>

#include "ratel/bpoly.hpp"

namespace ratel {
namespace linalg {

std::vector<std::vector<UPoly>> nullspace(const PMatrix& m) {
  PMatrix w = m;
  UPoly prev{Rat(1)};
  std::vector<int> pivot_col_of_row;  // per eliminated row
  std::vector<char> col_is_pivot(m.cols, 0);
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; col++) {
    int pr = -1;
    for (int r = row; r < m.rows; r++)
      if (!w.at(r, col).is_zero_poly()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = 0; c < m.cols; c++) std::swap(w.at(pr, c), w.at(row, c));
    const UPoly piv = w.at(row, col);
    for (int r = row + 1; r < m.rows; r++) {
      const UPoly f = w.at(r, col);
      for (int c = col; c < m.cols; c++) {
        // fraction-free update; the division by the previous pivot is exact
        UPoly t = w.at(r, c) * piv - f * w.at(row, c);
        w.at(r, c) = t.is_zero_poly() ? t : t / prev;
      }
      deadline_check();
    }
    prev = piv;
    col_is_pivot[col] = 1;
    pivot_col_of_row.push_back(col);
    row++;
  }

  std::vector<std::vector<UPoly>> basis;
  for (int fc = 0; fc < m.cols; fc++) {
    if (col_is_pivot[fc]) continue;
    // back-substitute over k(x) with v[fc] = 1, other free columns 0
    std::vector<XFrac> v(m.cols);
    v[fc] = XFrac(1);
    for (int r = static_cast<int>(pivot_col_of_row.size()) - 1; r >= 0; r--) {
      int pc = pivot_col_of_row[r];
      if (pc > fc) continue;  // v[pc] stays 0: every later column involved is 0 or pivot
      XFrac s;
      for (int c = pc + 1; c < m.cols; c++)
        if (!v[c].is_zero_frac() && !w.at(r, c).is_zero_poly())
          s = s + XFrac(w.at(r, c)) * v[c];
      v[pc] = -s / XFrac(w.at(r, pc));
      deadline_check();
    }
    basis.push_back(primitive_vector(v));
  }
  return basis;
}

namespace {

// forward elimination of m evaluated at x0; reports the pivot columns and
// the original indices of the rows that carried each pivot
int echelon_eval(const PMatrix& m, const Rat& x0, std::vector<int>* pivot_cols,
                 std::vector<int>* pivot_rows = nullptr) {
  std::vector<std::vector<Rat>> w(m.rows, std::vector<Rat>(m.cols));
  for (int r = 0; r < m.rows; r++)
    for (int c = 0; c < m.cols; c++) w[r][c] = m.at(r, c).eval(x0);
  std::vector<int> orig(m.rows);
  for (int r = 0; r < m.rows; r++) orig[r] = r;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; col++) {
    int pr = -1;
    for (int r = rank; r < m.rows; r++)
      if (sgn(w[r][col]) != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(w[pr], w[rank]);
    std::swap(orig[pr], orig[rank]);
    for (int r = rank + 1; r < m.rows; r++) {
      if (sgn(w[r][col]) == 0) continue;
      Rat f = w[r][col] / w[rank][col];
      for (int c = col; c < m.cols; c++) w[r][c] -= f * w[rank][c];
    }
    if (pivot_cols) pivot_cols->push_back(col);
    if (pivot_rows) pivot_rows->push_back(orig[rank]);
    rank++;
  }
  return rank;
}

// incremental Newton interpolation over Q: push (t, f(t)) pairs, read back
// the monomial coefficients on demand
class NewtonSeries {
 public:
  void push(const Rat& t, const Rat& value, const std::vector<Rat>& nodes) {
    // row_[j] becomes f[t_j .. t_n] for the new point t = t_n
    std::vector<Rat> next(row_.size() + 1);
    next.back() = value;
    for (int j = static_cast<int>(row_.size()) - 1; j >= 0; j--)
      next[j] = (next[j + 1] - row_[j]) / (t - nodes[j]);
    row_ = std::move(next);
    coeffs_.push_back(row_.front());
  }
  // number of trailing zero Newton coefficients
  int trailing_zeros() const {
    int z = 0;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0 && sgn(coeffs_[i]) == 0; i--)
      z++;
    return z;
  }
  UPoly to_poly(const std::vector<Rat>& nodes) const {
    UPoly acc;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; i--) {
      UPoly base{std::vector<Rat>{-nodes[i], Rat(1)}};
      acc = acc * base + UPoly(coeffs_[i]);
    }
    return acc;
  }

 private:
  std::vector<Rat> row_;     // newest divided-difference row
  std::vector<Rat> coeffs_;  // Newton coefficients f[t_0..t_i]
};

}  // namespace

int rank_probe(const PMatrix& m, const Rat& x0) { return echelon_eval(m, x0, nullptr); }

std::optional<std::vector<UPoly>> kernel_vector(const PMatrix& m) {
  if (m.cols == 0) return std::nullopt;

  // structure probe: keep the highest-rank echelon over a few points; a
  // specialization never overstates the rank, so full column rank at any
  // point certifies a trivial kernel
  int best_rank = -1;
  std::vector<int> pivots, prows;
  for (int t = 1; t <= 3; t++) {
    std::vector<int> p, q;
    int r = echelon_eval(m, Rat(t), &p, &q);
    if (r == m.cols) return std::nullopt;
    if (r > best_rank) {
      best_rank = r;
      pivots = std::move(p);
      prows = std::move(q);
    }
  }

  auto exact = [&]() -> std::optional<std::vector<UPoly>> {
    auto basis = nullspace(m);
    if (basis.empty()) return std::nullopt;
    return basis[0];
  };

  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  int fc = 0;
  while (fc < m.cols && is_pivot[fc]) fc++;

  // The basis vector of the first free column vanishes at every other free
  // column and at every pivot column to its right, so only the pivot
  // columns below fc participate.  Their pivot rows are frozen too: with a
  // fixed row order the per-point determinant is one polynomial across all
  // points, making the scaled solution entries interpolable.
  std::vector<int> sub, srows;
  for (size_t i = 0; i < pivots.size(); i++)
    if (pivots[i] < fc) {
      sub.push_back(pivots[i]);
      srows.push_back(prows[i]);
    }
  const int r0 = static_cast<int>(sub.size());

  auto verified = [&](const std::vector<UPoly>& out) {
    for (int r = 0; r < m.rows; r++) {
      UPoly acc;
      for (int c = 0; c < m.cols; c++)
        if (!out[c].is_zero_poly() && !m.at(r, c).is_zero_poly())
          acc = acc + m.at(r, c) * out[c];
      if (!acc.is_zero_poly()) return false;
    }
    return true;
  };

  auto coldeg = [&](int c) {
    long d = 0;
    for (int r = 0; r < m.rows; r++) d = std::max<long>(d, m.at(r, c).degree());
    return d;
  };
  long S = 0;  // Cramer bound for every minor degree
  for (int c : sub) S += coldeg(c);
  const long hard = S + coldeg(fc) + 2;  // strictly past any entry's degree

  // Sample the Cramer-scaled kernel vector (u * det, det) at integer points
  // and grow Newton interpolants per entry.  Once the Newton tails settle
  // (or the Cramer bound is exhausted) the candidate is certified against m
  // exactly, so early stops are sound and unlucky points merely cost time.
  std::vector<Rat> nodes;
  std::vector<NewtonSeries> series(r0 + 1);
  long next_try = 4;
  const long attempts_cap = 4 * hard + 16;

  for (long t = 1; t <= attempts_cap && static_cast<long>(nodes.size()) <= hard; t++) {
    deadline_check();
    const Rat x0{static_cast<long>(t)};
    std::vector<std::vector<Rat>> w(r0, std::vector<Rat>(r0 + 1));
    for (int k = 0; k < r0; k++) {
      for (int j = 0; j < r0; j++) w[k][j] = m.at(srows[k], sub[j]).eval(x0);
      w[k][r0] = m.at(srows[k], fc).eval(x0);
    }
    Rat det{1};
    bool ok = true;
    for (int k = 0; k < r0 && ok; k++) {
      if (sgn(w[k][k]) == 0) {
        ok = false;  // a frozen pivot vanished here; skip the point
        break;
      }
      det *= w[k][k];
      for (int r = k + 1; r < r0; r++) {
        if (sgn(w[r][k]) == 0) continue;
        Rat f = w[r][k] / w[k][k];
        for (int c = k; c <= r0; c++) w[r][c] -= f * w[k][c];
      }
    }
    if (!ok) continue;
    std::vector<Rat> u(r0);
    for (int k = r0 - 1; k >= 0; k--) {
      Rat s = w[k][r0];
      for (int j = k + 1; j < r0; j++) s += w[k][j] * u[j];
      u[k] = -s / w[k][k];
    }
    nodes.push_back(x0);
    for (int k = 0; k < r0; k++) series[k].push(x0, u[k] * det, nodes);
    series[r0].push(x0, det, nodes);

    bool settled = static_cast<long>(nodes.size()) >= next_try;
    for (int k = 0; k <= r0 && settled; k++) settled = series[k].trailing_zeros() >= 2;
    if (settled || static_cast<long>(nodes.size()) > hard) {
      std::vector<UPoly> cand(m.cols);
      for (int k = 0; k < r0; k++) cand[sub[k]] = series[k].to_poly(nodes);
      cand[fc] = series[r0].to_poly(nodes);
      std::vector<UPoly> out = primitive_vector_p(cand);
      if (verified(out)) return out;
      if (static_cast<long>(nodes.size()) > hard) return exact();
      next_try = static_cast<long>(nodes.size()) * 2;
    }
  }
  return exact();
}

std::vector<UPoly> primitive_vector(const std::vector<XFrac>& v) {
  UPoly den{Rat(1)};
  for (const auto& e : v)
    if (!e.is_zero_frac()) den = upoly_lcm(den, e.den());
  std::vector<UPoly> w(v.size());
  for (size_t i = 0; i < v.size(); i++)
    if (!v[i].is_zero_frac()) w[i] = v[i].num() * (den / v[i].den());
  return primitive_vector_p(w);
}

std::vector<UPoly> primitive_vector_p(const std::vector<UPoly>& v) {
  UPoly g;
  for (const auto& e : v)
    if (!e.is_zero_poly()) g = upoly_gcd(g, e);
  if (g.is_zero_poly()) return v;  // zero vector
  std::vector<UPoly> w(v.size());
  for (size_t i = 0; i < v.size(); i++)
    if (!v[i].is_zero_poly()) w[i] = v[i] / g;
  // joint rational content and sign via the bivariate carrier
  BPoly carrier{std::vector<UPoly>(w)};
  int lead = -1;
  for (size_t i = 0; i < w.size(); i++)
    if (!w[i].is_zero_poly()) {
      lead = static_cast<int>(i);
      break;
    }
  auto [prim, scale] = bpoly_int_primitive(carrier);
  (void)scale;
  std::vector<UPoly> out(w.size());
  for (size_t i = 0; i < w.size(); i++) out[i] = prim.coeff_y(static_cast<int>(i));
  if (lead >= 0 && sgn(out[lead].lc()) < 0)
    for (auto& e : out) e = Rat(-1) * e;
  return out;
}

DependenceFinder::DependenceFinder(int n, uint64_t seed) : n_(n), rng_state_(seed) {
  draw_point();
}

uint64_t DependenceFinder::next_u64() {
  // splitmix64: tiny, deterministic, platform-stable
  uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void DependenceFinder::draw_point() {
  x0_ = Rat(static_cast<unsigned long>(next_u64() & ((1ull << 30) - 1)));
}

bool DependenceFinder::reduce_row(std::vector<Rat>& row) const {
  for (size_t r = 0; r < reduced_.size(); r++) {
    int pc = pivot_of_row_[r];
    if (sgn(row[pc]) == 0) continue;
    Rat f = row[pc] / reduced_[r][pc];
    for (int c = 0; c < n_; c++) row[c] -= f * reduced_[r][c];
  }
  for (int c = 0; c < n_; c++)
    if (sgn(row[c]) != 0) return true;
  return false;
}

void DependenceFinder::absorb(std::vector<Rat> row) {
  int pc = -1;
  for (int c = 0; c < n_; c++)
    if (sgn(row[c]) != 0) {
      pc = c;
      break;
    }
  RATEL_CHECK(pc >= 0, "absorbing a zero row");
  reduced_.push_back(std::move(row));
  pivot_of_row_.push_back(pc);
}

void DependenceFinder::rebuild() {
  reduced_.clear();
  pivot_of_row_.clear();
  for (const auto& v : vectors_) {
    std::vector<Rat> row(n_);
    for (int c = 0; c < n_; c++) row[c] = v[c].eval(x0_);
    if (!reduce_row(row)) {
      // previously certified independent vectors must probe independent:
      // the point is unlucky for the existing set, draw another
      draw_point();
      rebuild();
      return;
    }
    absorb(std::move(row));
  }
}

std::optional<std::vector<UPoly>> DependenceFinder::exact_dependence() {
  // columns = pushed vectors; any nullspace vector must involve the newest
  PMatrix m(n_, static_cast<int>(vectors_.size()));
  for (int c = 0; c < m.cols; c++)
    for (int r = 0; r < n_; r++) m.at(r, c) = vectors_[c][r];
  auto basis = nullspace(m);
  if (basis.empty()) return std::nullopt;
  RATEL_CHECK(basis.size() == 1, "first dependence is one-dimensional");
  RATEL_CHECK(!basis[0].back().is_zero_poly(), "dependence must involve the newest vector");
  return basis[0];
}

std::optional<std::vector<UPoly>> DependenceFinder::push(const std::vector<UPoly>& v) {
  RATEL_CHECK(static_cast<int>(v.size()) == n_, "dependence vector length");
  vectors_.push_back(v);
  std::vector<Rat> row(n_);
  for (int c = 0; c < n_; c++) row[c] = v[c].eval(x0_);
  if (reduce_row(row)) {
    // probe says independent; that certifies true independence
    absorb(std::move(row));
    return std::nullopt;
  }
  // probe suspects dependence; certify exactly
  auto dep = exact_dependence();
  if (dep) return dep;
  // unlucky point: redraw and carry on
  draw_point();
  rebuild();
  return std::nullopt;
}

std::optional<std::pair<int, std::vector<UPoly>>> first_dependence(
    const std::vector<std::vector<UPoly>>& vectors) {
  if (vectors.empty()) return std::nullopt;
  DependenceFinder f(static_cast<int>(vectors[0].size()));
  for (size_t i = 0; i < vectors.size(); i++) {
    if (auto dep = f.push(vectors[i])) return std::make_pair(static_cast<int>(i), *dep);
  }
  return std::nullopt;
}

}  // namespace linalg
}  // namespace ratel
