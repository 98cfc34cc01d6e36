#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratel/linalg.hpp"
#include "ratel/qlinalg.hpp"
#include "testutil.hpp"

using namespace ratel;
using tu::up;

namespace {

linalg::PMatrix pmat(int rows, int cols, std::vector<UPoly> entries) {
  linalg::PMatrix m(rows, cols);
  m.a = std::move(entries);
  return m;
}

bool kills(const linalg::PMatrix& m, const std::vector<UPoly>& v) {
  for (int r = 0; r < m.rows; r++) {
    UPoly acc;
    for (int c = 0; c < m.cols; c++) acc = acc + m.at(r, c) * v[static_cast<size_t>(c)];
    if (!acc.is_zero_poly()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("nullspace of small matrices") {
  // proportional rows: kernel spanned by (x, -1)
  linalg::PMatrix m =
      pmat(2, 2, {up({0, 1}), up({0, 0, 1}), up({1}), up({0, 1})});
  auto basis = linalg::nullspace(m);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == up({0, 1}));
  CHECK(basis[0][1] == up({-1}));
  CHECK(kills(m, basis[0]));

  linalg::PMatrix id(3, 3);
  for (int i = 0; i < 3; i++) id.at(i, i) = up({1});
  CHECK(linalg::nullspace(id).empty());
}

TEST_CASE("nullspace of a random wide matrix") {
  tu::Rng rng(0x11aa22bb33ULL);
  linalg::PMatrix m(4, 6);
  for (int r = 0; r < 4; r++)
    for (int c = 0; c < 6; c++) m.at(r, c) = rng.poly(2, -5, 5);
  auto basis = linalg::nullspace(m);
  CHECK(basis.size() == 2);  // random entries: full row rank
  for (const auto& v : basis) {
    CHECK(kills(m, v));
    // primitive k[x] vector with a positive-leading first nonzero entry
    std::vector<XFrac> as_frac(v.size());
    for (size_t i = 0; i < v.size(); i++) as_frac[i] = XFrac(v[i]);
    CHECK(linalg::primitive_vector(as_frac) == v);
  }
}

TEST_CASE("planted block kernel respects the Cramer degree bound") {
  // M = (M1 | M2): M1 is 4x3 of degree <= 2; M2's two columns are k[x]
  // combinations of M1's columns with multipliers of degree <= 1, so
  // deg(M2) <= 3 and the kernel is 2-dimensional
  tu::Rng rng(0x5151523ULL);
  linalg::PMatrix m(4, 5);
  for (int r = 0; r < 4; r++)
    for (int c = 0; c < 3; c++) m.at(r, c) = rng.poly(2, -5, 5);
  UPoly a = rng.poly(1), b = rng.poly(1), c1 = rng.poly(1), e = rng.poly(1);
  for (int r = 0; r < 4; r++) {
    m.at(r, 3) = a * m.at(r, 0) + b * m.at(r, 1);
    m.at(r, 4) = c1 * m.at(r, 1) + e * m.at(r, 2);
  }
  auto basis = linalg::nullspace(m);
  REQUIRE(basis.size() == 2);
  const int bound = 3 * 2 + 2 * 3;  // n1*d1 + n2*d2
  for (const auto& v : basis) {
    CHECK(kills(m, v));
    for (const auto& entry : v) CHECK(entry.degree() <= bound);
  }
}

TEST_CASE("rank probe at a point") {
  linalg::PMatrix m = pmat(1, 1, {up({0, 1})});  // [x]
  CHECK(linalg::rank_probe(m, Rat(0)) == 0);     // evaluation kills the entry
  CHECK(linalg::rank_probe(m, Rat(1)) == 1);

  linalg::PMatrix id(2, 2);
  id.at(0, 0) = up({1});
  id.at(1, 1) = up({1});
  CHECK(linalg::rank_probe(id, Rat(7)) == 2);
  CHECK(linalg::rank_probe(id, Rat(0)) == 2);
}

TEST_CASE("rank probe vs exact rank, statistically") {
  tu::Rng rng(0xabcdef12345ULL);
  int agree = 0, total = 0;
  for (int t = 0; t < 12; t++) {
    linalg::PMatrix m(3, 3);
    for (int r = 0; r < 3; r++)
      for (int c = 0; c < 3; c++) m.at(r, c) = rng.poly(2, -4, 4);
    if (t % 3 == 0)  // plant a rank deficiency
      for (int c = 0; c < 3; c++) m.at(2, c) = up({0, 2}) * m.at(0, c);
    int exact_rank = 3 - static_cast<int>(linalg::nullspace(m).size());
    for (int s = 0; s < 10; s++) {
      int probe = linalg::rank_probe(m, Rat(rng.range(-50, 50)));
      CHECK(probe <= exact_rank);
      agree += (probe == exact_rank);
      total++;
    }
  }
  CHECK(agree * 100 >= total * 95);
}

TEST_CASE("first dependence detection") {
  using VU = std::vector<UPoly>;
  // over k: e1, e2, e1+e2
  std::vector<VU> vs = {{up({1}), up({})}, {up({}), up({1})}, {up({1}), up({1})}};
  auto hit = linalg::first_dependence(vs);
  REQUIRE(hit.has_value());
  CHECK(hit->first == 2);
  CHECK(hit->second == VU{up({1}), up({1}), up({-1})});

  // proportional over k[x]: (1,x) and (x,x^2)
  std::vector<VU> prop = {{up({1}), up({0, 1})}, {up({0, 1}), up({0, 0, 1})}};
  auto hit2 = linalg::first_dependence(prop);
  REQUIRE(hit2.has_value());
  CHECK(hit2->first == 1);
  CHECK(hit2->second == VU{up({0, 1}), up({-1})});

  // independent staircase: never reports
  std::vector<VU> stairs = {{up({1}), up({})}, {up({0, 1}), up({1})}};
  CHECK(!linalg::first_dependence(stairs).has_value());

  // cleared residue vectors of 1/(1-xy): r_0 = -1 and r_1 = 1/x, fed as
  // numerators (-1) and (1) over denominators (1, x); eta then scales back
  // to the dependence (1, x) between the rational residues
  std::vector<VU> resid = {{up({-1})}, {up({1})}};
  auto hit3 = linalg::first_dependence(resid);
  REQUIRE(hit3.has_value());
  CHECK(hit3->first == 1);
  CHECK(hit3->second == VU{up({1}), up({1})});
  std::vector<UPoly> eta = {hit3->second[0] * up({1}), hit3->second[1] * up({0, 1})};
  CHECK(eta == VU{up({1}), up({0, 1})});
}

TEST_CASE("incremental finder certifies independence before dependence") {
  linalg::DependenceFinder finder(3);
  CHECK(!finder.push({up({1}), up({0, 1}), up({})}).has_value());
  CHECK(!finder.push({up({}), up({1}), up({0, 0, 1})}).has_value());
  // v2 = v0 + v1 is dependent on the first two
  std::vector<UPoly> dep = {up({1}), up({1, 1}), up({0, 0, 1})};
  auto hit = finder.push(dep);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<UPoly>{up({1}), up({1}), up({-1})});

  // zero vector is dependent immediately
  linalg::DependenceFinder z(2);
  auto zhit = z.push({up({}), up({})});
  REQUIRE(zhit.has_value());
  CHECK(*zhit == std::vector<UPoly>{up({1})});
}

TEST_CASE("integer matrix rank modulo a prime") {
  linalg::IntMatrix m(2, 3);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(0, 2) = 6;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  m.at(1, 2) = 3;  // proportional rows
  std::vector<int> prows, pcols, fcols;
  CHECK(linalg::rank_mod_p(m, 2147483647u, &prows, &pcols, &fcols) == 1);
  CHECK(pcols == std::vector<int>{0});
  CHECK(fcols == std::vector<int>{1, 2});

  // rank can drop modulo p dividing all pivots
  linalg::IntMatrix d(1, 1);
  d.at(0, 0) = 7;
  CHECK(linalg::rank_mod_p(d, 7u, nullptr, nullptr, nullptr) == 0);
  CHECK(linalg::rank_mod_p(d, 11u, nullptr, nullptr, nullptr) == 1);
}

TEST_CASE("integer nullspace vector with exact verification") {
  // kernel of [[1,2,3],[4,5,6]] is spanned by (1,-2,1)
  linalg::IntMatrix m(2, 3);
  long vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
  for (int r = 0; r < 2; r++)
    for (int c = 0; c < 3; c++) m.at(r, c) = vals[r][c];
  auto v = linalg::int_nullspace_vector(m);
  REQUIRE(v.has_value());
  for (int r = 0; r < 2; r++) {
    Rat acc(0);
    for (int c = 0; c < 3; c++) acc += Rat(m.at(r, c)) * (*v)[static_cast<size_t>(c)];
    CHECK(sgn(acc) == 0);
  }

  // trivial nullspace
  linalg::IntMatrix id(2, 2);
  id.at(0, 0) = 1;
  id.at(1, 1) = 1;
  CHECK(!linalg::int_nullspace_vector(id).has_value());

  // big entries exercise the lifting path
  tu::Rng rng(0x77aa55e1ULL);
  linalg::IntMatrix big(3, 4);
  for (int r = 0; r < 3; r++)
    for (int c = 0; c < 4; c++) {
      Int e(1);
      for (int k = 0; k < 3; k++) e *= Int(rng.range(-1000000, 1000000));
      big.at(r, c) = e;
    }
  auto w = linalg::int_nullspace_vector(big);
  REQUIRE(w.has_value());
  bool nonzero = false;
  for (int r = 0; r < 3; r++) {
    Rat acc(0);
    for (int c = 0; c < 4; c++) acc += Rat(big.at(r, c)) * (*w)[static_cast<size_t>(c)];
    CHECK(sgn(acc) == 0);
  }
  for (const Rat& e : *w) nonzero = nonzero || sgn(e) != 0;
  CHECK(nonzero);
}

TEST_CASE("exact rational rank") {
  std::vector<Rat> rm = {Rat(1), Rat(2), Rat(2), Rat(4)};
  CHECK(linalg::rank_exact(2, 2, rm) == 1);
  std::vector<Rat> id = {Rat(1), Rat(0), Rat(0), Rat(1)};
  CHECK(linalg::rank_exact(2, 2, id) == 2);
  std::vector<Rat> zero = {Rat(0), Rat(0)};
  CHECK(linalg::rank_exact(1, 2, zero) == 0);
}
