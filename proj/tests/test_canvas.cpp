#include "doctest.h"
#include "skewqp/canvas.hpp"
#include "skewqp/gen.hpp"
#include "skewqp/skew.hpp"

#include <random>

using namespace skewqp;

namespace {

// Test-side oracles: rank over Q by Gaussian elimination, determinant by
// cofactor expansion.  Both independent of the Smith normal form code.
int rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols));
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) a[i][j] = Rational(m.at(i, j));
  int rank = 0;
  for (size_t col = 0; col < m.cols && rank < static_cast<int>(m.rows); ++col) {
    size_t pivot = m.rows;
    for (size_t r = rank; r < m.rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.rows) continue;
    std::swap(a[rank], a[pivot]);
    for (size_t r = 0; r < m.rows; ++r) {
      if (r == static_cast<size_t>(rank) || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[rank][col];
      for (size_t c = 0; c < m.cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

Integer determinant(const IntMatrix& m) {
  REQUIRE(m.rows == m.cols);
  if (m.rows == 0) return 1;
  if (m.rows == 1) return m.at(0, 0);
  Integer det = 0;
  for (size_t k = 0; k < m.cols; ++k) {
    if (m.at(0, k) == 0) continue;
    IntMatrix minor(m.rows - 1, m.cols - 1);
    for (size_t i = 1; i < m.rows; ++i) {
      size_t jj = 0;
      for (size_t j = 0; j < m.cols; ++j) {
        if (j == k) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Integer term = m.at(0, k) * determinant(minor);
    det += (k % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

}  // namespace

TEST_CASE("smith normal form against oracles") {
  std::mt19937 rng(4321);
  for (int trial = 0; trial < 120; ++trial) {
    size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<long>(rng() % 13) - 6;
    SmithResult s = smith_normal_form(m);
    CHECK(s.rank == rational_rank(m));
    for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
      CHECK(s.invariant_factors[i] > 0);
      CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
    }
    if (rows == cols && s.rank == static_cast<int>(rows)) {
      Integer prod = 1;
      for (const Integer& d : s.invariant_factors) prod *= d;
      Integer det = determinant(m);
      CHECK(prod == (det < 0 ? Integer(-det) : det));
    }
  }
}

TEST_CASE("triangle disk") {
  Quiver q({"1", "2", "3"}, {Arrow{"a", 1, 0}, Arrow{"b", 2, 1}, Arrow{"c", 0, 2}});
  Potential w(1);
  w.add(q, Path::of({0, 1, 2}), Cyclotomic::one(1));
  CWComplex2 x = build_canvas(q, w);
  CHECK(x.n0 == 3);
  CHECK(x.n1 == 3);
  CHECK(x.n2 == 1);
  CHECK(x.euler() == 1);
  Homology h = homology(x);
  CHECK(h.b0 == 1);
  CHECK(h.b1 == 0);
  CHECK(h.b2 == 0);
  CHECK(h.h1_torsion.empty());
}

TEST_CASE("circle and empty potential") {
  Quiver q({"1", "2", "3"}, {Arrow{"a", 1, 0}, Arrow{"b", 2, 1}, Arrow{"c", 0, 2}});
  Potential none(1);
  CWComplex2 x = build_canvas(q, none);
  CHECK(x.n2 == 0);
  CHECK(x.euler() == static_cast<long long>(x.n0) - static_cast<long long>(x.n1));
  Homology h = homology(x);
  CHECK(h.b0 == 1);
  CHECK(h.b1 == 1);
}

TEST_CASE("torsion from a cubed loop") {
  Quiver q({"v"}, {Arrow{"a", 0, 0}});
  Potential w(1);
  w.add(q, Path::of({0, 0, 0}), Cyclotomic::one(1));
  Homology h = homology(build_canvas(q, w));
  CHECK(h.b0 == 1);
  CHECK(h.b1 == 0);
  REQUIRE(h.h1_torsion.size() == 1);
  CHECK(h.h1_torsion[0] == 3);
}

TEST_CASE("disconnected complexes count components") {
  Quiver q({"1", "2"}, {});
  Homology h = homology(build_canvas(q, Potential(1)));
  CHECK(h.b0 == 2);
  CHECK(h.b1 == 0);
}

TEST_CASE("triangular QP canvases") {
  ExampleBundle a4 = fixture("typeA4");
  CWComplex2 x4 = build_canvas(a4.quiver, a4.potential);
  CHECK(x4.n0 == 10);
  CHECK(x4.n1 == 18);
  CHECK(x4.n2 == 9);
  CHECK(x4.euler() == 1);
  Homology h4 = homology(x4);
  CHECK(h4.b0 == 1);
  CHECK(h4.b1 == 0);
  CHECK(h4.h1_torsion.empty());

  ExampleBundle a7 = fixture("typeA7");
  CWComplex2 x7 = build_canvas(a7.quiver, a7.potential);
  CHECK(x7.n0 == 28);
  CHECK(x7.n1 == 63);
  CHECK(x7.n2 == 36);
  CHECK(x7.euler() == 1);
  Homology h7 = homology(x7);
  CHECK(h7.b0 == 1);
  CHECK(h7.b1 == 0);

  // The skew canvas of s=4: three disks over the center glue into a bouquet
  // of two spheres attached to the quotient, so b1 = 0 and b2 = 2.
  SkewQP skew = build_skew_qp(a4.quiver, a4.potential, a4.action, a4.representatives());
  Homology hg = homology(build_canvas(skew.quiver, skew.potential));
  CHECK(hg.b0 == 1);
  CHECK(hg.b1 == 0);
  CHECK(hg.b2 == 2);
  CHECK(hg.euler == 3);
}

TEST_CASE("boundary composition vanishes on all bundles") {
  for (const char* name : {"typeA4", "typeA7", "A5xA3", "A5xD4"}) {
    ExampleBundle b = fixture(name);
    CHECK_NOTHROW(build_canvas(b.quiver, b.potential));  // throws when d1.d2 != 0
    SkewQP skew = build_skew_qp(b.quiver, b.potential, b.action, b.representatives());
    CHECK_NOTHROW(build_canvas(skew.quiver, skew.potential));
  }
}
