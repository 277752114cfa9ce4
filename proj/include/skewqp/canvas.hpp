#pragma once

#include "skewqp/potential.hpp"

namespace skewqp {

/// Dense integer matrix, row-major, arbitrary-precision entries.
struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Integer(0)) {}
  Integer& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Integer& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// The 2-dimensional CW complex glued from a QP: 0-cells the vertices,
/// 1-cells the arrows, one 2-cell per potential cycle attached along its
/// arrow multiset.
struct CWComplex2 {
  size_t n0 = 0, n1 = 0, n2 = 0;
  IntMatrix d1;  // n0 x n1, [tgt] - [src]
  IntMatrix d2;  // n1 x n2, arrow multiplicities per cycle
  long long euler() const {
    return static_cast<long long>(n0) - static_cast<long long>(n1) + static_cast<long long>(n2);
  }
};

/// Builds the canvas and checks d1 . d2 = 0.
CWComplex2 build_canvas(const Quiver& q, const Potential& w);

struct SmithResult {
  std::vector<Integer> invariant_factors;  // positive, each dividing the next
  int rank = 0;
};

/// Smith normal form over Z; pivots chosen by minimal nonzero magnitude.
SmithResult smith_normal_form(IntMatrix m);

struct Homology {
  long long euler = 0;
  int b0 = 0;
  int b1 = 0;
  int b2 = 0;
  std::vector<Integer> h1_torsion;  // invariant factors > 1
};

/// Integral homology of the canvas in degrees 0 and 1 (H2 is free; its rank
/// is reported for the Euler-characteristic consistency check).
Homology homology(const CWComplex2& complex);

}  // namespace skewqp
