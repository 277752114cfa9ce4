#include "skewqp/canvas.hpp"

#include <stdexcept>

namespace skewqp {

CWComplex2 build_canvas(const Quiver& q, const Potential& w) {
  CWComplex2 out;
  out.n0 = q.num_vertices();
  out.n1 = q.num_arrows();
  out.n2 = w.size();
  out.d1 = IntMatrix(out.n0, out.n1);
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    out.d1.at(q.tgt(a), a) += 1;
    out.d1.at(q.src(a), a) -= 1;
  }
  out.d2 = IntMatrix(out.n1, out.n2);
  size_t j = 0;
  for (const auto& [cycle, coeff] : w.terms()) {
    for (ArrowIdx a : cycle.word()) out.d2.at(a, j) += 1;
    ++j;
  }
  for (size_t i = 0; i < out.n0; ++i) {
    for (size_t k = 0; k < out.n2; ++k) {
      Integer s = 0;
      for (size_t m = 0; m < out.n1; ++m) s += out.d1.at(i, m) * out.d2.at(m, k);
      if (s != 0) throw std::logic_error("build_canvas: d1 . d2 != 0");
    }
  }
  return out;
}

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult out;
  const size_t limit = std::min(m.rows, m.cols);
  size_t t = 0;
  while (t < limit) {
    // Pivot: the entry of least nonzero magnitude in the trailing block.
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < m.rows; ++i) {
      for (size_t j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (!found || abs_int(m.at(i, j)) < abs_int(m.at(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    if (!found) break;
    if (pi != t)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Integer f = m.at(i, t) / m.at(t, t);
        for (size_t j = t; j < m.cols; ++j) m.at(i, j) -= f * m.at(t, j);
        if (m.at(i, t) != 0) {
          // Remainder smaller than the pivot: swap rows and restart.
          for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(i, j));
          clean = false;
        }
      }
      if (!clean) continue;
      for (size_t j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Integer f = m.at(t, j) / m.at(t, t);
        for (size_t i = t; i < m.rows; ++i) m.at(i, j) -= f * m.at(i, t);
        if (m.at(t, j) != 0) {
          for (size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, j));
          clean = false;
        }
      }
    }
    // Divisibility: the pivot must divide the trailing block.
    bool redo = false;
    for (size_t i = t + 1; i < m.rows && !redo; ++i) {
      for (size_t j = t + 1; j < m.cols && !redo; ++j) {
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (size_t k = 0; k < m.cols; ++k) m.at(t, k) += m.at(i, k);
          redo = true;
        }
      }
    }
    if (redo) continue;
    ++t;
  }
  out.rank = static_cast<int>(t);
  for (size_t i = 0; i < t; ++i) out.invariant_factors.push_back(abs_int(m.at(i, i)));
  return out;
}

Homology homology(const CWComplex2& complex) {
  SmithResult s1 = smith_normal_form(complex.d1);
  SmithResult s2 = smith_normal_form(complex.d2);
  Homology out;
  out.euler = complex.euler();
  out.b0 = static_cast<int>(complex.n0) - s1.rank;
  out.b1 = static_cast<int>(complex.n1) - s1.rank - s2.rank;
  out.b2 = static_cast<int>(complex.n2) - s2.rank;
  for (const Integer& d : s2.invariant_factors)
    if (d > 1) out.h1_torsion.push_back(d);
  if (out.euler != out.b0 - out.b1 + out.b2)
    throw std::logic_error("homology: Euler characteristic mismatch");
  return out;
}

}  // namespace skewqp
