#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewqp/cyclotomic.hpp"
#include "skewqp/quiver.hpp"

namespace skewqp {

/// A finite Cyclotomic-linear combination of paths with a fixed coefficient
/// order.  Zero coefficients are never stored.
class PathCombination {
public:
  explicit PathCombination(int zeta_order) : zeta_order_(zeta_order) {}

  int zeta_order() const { return zeta_order_; }
  const std::map<Path, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add(const Path& p, const Cyclotomic& c);
  PathCombination& operator+=(const PathCombination& rhs);
  PathCombination& operator*=(const Cyclotomic& c);
  friend bool operator==(const PathCombination&, const PathCombination&) = default;

  /// True iff all paths share a common start and a common target (the
  /// defining property of a relation); vacuously true when zero.
  bool is_relation(const Quiver& q) const;

  std::string str(const Quiver& q) const;

private:
  int zeta_order_;
  std::map<Path, Cyclotomic> terms_;
};

/// A potential: a finite linear combination of cycles of length >= 3, each
/// cycle taken up to rotation (stored canonically).  Coefficients are
/// nonzero elements of Q(zeta_n).
class Potential {
public:
  explicit Potential(int zeta_order) : zeta_order_(zeta_order) {}

  int zeta_order() const { return zeta_order_; }
  const std::map<Cycle, Cyclotomic>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Accumulate a term; the cycle must already be canonical.
  void add(const Cycle& c, const Cyclotomic& coeff);
  /// Canonicalize a closed path and accumulate.
  void add(const Quiver& q, const Path& closed, const Cyclotomic& coeff);
  const Cyclotomic* coeff(const Cycle& c) const;

  std::string str(const Quiver& q) const;

private:
  int zeta_order_;
  std::map<Cycle, Cyclotomic> terms_;
};

/// A quiver together with a potential over Q(zeta_n).
struct QP {
  Quiver quiver;
  Potential potential;
};

/// Cyclic derivative with respect to an arrow: for every occurrence of the
/// arrow in a cycle of W, rotate that occurrence to the front, delete it and
/// keep the rest; occurrences of repeated arrows count separately.  The
/// result is a relation from tgt(alpha) to src(alpha).
PathCombination cyclic_derivative(const Quiver& q, const Potential& w, ArrowIdx alpha);

/// Derivative with respect to a nonzero multiple lambda*alpha, i.e.
/// lambda^{-1} * cyclic_derivative.  Throws std::domain_error on lambda = 0.
PathCombination scaled_derivative(const Quiver& q, const Potential& w, ArrowIdx alpha,
                                  const Cyclotomic& lambda);

/// Equality of potentials as elements of the path algebra modulo rotations:
/// coefficientwise equality of the canonical-cycle maps.  Both potentials
/// must live on the same quiver.  (Finite potentials only; the commutator
/// identification beyond single-cycle rotation plays no role for them.)
bool potential_equal(const Potential& a, const Potential& b);

/// One entry per arrow with nonzero cyclic derivative, in arrow-name order:
/// a finite presentation datum for the Jacobian algebra.  Admissibility of
/// the ideal is not checked.
std::vector<std::pair<ArrowIdx, PathCombination>> jacobian_relations(const Quiver& q,
                                                                     const Potential& w);

}  // namespace skewqp
