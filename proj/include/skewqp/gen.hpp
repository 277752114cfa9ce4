#pragma once

#include <optional>
#include <tuple>

#include "skewqp/skew.hpp"

namespace skewqp {

/// A frozen expected cycle of a skew potential: arrow names of one rotation
/// plus the coefficient as (zeta exponent, numerator, denominator) terms.
struct ExpectedCycle {
  std::vector<std::string> arrows;
  std::vector<std::tuple<long, long, long>> coeff_terms;
};

/// A ready-to-run example: QP, action, optional representative override,
/// named cuts, and any pinned expectations for the skew construction.
struct ExampleBundle {
  std::string name;
  Quiver quiver;
  Potential potential;
  CyclicAction action;
  std::vector<std::string> reps_override;
  std::vector<std::pair<std::string, std::vector<std::string>>> cuts;

  std::optional<size_t> expected_skew_vertices;
  std::optional<size_t> expected_skew_arrows;
  // (arrow name, src name, tgt name) of every expected skew arrow.
  std::vector<std::tuple<std::string, std::string, std::string>> expected_skew_arrow_table;
  std::vector<ExpectedCycle> expected_wg;

  Representatives representatives() const {
    return choose_representatives(quiver, action, reps_override);
  }
};

/// The triangular-grid family: vertices are the lattice points of the
/// (s-1)-simplex slice, arrows step by the three displacement vectors, the
/// potential alternates over the two triangle orientations, and the order-3
/// rotation permutes everything.  Cuts C0, C1, C2 are attached when
/// s = 1 (mod 3).
ExampleBundle gen_type_a(int s);

/// The twisted tensor product of two acyclic quivers with compatible
/// automorphisms.  Validates acyclicity, scalar-freeness, orbit sizes,
/// fixed-arrow rigidity, and the order compatibility condition; throws
/// std::invalid_argument with a witness otherwise.
ExampleBundle gen_tensor(const std::string& name, const Quiver& q1, const CyclicAction& g1,
                         const Quiver& q2, const CyclicAction& g2);

/// Named fixtures: "typeA4", "typeA7", "A5xA3", "A5xD4".
ExampleBundle fixture(const std::string& name);

/// The same QP with the trivial group of order 1 acting; coefficients must
/// be rational.
ExampleBundle trivialize(const ExampleBundle& bundle);

}  // namespace skewqp
