#pragma once

#include <set>

#include "skewqp/skew.hpp"

namespace skewqp {

using Cut = std::set<ArrowIdx>;

/// True iff every potential cycle contains, counting arrow occurrences with
/// multiplicity, exactly one arrow of C.
bool is_cut(const Quiver& q, const Potential& w, const Cut& c);

/// True iff C is closed under the star action.
bool is_g_invariant(const CyclicAction& action, const Cut& c);

/// Exhaustive enumeration of cuts, in deterministic order.  Only cuts
/// contained in the arrows of the potential cycles are listed; arrows
/// outside every cycle can join any cut freely and are left out of the
/// catalog.  With g_invariant set, the search runs over star-orbits of
/// arrows and returns only G-invariant cuts (action required).
std::vector<Cut> enumerate_cuts(const Quiver& q, const Potential& w, bool g_invariant = false,
                                const CyclicAction* action = nullptr);

/// The induced cut on (Q_G, W_G): t1(a) for representatives a in C of type
/// (1), and tx(a,mu) for all mu for representatives of types (2)-(4).
/// Rejects inputs that are not G-invariant cuts; the result is checked to be
/// a cut of the skew QP.
Cut induce_cut(const SkewQP& skew, const Cut& c);

/// Every arrow is contained in some cut.  `uncovered`, if given, receives
/// the arrows missed by all cuts.
bool has_enough_cuts(const Quiver& q, const Potential& w, std::vector<ArrowIdx>* uncovered = nullptr);
bool has_enough_g_invariant_cuts(const Quiver& q, const Potential& w, const CyclicAction& action,
                                 std::vector<ArrowIdx>* uncovered = nullptr);

/// The truncated presentation attached to a cut: the quiver with the cut
/// arrows removed and, per cut arrow, the relation given by its cyclic
/// derivative (necessarily free of cut arrows).
struct TruncatedPresentation {
  Quiver quiver;  // same vertices, arrows Q_1 \ C (names preserved)
  std::vector<std::pair<std::string, PathCombination>> relations;  // keyed by cut arrow name
};

TruncatedPresentation truncated_presentation(const Quiver& q, const Potential& w, const Cut& c);

}  // namespace skewqp
