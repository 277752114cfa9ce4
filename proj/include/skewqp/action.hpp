#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewqp/potential.hpp"
#include "skewqp/quiver.hpp"

namespace skewqp {

struct ArrowImage {
  ArrowIdx arrow;
  int zeta_exp;  // g(a) = zeta^zeta_exp * arrow
};

/// The generator of a cyclic group of order n acting on a quiver: a vertex
/// permutation together with, for each arrow a, the image arrow and the
/// scalar exponent b with g(a) = zeta^b * a'.  The star action is the same
/// data with scalars forgotten.
///
/// Construction validates the structural part: the maps are total, the
/// vertex map is a permutation whose n-th power is the identity, arrow
/// images respect incidence, and the star action's n-th power is the
/// identity.  Scalar accumulation (g^n acting as 1, not just as a
/// permutation) is a validator concern, not a constructor one, so that
/// deliberately broken actions can be diagnosed.
class CyclicAction {
public:
  CyclicAction(const Quiver& q, int order, std::vector<VertexIdx> vertex_map,
               std::vector<ArrowImage> arrow_map);

  /// The trivial action of the group of order `order` (identity maps, zero
  /// exponents); only valid when order == 1 or used as a building block.
  static CyclicAction trivial(const Quiver& q);

  int order() const { return order_; }
  /// g^k(v); k may be negative.
  VertexIdx vertex_image(VertexIdx v, int k = 1) const;
  /// g^k(a) = zeta^exp * arrow, with exp accumulated over the k steps.
  ArrowImage arrow_image(ArrowIdx a, int k = 1) const;
  /// Star action g^k * a (scalars forgotten).
  ArrowIdx star(ArrowIdx a, int k = 1) const;
  /// Scalar exponent of the generator on a single arrow.
  int b(ArrowIdx a) const { return arrow_map_[a].zeta_exp; }

  bool vertex_fixed(VertexIdx v) const { return vertex_map_[v] == v; }
  bool arrow_fixed(ArrowIdx a) const { return arrow_map_[a].arrow == a; }
  int vertex_orbit_size(VertexIdx v) const;
  int arrow_orbit_size(ArrowIdx a) const;
  /// Least r >= 0 with g^r(from) == to, if any.
  std::optional<int> power_from(VertexIdx from, VertexIdx to) const;

  /// g^k applied to a path: the star image together with the accumulated
  /// scalar exponent.
  std::pair<Path, int> path_image(const Path& p, int k = 1) const;

  /// g^k . W as a potential (scalars folded into coefficients).
  Potential apply(const Quiver& q, const Potential& w, int k = 1) const;

private:
  int norm(int k) const;

  int order_;
  std::vector<VertexIdx> vertex_map_;
  std::vector<ArrowImage> arrow_map_;
  std::vector<VertexIdx> vertex_inverse_;
  std::vector<ArrowIdx> arrow_inverse_;
};

/// Orbit representatives of the vertex set: eps_prime holds one vertex per
/// non-fixed orbit, eps_fixed all fixed vertices.  rep_of/power_of give, for
/// every vertex v, the representative w and the power r with v = g^r(w).
struct Representatives {
  std::vector<VertexIdx> eps_prime;
  std::vector<VertexIdx> eps_fixed;
  std::vector<VertexIdx> rep_of;
  std::vector<int> power_of;

  bool is_rep(VertexIdx v) const { return rep_of[v] == v; }
};

/// Deterministic transversal: the lexicographically least vertex name per
/// orbit, unless `override_names` supplies one vertex per orbit (it must be
/// a transversal, else std::invalid_argument).
Representatives choose_representatives(const Quiver& q, const CyclicAction& action,
                                       const std::vector<std::string>& override_names = {});

enum class ArrowType { None = 0, T1 = 1, T2 = 2, T3 = 3, T4 = 4 };

struct ArrowClass {
  ArrowType type = ArrowType::None;
  int t = 0;  // type (1): src = g^t(rep of src-orbit)
  int b = 0;  // type (4): scalar exponent, normalized to [0, n)
};

/// Classify an arrow against a representative choice.  Exactly one arrow per
/// star-orbit classifies as a representative of types (1)-(4); all others
/// report ArrowType::None.
ArrowClass classify_arrow(const Quiver& q, const CyclicAction& action, const Representatives& reps,
                          ArrowIdx a);

enum class CycleType { I = 1, II = 2, III = 3, IV = 4 };

/// Classification of one potential cycle: its type by fixed-vertex visits,
/// the chosen written representative of its star-orbit, and the integer
/// data needed to assemble the skew potential.
struct CycleClass {
  CycleType type;
  Cycle cycle;                  // the classified cycle, canonical
  std::vector<ArrowIdx> chat;   // written cycle (a specific rotation/translate in the orbit)
  std::vector<ArrowIdx> reps;   // reps[i] = representative arrow at position i+1 of chat
  std::vector<int> t;           // t_i (types I, II); zeros otherwise
  std::vector<int> b_suffix;    // b_i = b(a_i)+...+b(a_l), indices 1..l+1 (b_{l+1} = 0)
  int p = 0;                    // type II twist
  int q = 0;                    // type III twist (= b_3)
  int orbit_size = 1;           // size of the star-orbit of the cycle
};

/// Per-assumption outcome with a concrete witness on failure.
struct AssumptionCheck {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool all_pass() const;
  std::string str() const;
};

struct AssumptionError : std::runtime_error {
  explicit AssumptionError(AssumptionReport r);
  AssumptionReport report;
};

/// Check assumptions (A2)-(A7) of the construction; failures are report
/// entries, never exceptions.
AssumptionReport validate_action(const Quiver& q, const Potential& w, const CyclicAction& action);

/// Options controlling the one genuine choice in the construction: the
/// written representative of a type (i) cycle orbit.  The default picks the
/// lexicographically least candidate; a seed picks pseudo-randomly among the
/// candidates (the resulting skew potential must not depend on it modulo
/// rotation, which the test suite checks as a property).
struct SkewOptions {
  std::optional<unsigned long> type_i_choice_seed;
};

/// Classify a single potential cycle.  Throws std::invalid_argument if the
/// cycle is not in W or violates (A7).
CycleClass classify_cycle(const Quiver& q, const Potential& w, const CyclicAction& action,
                          const Representatives& reps, const Cycle& c);

/// One entry per star-orbit of potential cycles, carrying the chosen written
/// form and the coefficient of the chosen representative.
struct OrbitClass {
  CycleClass cls;
  Cyclotomic coeff;  // a(chat): coefficient in W of the cycle underlying chat
};

std::vector<OrbitClass> classify_potential(const Quiver& q, const Potential& w,
                                           const CyclicAction& action, const Representatives& reps,
                                           const SkewOptions& opts = {});

/// The type (iii) coefficient recursion: a(g*c) = zeta^{q(c)} a(c) for every
/// type (iii) cycle of W.
bool check_type3_coefficients(const Quiver& q, const Potential& w, const CyclicAction& action,
                              const Representatives& reps);

}  // namespace skewqp
