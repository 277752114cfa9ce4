#pragma once

#include <map>
#include <tuple>

#include "skewqp/action.hpp"

namespace skewqp {

/// Provenance of a skew-quiver vertex: eta(base) when mu == -1 (base in
/// eps_prime), eta(base, mu) otherwise (base fixed).
struct SkewVertexInfo {
  VertexIdx base;
  int mu;
};

/// Provenance of a skew-quiver arrow: the representative base arrow, its
/// type, the idempotent index mu (-1 for type 1), and the classification
/// integers t (type 1) / b (type 4).
struct SkewArrowInfo {
  ArrowType type;
  ArrowIdx base_rep;
  int mu;
  int t = 0;
  int b = 0;
};

/// The skew quiver with potential (Q_G, W_G) together with the inputs it was
/// built from and provenance maps in both directions.  Vertex and arrow
/// names encode provenance textually: "eta(v)", "eta(v,mu)", "t1(a)",
/// "t2(a,mu)", "t3(a,mu)", "t4(a,mu)".
struct SkewQP {
  Quiver base_quiver;
  Potential base_potential;
  CyclicAction action;
  Representatives reps;

  Quiver quiver;        // Q_G
  Potential potential;  // W_G
  std::vector<SkewVertexInfo> vertex_info;
  std::vector<SkewArrowInfo> arrow_info;

  /// eta(base) for mu == -1, eta(base, mu) otherwise.
  VertexIdx skew_vertex(VertexIdx base, int mu) const;
  ArrowIdx skew_arrow(ArrowType type, ArrowIdx base_rep, int mu) const;

  std::map<std::pair<VertexIdx, int>, VertexIdx> vertex_lookup;
  std::map<std::tuple<int, ArrowIdx, int>, ArrowIdx> arrow_lookup;
};

/// Build (Q_G, W_G).  Validates the assumptions first and throws
/// AssumptionError carrying the report if any fails.
SkewQP build_skew_qp(const Quiver& q, const Potential& w, const CyclicAction& action,
                     const Representatives& reps, const SkewOptions& opts = {});

/// The action of the dual group on (Q_G, W_G): fixes eta(v), shifts
/// eta(v,mu) -> eta(v,mu+1), multiplies a type (1) arrow by zeta^{t} and
/// shifts the mu index of the others.
CyclicAction dual_action(const SkewQP& skew);

struct RoundTrip {
  SkewQP skew;         // (Q_G, W_G)
  CyclicAction dual;   // dual group action on Q_G
  SkewQP double_skew;  // ((Q_G)_dual, (W_G)_dual)
  std::vector<VertexIdx> phi_vertex;  // double_skew vertex -> Q vertex
  std::vector<ArrowIdx> phi_arrow;    // double_skew arrow -> Q arrow
  bool quiver_isomorphism = false;
  Potential mapped;  // phi((W_G)_dual) as a potential on Q
  bool potential_match = false;
};

/// Full dual-group round trip: build (Q_G, W_G), act by the dual group,
/// build the double skew QP with the distinguished representative set
/// {eta(v,0) | v fixed} + {eta(v) | v in eps_prime}, construct the explicit
/// quiver isomorphism phi back to Q, and compare phi((W_G)_dual) with W.
RoundTrip roundtrip(const Quiver& q, const Potential& w, const CyclicAction& action,
                    const Representatives& reps, const SkewOptions& opts = {});

}  // namespace skewqp
