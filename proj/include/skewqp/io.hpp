#pragma once

#include <stdexcept>
#include <string>

#include "skewqp/skew.hpp"

namespace skewqp {

/// Malformed input: bad JSON, schema violations, unknown identifiers.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedQP {
  Quiver quiver;
  Potential potential;
};

/// Interchange format:
///   {"zeta_order": n,
///    "vertices": ["v", ...],
///    "arrows": [{"id": "a", "src": "v", "tgt": "w"}, ...],
///    "potential": [{"cycle": ["a", ...], "coeff": [[k, p, q], ...]}, ...]}
/// A coeff term [k, p, q] contributes (p/q) * zeta^k; the parser sums and
/// reduces, and cycles are canonicalized on load.  Numerators and
/// denominators may be JSON integers or decimal strings.
LoadedQP qp_from_json(const std::string& text);
std::string qp_to_json(const Quiver& q, const Potential& w);

/// Action format:
///   {"order": n,
///    "vertex_map": {"v": "g(v)", ...},
///    "arrow_map": {"a": {"arrow": "a2", "zeta_exp": b}, ...}}
/// zeta_exp defaults to 0.
CyclicAction action_from_json(const Quiver& q, const std::string& text);
std::string action_to_json(const Quiver& q, const CyclicAction& action);

LoadedQP load_qp_file(const std::string& path);
CyclicAction load_action_file(const Quiver& q, const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Sidecar mapping every skew vertex and arrow back to its base datum.
std::string skew_provenance_json(const SkewQP& skew);

/// DOT rendering; with an action and representatives, fixed vertices are
/// drawn as double circles and representative arrows carry their type.
std::string dot_export(const Quiver& q, const CyclicAction* action = nullptr,
                       const Representatives* reps = nullptr);

}  // namespace skewqp
