#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace skewqp {

using VertexIdx = std::uint32_t;
using ArrowIdx = std::uint32_t;
inline constexpr VertexIdx kNoVertex = static_cast<VertexIdx>(-1);

struct Arrow {
  std::string name;
  VertexIdx src;
  VertexIdx tgt;
};

/// A finite directed multigraph with named vertices and arrows.  Immutable
/// after construction.  Parallel arrows and loops are allowed.
class Quiver {
public:
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

  size_t num_vertices() const { return vertex_names_.size(); }
  size_t num_arrows() const { return arrows_.size(); }

  const std::string& vertex_name(VertexIdx v) const { return vertex_names_[v]; }
  const Arrow& arrow(ArrowIdx a) const { return arrows_[a]; }
  VertexIdx src(ArrowIdx a) const { return arrows_[a].src; }
  VertexIdx tgt(ArrowIdx a) const { return arrows_[a].tgt; }

  std::optional<VertexIdx> find_vertex(const std::string& name) const;
  std::optional<ArrowIdx> find_arrow(const std::string& name) const;
  VertexIdx vertex(const std::string& name) const;  // throws on unknown name
  ArrowIdx arrow_id(const std::string& name) const;

  /// Rank of an arrow in the lexicographic order of arrow names; used to
  /// canonicalize cycle rotations deterministically.
  int name_rank(ArrowIdx a) const { return name_rank_[a]; }

  /// Connectivity of the underlying undirected graph.
  bool is_connected() const;

private:
  std::vector<std::string> vertex_names_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexIdx> vertex_index_;
  std::map<std::string, ArrowIdx> arrow_index_;
  std::vector<int> name_rank_;
};

/// A path, stored as arrow indices in composition order: word[0] is applied
/// last, so the path runs src(word.back()) -> ... -> tgt(word.front()).
/// An empty word is the trivial path at `base`.
struct Path {
  std::vector<ArrowIdx> word;
  VertexIdx base = kNoVertex;

  static Path trivial(VertexIdx v) { return Path{{}, v}; }
  static Path of(std::vector<ArrowIdx> arrows) { return Path{std::move(arrows), kNoVertex}; }

  bool is_trivial() const { return word.empty(); }
  size_t length() const { return word.size(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) = default;
};

VertexIdx path_src(const Quiver& q, const Path& p);
VertexIdx path_tgt(const Quiver& q, const Path& p);
bool path_composable(const Quiver& q, const Path& p);
/// first * second = "second, then first"; nullopt if endpoints mismatch.
std::optional<Path> compose(const Quiver& q, const Path& first, const Path& second);
std::string path_str(const Quiver& q, const Path& p);

/// A cycle: a closed path identified up to cyclic rotation of its arrows,
/// stored in the canonical rotation (lexicographically minimal sequence of
/// arrow names).  Orientation is never reversed.
class Cycle {
public:
  const std::vector<ArrowIdx>& word() const { return word_; }
  size_t length() const { return word_.size(); }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle& a, const Cycle& b) = default;

  friend Cycle canonical_cycle(const Quiver& q, const Path& p);
  friend Cycle canonical_cycle(const Quiver& q, const std::vector<ArrowIdx>& word);

private:
  std::vector<ArrowIdx> word_;
};

/// Canonical form of a closed path; throws std::invalid_argument if the path
/// is not closed or is trivial.  Idempotent on already-canonical input.
Cycle canonical_cycle(const Quiver& q, const Path& p);
Cycle canonical_cycle(const Quiver& q, const std::vector<ArrowIdx>& word);
std::string cycle_str(const Quiver& q, const Cycle& c);

/// Vertex visited between arrow word[i] and word[i-1]; that is, the sequence
/// of vertices a cycle passes through, counted with multiplicity.
std::vector<VertexIdx> cycle_vertices(const Quiver& q, const Cycle& c);

}  // namespace skewqp
