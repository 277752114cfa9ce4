#include "skewqp/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skewqp {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  if (vertex_names_.empty()) throw std::invalid_argument("Quiver: needs at least one vertex");
  for (VertexIdx v = 0; v < vertex_names_.size(); ++v) {
    if (!vertex_index_.emplace(vertex_names_[v], v).second)
      throw std::invalid_argument("Quiver: duplicate vertex id '" + vertex_names_[v] + "'");
  }
  for (ArrowIdx a = 0; a < arrows_.size(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.src >= vertex_names_.size() || ar.tgt >= vertex_names_.size())
      throw std::invalid_argument("Quiver: arrow '" + ar.name + "' has undeclared endpoint");
    if (!arrow_index_.emplace(ar.name, a).second)
      throw std::invalid_argument("Quiver: duplicate arrow id '" + ar.name + "'");
  }
  name_rank_.resize(arrows_.size());
  int rank = 0;
  for (const auto& [name, idx] : arrow_index_) name_rank_[idx] = rank++;
}

std::optional<VertexIdx> Quiver::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowIdx> Quiver::find_arrow(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

VertexIdx Quiver::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw std::invalid_argument("Quiver: unknown vertex '" + name + "'");
  return *v;
}

ArrowIdx Quiver::arrow_id(const std::string& name) const {
  auto a = find_arrow(name);
  if (!a) throw std::invalid_argument("Quiver: unknown arrow '" + name + "'");
  return *a;
}

bool Quiver::is_connected() const {
  std::vector<std::vector<VertexIdx>> adj(num_vertices());
  for (const Arrow& a : arrows_) {
    adj[a.src].push_back(a.tgt);
    adj[a.tgt].push_back(a.src);
  }
  std::vector<bool> seen(num_vertices(), false);
  std::vector<VertexIdx> stack{0};
  seen[0] = true;
  size_t count = 0;
  while (!stack.empty()) {
    VertexIdx v = stack.back();
    stack.pop_back();
    ++count;
    for (VertexIdx w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

VertexIdx path_src(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return p.base;
  return q.src(p.word.back());
}

VertexIdx path_tgt(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return p.base;
  return q.tgt(p.word.front());
}

bool path_composable(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return p.base != kNoVertex && p.base < q.num_vertices();
  for (size_t i = 0; i + 1 < p.word.size(); ++i)
    if (q.src(p.word[i]) != q.tgt(p.word[i + 1])) return false;
  return true;
}

std::optional<Path> compose(const Quiver& q, const Path& first, const Path& second) {
  if (path_src(q, first) != path_tgt(q, second)) return std::nullopt;
  if (first.is_trivial()) return second;
  if (second.is_trivial()) return first;
  Path out = first;
  out.word.insert(out.word.end(), second.word.begin(), second.word.end());
  return out;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e(" + q.vertex_name(p.base) + ")";
  std::ostringstream out;
  for (size_t i = 0; i < p.word.size(); ++i) {
    if (i) out << ".";
    out << q.arrow(p.word[i]).name;
  }
  return out.str();
}

Cycle canonical_cycle(const Quiver& q, const std::vector<ArrowIdx>& word) {
  return canonical_cycle(q, Path::of(word));
}

Cycle canonical_cycle(const Quiver& q, const Path& p) {
  if (p.is_trivial() || p.word.empty())
    throw std::invalid_argument("canonical_cycle: trivial path is not a cycle");
  if (!path_composable(q, p) || path_src(q, p) != path_tgt(q, p))
    throw std::invalid_argument("canonical_cycle: path is not closed");
  const size_t l = p.word.size();
  auto rank_less = [&](size_t r1, size_t r2) {
    for (size_t i = 0; i < l; ++i) {
      int a = q.name_rank(p.word[(r1 + i) % l]);
      int b = q.name_rank(p.word[(r2 + i) % l]);
      if (a != b) return a < b;
    }
    return false;
  };
  size_t best = 0;
  for (size_t r = 1; r < l; ++r)
    if (rank_less(r, best)) best = r;
  Cycle c;
  c.word_.reserve(l);
  for (size_t i = 0; i < l; ++i) c.word_.push_back(p.word[(best + i) % l]);
  return c;
}

std::string cycle_str(const Quiver& q, const Cycle& c) {
  return path_str(q, Path::of(c.word()));
}

std::vector<VertexIdx> cycle_vertices(const Quiver& q, const Cycle& c) {
  std::vector<VertexIdx> out;
  out.reserve(c.length());
  for (ArrowIdx a : c.word()) out.push_back(q.src(a));
  return out;
}

}  // namespace skewqp
