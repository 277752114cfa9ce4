#include "skewqp/potential.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skewqp {

void PathCombination::add(const Path& p, const Cyclotomic& c) {
  if (c.order() != zeta_order_)
    throw std::invalid_argument("PathCombination: coefficient order mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

PathCombination& PathCombination::operator+=(const PathCombination& rhs) {
  if (rhs.zeta_order_ != zeta_order_)
    throw std::invalid_argument("PathCombination: order mismatch");
  for (const auto& [p, c] : rhs.terms_) add(p, c);
  return *this;
}

PathCombination& PathCombination::operator*=(const Cyclotomic& c) {
  if (c.order() != zeta_order_)
    throw std::invalid_argument("PathCombination: coefficient order mismatch");
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

bool PathCombination::is_relation(const Quiver& q) const {
  if (terms_.empty()) return true;
  VertexIdx s = path_src(q, terms_.begin()->first);
  VertexIdx t = path_tgt(q, terms_.begin()->first);
  for (const auto& [p, c] : terms_)
    if (path_src(q, p) != s || path_tgt(q, p) != t) return false;
  return true;
}

std::string PathCombination::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*" << path_str(q, p);
    first = false;
  }
  return out.str();
}

void Potential::add(const Cycle& c, const Cyclotomic& coeff) {
  if (coeff.order() != zeta_order_)
    throw std::invalid_argument("Potential: coefficient order mismatch");
  if (c.length() < 3) throw std::invalid_argument("Potential: cycles must have length >= 3");
  if (coeff.is_zero()) return;
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    terms_.emplace(c, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

void Potential::add(const Quiver& q, const Path& closed, const Cyclotomic& coeff) {
  add(canonical_cycle(q, closed), coeff);
}

const Cyclotomic* Potential::coeff(const Cycle& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? nullptr : &it->second;
}

std::string Potential::str(const Quiver& q) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [c, v] : terms_) {
    if (!first) out << " + ";
    out << "(" << v.str() << ")*" << cycle_str(q, c);
    first = false;
  }
  return out.str();
}

PathCombination cyclic_derivative(const Quiver& q, const Potential& w, ArrowIdx alpha) {
  if (alpha >= q.num_arrows()) throw std::invalid_argument("cyclic_derivative: unknown arrow");
  PathCombination out(w.zeta_order());
  for (const auto& [cycle, coeff] : w.terms()) {
    const auto& word = cycle.word();
    const size_t l = word.size();
    for (size_t i = 0; i < l; ++i) {
      if (word[i] != alpha) continue;
      Path p;
      p.word.reserve(l - 1);
      for (size_t k = 1; k < l; ++k) p.word.push_back(word[(i + k) % l]);
      out.add(p, coeff);
    }
  }
  return out;
}

PathCombination scaled_derivative(const Quiver& q, const Potential& w, ArrowIdx alpha,
                                  const Cyclotomic& lambda) {
  if (lambda.is_zero()) throw std::domain_error("scaled_derivative: zero scalar");
  PathCombination out = cyclic_derivative(q, w, alpha);
  out *= lambda.inv();
  return out;
}

bool potential_equal(const Potential& a, const Potential& b) {
  return a.zeta_order() == b.zeta_order() && a.terms() == b.terms();
}

std::vector<std::pair<ArrowIdx, PathCombination>> jacobian_relations(const Quiver& q,
                                                                     const Potential& w) {
  std::vector<ArrowIdx> order(q.num_arrows());
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) order[a] = a;
  std::sort(order.begin(), order.end(),
            [&](ArrowIdx x, ArrowIdx y) { return q.name_rank(x) < q.name_rank(y); });
  std::vector<std::pair<ArrowIdx, PathCombination>> out;
  for (ArrowIdx a : order) {
    PathCombination d = cyclic_derivative(q, w, a);
    if (!d.is_zero()) out.emplace_back(a, std::move(d));
  }
  return out;
}

}  // namespace skewqp
