#include "skewqp/cuts.hpp"

#include <algorithm>
#include <map>

namespace skewqp {

bool is_cut(const Quiver& q, const Potential& w, const Cut& c) {
  for (ArrowIdx a : c)
    if (a >= q.num_arrows()) throw std::invalid_argument("is_cut: arrow out of range");
  for (const auto& [cycle, coeff] : w.terms()) {
    int degree = 0;
    for (ArrowIdx a : cycle.word())
      if (c.count(a)) ++degree;
    if (degree != 1) return false;
  }
  return true;
}

bool is_g_invariant(const CyclicAction& action, const Cut& c) {
  for (ArrowIdx a : c)
    if (!c.count(action.star(a))) return false;
  return true;
}

namespace {

// Exact-one cover search.  Units are arrows or arrow-orbits; every potential
// cycle must contain exactly one occurrence (with multiplicity) of a chosen
// unit.
struct CutSearch {
  // occ[cycle][unit] = occurrence count
  std::vector<std::map<int, int>> occ;
  size_t num_units = 0;
  std::vector<std::vector<ArrowIdx>> unit_arrows;
  std::vector<Cut> results;

  enum State : char { Undecided, In, Out };

  void run() {
    std::vector<char> state(num_units, Undecided);
    std::vector<int> chosen(occ.size(), 0);
    search(state, chosen);
    std::sort(results.begin(), results.end());
  }

  bool cycle_viable(const std::vector<char>& state, const std::vector<int>& chosen, size_t ci,
                    int* undecided_units) const {
    if (chosen[ci] > 1) return false;
    int undecided = 0;
    for (const auto& [u, k] : occ[ci]) {
      if (state[u] == Undecided) ++undecided;
    }
    if (undecided_units) *undecided_units = undecided;
    if (chosen[ci] == 1) return true;
    return undecided > 0;
  }

  void search(std::vector<char>& state, std::vector<int>& chosen) {
    // Find the unsatisfied cycle with the fewest undecided units.
    size_t best = occ.size();
    int best_undecided = 0;
    for (size_t ci = 0; ci < occ.size(); ++ci) {
      int undecided = 0;
      if (!cycle_viable(state, chosen, ci, &undecided)) return;  // dead branch
      if (chosen[ci] == 1) continue;
      if (best == occ.size() || undecided < best_undecided) {
        best = ci;
        best_undecided = undecided;
      }
    }
    if (best == occ.size()) {
      Cut cut;
      for (size_t u = 0; u < num_units; ++u) {
        if (state[u] != In) continue;
        for (ArrowIdx a : unit_arrows[u]) cut.insert(a);
      }
      results.push_back(std::move(cut));
      return;
    }
    // Exactly one undecided unit of this cycle goes in; an occurrence count
    // above one rules the unit out everywhere.
    for (const auto& [u, k] : occ[best]) {
      if (state[u] != Undecided) continue;
      if (k == 1) {
        std::vector<char> state2 = state;
        std::vector<int> chosen2 = chosen;
        state2[u] = In;
        for (size_t ci = 0; ci < occ.size(); ++ci) {
          auto it = occ[ci].find(static_cast<int>(u));
          if (it != occ[ci].end()) chosen2[ci] += it->second;
        }
        // Every other undecided unit of the now-satisfied cycle is forced out.
        for (const auto& [u2, k2] : occ[best]) {
          if (state2[u2] == Undecided) state2[u2] = Out;
        }
        search(state2, chosen2);
      }
      state[u] = Out;  // continue with this unit excluded
    }
  }
};

CutSearch make_search(const Quiver& q, const Potential& w, bool g_invariant,
                      const CyclicAction* action) {
  CutSearch s;
  std::vector<int> unit_of(q.num_arrows(), -1);
  if (!g_invariant) {
    s.num_units = q.num_arrows();
    s.unit_arrows.resize(q.num_arrows());
    for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
      unit_of[a] = static_cast<int>(a);
      s.unit_arrows[a] = {a};
    }
  } else {
    if (!action) throw std::invalid_argument("enumerate_cuts: G-invariant mode needs an action");
    for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
      if (unit_of[a] != -1) continue;
      int u = static_cast<int>(s.unit_arrows.size());
      s.unit_arrows.emplace_back();
      ArrowIdx b = a;
      do {
        unit_of[b] = u;
        s.unit_arrows.back().push_back(b);
        b = action->star(b);
      } while (b != a);
    }
    s.num_units = s.unit_arrows.size();
  }
  for (const auto& [cycle, coeff] : w.terms()) {
    std::map<int, int> counts;
    for (ArrowIdx a : cycle.word()) ++counts[unit_of[a]];
    s.occ.push_back(std::move(counts));
  }
  return s;
}

}  // namespace

std::vector<Cut> enumerate_cuts(const Quiver& q, const Potential& w, bool g_invariant,
                                const CyclicAction* action) {
  if (w.is_zero()) return {Cut{}};
  CutSearch s = make_search(q, w, g_invariant, action);
  s.run();
  return std::move(s.results);
}

Cut induce_cut(const SkewQP& skew, const Cut& c) {
  const Quiver& q = skew.base_quiver;
  if (!is_cut(q, skew.base_potential, c))
    throw std::invalid_argument("induce_cut: the given arrow set is not a cut");
  if (!is_g_invariant(skew.action, c))
    throw std::invalid_argument("induce_cut: the cut is not G-invariant");
  const int n = skew.action.order();
  Cut out;
  for (ArrowIdx a : c) {
    ArrowClass cls = classify_arrow(q, skew.action, skew.reps, a);
    switch (cls.type) {
      case ArrowType::None:
        break;
      case ArrowType::T1:
        out.insert(skew.skew_arrow(ArrowType::T1, a, -1));
        break;
      default:
        for (int mu = 0; mu < n; ++mu) out.insert(skew.skew_arrow(cls.type, a, mu));
        break;
    }
  }
  if (!is_cut(skew.quiver, skew.potential, out))
    throw std::logic_error("induce_cut: induced arrow set fails to be a cut of (Q_G, W_G)");
  return out;
}

namespace {

// An arrow outside every potential cycle can be added to any cut without
// changing degrees, so it counts as covered as soon as one cut exists.
bool enough(const Quiver& q, const Potential& w, const std::vector<Cut>& cuts,
            std::vector<ArrowIdx>* uncovered) {
  std::vector<bool> covered(q.num_arrows(), false);
  for (const Cut& c : cuts)
    for (ArrowIdx a : c) covered[a] = true;
  if (!cuts.empty()) {
    std::vector<bool> in_support(q.num_arrows(), false);
    for (const auto& [cycle, coeff] : w.terms())
      for (ArrowIdx a : cycle.word()) in_support[a] = true;
    for (ArrowIdx a = 0; a < q.num_arrows(); ++a)
      if (!in_support[a]) covered[a] = true;
  }
  bool all = true;
  if (uncovered) uncovered->clear();
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    if (covered[a]) continue;
    all = false;
    if (uncovered) uncovered->push_back(a);
  }
  return all;
}

}  // namespace

bool has_enough_cuts(const Quiver& q, const Potential& w, std::vector<ArrowIdx>* uncovered) {
  return enough(q, w, enumerate_cuts(q, w), uncovered);
}

bool has_enough_g_invariant_cuts(const Quiver& q, const Potential& w, const CyclicAction& action,
                                 std::vector<ArrowIdx>* uncovered) {
  return enough(q, w, enumerate_cuts(q, w, true, &action), uncovered);
}

TruncatedPresentation truncated_presentation(const Quiver& q, const Potential& w, const Cut& c) {
  if (!is_cut(q, w, c)) throw std::invalid_argument("truncated_presentation: not a cut");
  std::vector<std::string> vertices;
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) vertices.push_back(q.vertex_name(v));
  std::vector<Arrow> arrows;
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a)
    if (!c.count(a)) arrows.push_back(q.arrow(a));
  Quiver trunc(std::move(vertices), std::move(arrows));

  TruncatedPresentation out{std::move(trunc), {}};
  std::vector<ArrowIdx> cut_sorted(c.begin(), c.end());
  std::sort(cut_sorted.begin(), cut_sorted.end(),
            [&](ArrowIdx x, ArrowIdx y) { return q.name_rank(x) < q.name_rank(y); });
  for (ArrowIdx a : cut_sorted) {
    PathCombination d = cyclic_derivative(q, w, a);
    PathCombination remapped(d.zeta_order());
    for (const auto& [p, coeff] : d.terms()) {
      Path rp;
      rp.word.reserve(p.word.size());
      for (ArrowIdx e : p.word) {
        if (c.count(e))
          throw std::logic_error("truncated_presentation: relation is not cut-free");
        rp.word.push_back(out.quiver.arrow_id(q.arrow(e).name));
      }
      if (p.is_trivial()) rp = Path::trivial(out.quiver.vertex(q.vertex_name(p.base)));
      remapped.add(rp, coeff);
    }
    out.relations.emplace_back(q.arrow(a).name, std::move(remapped));
  }
  return out;
}

}  // namespace skewqp
