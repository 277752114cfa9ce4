#include "skewqp/action.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace skewqp {

namespace {

std::vector<ArrowIdx> rotate_word(const std::vector<ArrowIdx>& w, size_t j) {
  std::vector<ArrowIdx> out;
  out.reserve(w.size());
  for (size_t i = 0; i < w.size(); ++i) out.push_back(w[(j + i) % w.size()]);
  return out;
}

}  // namespace

CyclicAction::CyclicAction(const Quiver& q, int order, std::vector<VertexIdx> vertex_map,
                           std::vector<ArrowImage> arrow_map)
    : order_(order), vertex_map_(std::move(vertex_map)), arrow_map_(std::move(arrow_map)) {
  if (order_ < 1) throw std::invalid_argument("CyclicAction: order must be positive");
  if (vertex_map_.size() != q.num_vertices() || arrow_map_.size() != q.num_arrows())
    throw std::invalid_argument("CyclicAction: map sizes do not match the quiver");
  std::vector<int> seen_v(q.num_vertices(), 0), seen_a(q.num_arrows(), 0);
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) {
    if (vertex_map_[v] >= q.num_vertices())
      throw std::invalid_argument("CyclicAction: vertex image out of range");
    ++seen_v[vertex_map_[v]];
  }
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    ArrowImage& im = arrow_map_[a];
    if (im.arrow >= q.num_arrows())
      throw std::invalid_argument("CyclicAction: arrow image out of range");
    im.zeta_exp = ((im.zeta_exp % order_) + order_) % order_;
    ++seen_a[im.arrow];
    if (q.src(im.arrow) != vertex_map_[q.src(a)] || q.tgt(im.arrow) != vertex_map_[q.tgt(a)])
      throw std::invalid_argument("CyclicAction: image of arrow '" + q.arrow(a).name +
                                  "' does not respect incidence");
  }
  for (int c : seen_v)
    if (c != 1) throw std::invalid_argument("CyclicAction: vertex map is not a permutation");
  for (int c : seen_a)
    if (c != 1) throw std::invalid_argument("CyclicAction: arrow map is not a permutation");
  // g^n must be the identity permutation (scalar accumulation is checked by
  // the validator, so that broken scalar data can be reported, not thrown).
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) {
    VertexIdx w = v;
    for (int i = 0; i < order_; ++i) w = vertex_map_[w];
    if (w != v)
      throw std::invalid_argument("CyclicAction: vertex permutation order does not divide " +
                                  std::to_string(order_));
  }
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    ArrowIdx b = a;
    for (int i = 0; i < order_; ++i) b = arrow_map_[b].arrow;
    if (b != a)
      throw std::invalid_argument("CyclicAction: arrow permutation order does not divide " +
                                  std::to_string(order_));
  }
  vertex_inverse_.resize(q.num_vertices());
  arrow_inverse_.resize(q.num_arrows());
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) vertex_inverse_[vertex_map_[v]] = v;
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) arrow_inverse_[arrow_map_[a].arrow] = a;
}

CyclicAction CyclicAction::trivial(const Quiver& q) {
  std::vector<VertexIdx> vmap(q.num_vertices());
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) vmap[v] = v;
  std::vector<ArrowImage> amap(q.num_arrows());
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) amap[a] = ArrowImage{a, 0};
  return CyclicAction(q, 1, std::move(vmap), std::move(amap));
}

int CyclicAction::norm(int k) const { return ((k % order_) + order_) % order_; }

VertexIdx CyclicAction::vertex_image(VertexIdx v, int k) const {
  int steps = norm(k);
  for (int i = 0; i < steps; ++i) v = vertex_map_[v];
  return v;
}

ArrowImage CyclicAction::arrow_image(ArrowIdx a, int k) const {
  int steps = norm(k);
  ArrowImage out{a, 0};
  for (int i = 0; i < steps; ++i) {
    out.zeta_exp += arrow_map_[out.arrow].zeta_exp;
    out.arrow = arrow_map_[out.arrow].arrow;
  }
  out.zeta_exp %= order_;
  return out;
}

ArrowIdx CyclicAction::star(ArrowIdx a, int k) const { return arrow_image(a, k).arrow; }

int CyclicAction::vertex_orbit_size(VertexIdx v) const {
  int size = 1;
  VertexIdx w = vertex_map_[v];
  while (w != v) {
    ++size;
    w = vertex_map_[w];
  }
  return size;
}

int CyclicAction::arrow_orbit_size(ArrowIdx a) const {
  int size = 1;
  ArrowIdx b = arrow_map_[a].arrow;
  while (b != a) {
    ++size;
    b = arrow_map_[b].arrow;
  }
  return size;
}

std::optional<int> CyclicAction::power_from(VertexIdx from, VertexIdx to) const {
  VertexIdx w = from;
  for (int r = 0; r < order_; ++r) {
    if (w == to) return r;
    w = vertex_map_[w];
  }
  return std::nullopt;
}

std::pair<Path, int> CyclicAction::path_image(const Path& p, int k) const {
  if (p.is_trivial()) return {Path::trivial(vertex_image(p.base, k)), 0};
  Path out;
  out.word.reserve(p.word.size());
  int exp = 0;
  for (ArrowIdx a : p.word) {
    ArrowImage im = arrow_image(a, k);
    out.word.push_back(im.arrow);
    exp += im.zeta_exp;
  }
  return {out, exp % order_};
}

Potential CyclicAction::apply(const Quiver& q, const Potential& w, int k) const {
  if (w.zeta_order() != order_)
    throw std::invalid_argument("CyclicAction::apply: potential coefficient order differs from group order");
  Potential out(order_);
  for (const auto& [cycle, coeff] : w.terms()) {
    auto [path, exp] = path_image(Path::of(cycle.word()), k);
    out.add(canonical_cycle(q, path), coeff * Cyclotomic::zeta_pow(order_, exp));
  }
  return out;
}

Representatives choose_representatives(const Quiver& q, const CyclicAction& action,
                                       const std::vector<std::string>& override_names) {
  const size_t nv = q.num_vertices();
  Representatives out;
  out.rep_of.assign(nv, kNoVertex);
  out.power_of.assign(nv, 0);

  std::vector<VertexIdx> chosen;
  if (override_names.empty()) {
    std::vector<VertexIdx> by_name(nv);
    for (VertexIdx v = 0; v < nv; ++v) by_name[v] = v;
    std::sort(by_name.begin(), by_name.end(),
              [&](VertexIdx a, VertexIdx b) { return q.vertex_name(a) < q.vertex_name(b); });
    std::vector<bool> assigned(nv, false);
    for (VertexIdx v : by_name) {
      if (assigned[v]) continue;
      chosen.push_back(v);
      VertexIdx w = v;
      do {
        assigned[w] = true;
        w = action.vertex_image(w);
      } while (w != v);
    }
  } else {
    for (const std::string& name : override_names) chosen.push_back(q.vertex(name));
  }

  for (VertexIdx rep : chosen) {
    if (out.rep_of[rep] != kNoVertex)
      throw std::invalid_argument("choose_representatives: override is not a transversal (vertex '" +
                                  q.vertex_name(rep) + "' repeats an orbit)");
    VertexIdx w = rep;
    int r = 0;
    do {
      out.rep_of[w] = rep;
      out.power_of[w] = r;
      w = action.vertex_image(w);
      ++r;
    } while (w != rep);
  }
  for (VertexIdx v = 0; v < nv; ++v) {
    if (out.rep_of[v] == kNoVertex)
      throw std::invalid_argument(
          "choose_representatives: override is not a transversal (no representative for vertex '" +
          q.vertex_name(v) + "')");
  }

  for (VertexIdx v : chosen) {
    if (action.vertex_fixed(v))
      out.eps_fixed.push_back(v);
    else
      out.eps_prime.push_back(v);
  }
  auto by_name = [&](VertexIdx a, VertexIdx b) { return q.vertex_name(a) < q.vertex_name(b); };
  std::sort(out.eps_prime.begin(), out.eps_prime.end(), by_name);
  std::sort(out.eps_fixed.begin(), out.eps_fixed.end(), by_name);
  return out;
}

ArrowClass classify_arrow(const Quiver& q, const CyclicAction& action, const Representatives& reps,
                          ArrowIdx a) {
  const bool sf = action.vertex_fixed(q.src(a));
  const bool tf = action.vertex_fixed(q.tgt(a));
  ArrowClass out;
  if (!sf && !tf) {
    if (reps.is_rep(q.tgt(a))) {
      out.type = ArrowType::T1;
      out.t = reps.power_of[q.src(a)];
    }
  } else if (!sf && tf) {
    if (reps.is_rep(q.src(a))) out.type = ArrowType::T2;
  } else if (sf && !tf) {
    if (reps.is_rep(q.tgt(a))) out.type = ArrowType::T3;
  } else {
    out.type = ArrowType::T4;
    out.b = action.b(a);
  }
  return out;
}

namespace {

std::optional<CycleType> cycle_type_of(const Quiver& q, const CyclicAction& action,
                                       const std::vector<ArrowIdx>& word) {
  const size_t l = word.size();
  size_t fixed = 0;
  for (ArrowIdx a : word)
    if (action.vertex_fixed(q.src(a))) ++fixed;
  if (fixed == 0) return CycleType::I;
  if (fixed == l) return CycleType::IV;
  if (fixed == 1) return CycleType::II;
  if (l - fixed == 1) return CycleType::III;
  return std::nullopt;
}

std::vector<ArrowIdx> star_word(const CyclicAction& action, const std::vector<ArrowIdx>& word,
                                int k) {
  std::vector<ArrowIdx> out;
  out.reserve(word.size());
  for (ArrowIdx a : word) out.push_back(action.star(a, k));
  return out;
}

// Candidate written forms of a type (i) orbit: one per rotation, translated
// so the base vertex (target of the leading arrow) is a representative.
std::vector<std::vector<ArrowIdx>> type_i_candidates(const Quiver& q, const CyclicAction& action,
                                                     const Representatives& reps,
                                                     const std::vector<ArrowIdx>& word) {
  std::vector<std::vector<ArrowIdx>> cands;
  const size_t l = word.size();
  for (size_t j = 0; j < l; ++j) {
    std::vector<ArrowIdx> rot = rotate_word(word, j);
    int r = reps.power_of[q.tgt(rot[0])];
    cands.push_back(star_word(action, rot, -r));
  }
  std::sort(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (q.name_rank(a[i]) != q.name_rank(b[i])) return q.name_rank(a[i]) < q.name_rank(b[i]);
    }
    return false;
  });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  return cands;
}

// Fill the position data (reps, t, b_suffix, p, q) of a classification whose
// type and written form chat are already set.
void decompose_chat(const Quiver& q, const CyclicAction& action, const Representatives& reps,
                    CycleClass& cls) {
  const auto& chat = cls.chat;
  const size_t l = chat.size();
  const int n = action.order();
  // pw[j]: power of the j-th visited vertex over its representative (0 for
  // fixed vertices); vertex j sits between chat[j] and chat[j-1].
  std::vector<int> pw(l + 1, 0);
  for (size_t j = 0; j < l; ++j) {
    VertexIdx v = q.tgt(chat[j]);
    pw[j] = action.vertex_fixed(v) ? 0 : reps.power_of[v];
  }
  pw[l] = pw[0];
  cls.reps.assign(l, 0);
  cls.t.assign(l, 0);
  cls.b_suffix.assign(l + 2, 0);

  auto expect = [&](ArrowIdx a, ArrowType want, const char* where) -> ArrowClass {
    ArrowClass ac = classify_arrow(q, action, reps, a);
    if (ac.type != want)
      throw std::invalid_argument(std::string("classify_cycle: ") + where +
                                  " does not decompose as expected (arrow '" + q.arrow(a).name +
                                  "')");
    return ac;
  };

  switch (cls.type) {
    case CycleType::I: {
      for (size_t i = 1; i <= l; ++i) {
        ArrowIdx rep = action.star(chat[i - 1], -pw[i - 1]);
        expect(rep, ArrowType::T1, "type (i) position");
        cls.reps[i - 1] = rep;
        int src_pw = reps.power_of[q.src(chat[i - 1])];
        cls.t[i - 1] = ((src_pw - pw[i - 1]) % n + n) % n;
      }
      break;
    }
    case CycleType::II: {
      expect(chat[0], ArrowType::T3, "type (ii) position 1");
      cls.reps[0] = chat[0];
      VertexIdx v2 = q.src(chat[1]);
      cls.p = reps.power_of[v2];
      ArrowIdx rep2 = action.star(chat[1], -cls.p);
      expect(rep2, ArrowType::T2, "type (ii) position 2");
      cls.reps[1] = rep2;
      cls.t[1] = cls.p;
      for (size_t i = 3; i <= l; ++i) {
        ArrowIdx rep = action.star(chat[i - 1], -pw[i - 1]);
        expect(rep, ArrowType::T1, "type (ii) position");
        cls.reps[i - 1] = rep;
        int src_pw = reps.power_of[q.src(chat[i - 1])];
        cls.t[i - 1] = ((src_pw - pw[i - 1]) % n + n) % n;
      }
      break;
    }
    case CycleType::III: {
      expect(chat[0], ArrowType::T2, "type (iii) position 1");
      expect(chat[1], ArrowType::T3, "type (iii) position 2");
      cls.reps[0] = chat[0];
      cls.reps[1] = chat[1];
      for (size_t i = 3; i <= l; ++i) {
        expect(chat[i - 1], ArrowType::T4, "type (iii) position");
        cls.reps[i - 1] = chat[i - 1];
      }
      for (size_t i = l; i >= 1; --i) {
        int bi = (i >= 3) ? action.b(chat[i - 1]) : 0;
        cls.b_suffix[i] = (cls.b_suffix[i + 1] + bi) % n;
      }
      cls.q = cls.b_suffix[3];
      break;
    }
    case CycleType::IV: {
      for (size_t i = 1; i <= l; ++i) {
        expect(chat[i - 1], ArrowType::T4, "type (iv) position");
        cls.reps[i - 1] = chat[i - 1];
      }
      for (size_t i = l; i >= 1; --i)
        cls.b_suffix[i] = (cls.b_suffix[i + 1] + action.b(chat[i - 1])) % n;
      break;
    }
  }
}

// Written form of a type (ii)/(iii)/(iv) orbit from any member; unique.
std::vector<ArrowIdx> normalize_chat(const Quiver& q, const CyclicAction& action,
                                     const Representatives& reps, CycleType type,
                                     const std::vector<ArrowIdx>& word) {
  const size_t l = word.size();
  if (type == CycleType::IV) return word;
  size_t pos = l;
  for (size_t j = 0; j < l; ++j) {
    bool fixed = action.vertex_fixed(q.src(word[j]));
    if ((type == CycleType::II && fixed) || (type == CycleType::III && !fixed)) {
      pos = j;
      break;
    }
  }
  if (pos == l) throw std::logic_error("normalize_chat: distinguished visit not found");
  std::vector<ArrowIdx> rot = rotate_word(word, pos);
  int r = (type == CycleType::II) ? reps.power_of[q.tgt(rot[0])] : reps.power_of[q.src(rot[0])];
  return star_word(action, rot, -r);
}

struct OrbitRaw {
  CycleType type;
  std::vector<Cycle> members;  // distinct canonical cycles of the star-orbit
};

// Group the potential cycles into star-orbits, in deterministic order.
std::vector<OrbitRaw> potential_orbits(const Quiver& q, const Potential& w,
                                       const CyclicAction& action) {
  std::vector<OrbitRaw> out;
  std::set<Cycle> processed;
  for (const auto& [cycle, coeff] : w.terms()) {
    if (processed.count(cycle)) continue;
    OrbitRaw orbit;
    auto type = cycle_type_of(q, action, cycle.word());
    if (!type)
      throw std::invalid_argument("potential cycle '" + cycle_str(q, cycle) +
                                  "' fits no cycle type: fixed-vertex visits violate the "
                                  "classification");
    orbit.type = *type;
    std::set<Cycle> members;
    for (int r = 0; r < action.order(); ++r) {
      Cycle m = canonical_cycle(q, star_word(action, cycle.word(), r));
      if (!w.coeff(m))
        throw std::invalid_argument("potential is not closed under the action: orbit member '" +
                                    cycle_str(q, m) + "' is missing");
      members.insert(m);
    }
    for (const Cycle& m : members) {
      processed.insert(m);
      orbit.members.push_back(m);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

CycleClass classify_orbit(const Quiver& q, const Potential& w, const CyclicAction& action,
                          const Representatives& reps, const OrbitRaw& orbit,
                          size_t type_i_choice) {
  CycleClass cls;
  cls.type = orbit.type;
  cls.orbit_size = static_cast<int>(orbit.members.size());
  const std::vector<ArrowIdx>& any = orbit.members.front().word();
  if (orbit.type == CycleType::I) {
    auto cands = type_i_candidates(q, action, reps, any);
    cls.chat = cands[type_i_choice % cands.size()];
  } else {
    cls.chat = normalize_chat(q, action, reps, orbit.type, any);
  }
  cls.cycle = canonical_cycle(q, cls.chat);
  if (!w.coeff(cls.cycle))
    throw std::logic_error("classify_orbit: written representative is not a potential cycle");
  decompose_chat(q, action, reps, cls);
  return cls;
}

}  // namespace

CycleClass classify_cycle(const Quiver& q, const Potential& w, const CyclicAction& action,
                          const Representatives& reps, const Cycle& c) {
  if (!w.coeff(c)) throw std::invalid_argument("classify_cycle: cycle does not appear in W");
  for (const OrbitRaw& orbit : potential_orbits(q, w, action)) {
    if (std::find(orbit.members.begin(), orbit.members.end(), c) == orbit.members.end()) continue;
    CycleClass cls = classify_orbit(q, w, action, reps, orbit, 0);
    cls.cycle = c;
    return cls;
  }
  throw std::logic_error("classify_cycle: cycle not found in any orbit");
}

std::vector<OrbitClass> classify_potential(const Quiver& q, const Potential& w,
                                           const CyclicAction& action, const Representatives& reps,
                                           const SkewOptions& opts) {
  std::mt19937_64 rng(opts.type_i_choice_seed.value_or(0));
  std::vector<OrbitClass> out;
  for (const OrbitRaw& orbit : potential_orbits(q, w, action)) {
    size_t choice = 0;
    if (orbit.type == CycleType::I && opts.type_i_choice_seed)
      choice = static_cast<size_t>(rng());
    CycleClass cls = classify_orbit(q, w, action, reps, orbit, choice);
    Cyclotomic coeff = *w.coeff(cls.cycle);
    out.push_back(OrbitClass{std::move(cls), std::move(coeff)});
  }
  return out;
}

bool AssumptionReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string AssumptionReport::str() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.pass) out << "  [" << c.witness << "]";
    out << "\n";
  }
  return out.str();
}

AssumptionError::AssumptionError(AssumptionReport r)
    : std::runtime_error("action does not satisfy the construction assumptions:\n" + r.str()),
      report(std::move(r)) {}

AssumptionReport validate_action(const Quiver& q, const Potential& w, const CyclicAction& action) {
  if (w.zeta_order() != action.order())
    throw std::invalid_argument("validate_action: potential coefficient order " +
                                std::to_string(w.zeta_order()) + " differs from group order " +
                                std::to_string(action.order()));
  const int n = action.order();
  AssumptionReport report;

  AssumptionCheck a2{"(A2)", true, ""};
  for (ArrowIdx a = 0; a < q.num_arrows() && a2.pass; ++a) {
    ArrowImage im = action.arrow_image(a, n);
    if (im.arrow != a || im.zeta_exp % n != 0) {
      a2.pass = false;
      a2.witness = "g^" + std::to_string(n) + " does not act as the identity on arrow '" +
                   q.arrow(a).name + "' (accumulated zeta exponent " + std::to_string(im.zeta_exp) +
                   ")";
    }
  }
  report.checks.push_back(a2);

  AssumptionCheck a3{"(A3)", true, ""};
  for (VertexIdx v = 0; v < q.num_vertices() && a3.pass; ++v) {
    if (action.vertex_fixed(v)) continue;
    int size = action.vertex_orbit_size(v);
    if (size != n) {
      a3.pass = false;
      a3.witness = "vertex '" + q.vertex_name(v) + "' has orbit of size " + std::to_string(size) +
                   " (expected " + std::to_string(n) + ")";
    }
  }
  report.checks.push_back(a3);

  AssumptionCheck a4{"(A4)", true, ""};
  {
    Potential gw = action.apply(q, w, 1);
    if (!potential_equal(gw, w)) {
      a4.pass = false;
      for (const auto& [c, v] : gw.terms()) {
        const Cyclotomic* orig = w.coeff(c);
        if (!orig || !(*orig == v)) {
          a4.witness = "cycle '" + cycle_str(q, c) + "' has coefficient " + v.str() +
                       " in g.W but " + (orig ? orig->str() : std::string("0")) + " in W";
          break;
        }
      }
      if (a4.witness.empty()) a4.witness = "g.W and W differ";
    }
  }
  report.checks.push_back(a4);

  AssumptionCheck a5{"(A5)", true, ""};
  for (ArrowIdx a = 0; a < q.num_arrows() && a5.pass; ++a) {
    if (!action.vertex_fixed(q.src(a)) || !action.vertex_fixed(q.tgt(a))) continue;
    if (!action.arrow_fixed(a)) {
      a5.pass = false;
      a5.witness = "arrow '" + q.arrow(a).name +
                   "' joins fixed vertices but is not mapped to a multiple of itself";
    }
  }
  report.checks.push_back(a5);

  AssumptionCheck a6{"(A6)", true, ""};
  for (ArrowIdx a = 0; a < q.num_arrows() && a6.pass; ++a) {
    if (action.vertex_fixed(q.src(a)) && action.vertex_fixed(q.tgt(a))) continue;
    if (action.b(a) % n != 0) {
      a6.pass = false;
      a6.witness = "arrow '" + q.arrow(a).name + "' has a non-fixed end but carries scalar zeta^" +
                   std::to_string(action.b(a));
    }
  }
  report.checks.push_back(a6);

  AssumptionCheck a7{"(A7)", true, ""};
  for (const auto& [cycle, coeff] : w.terms()) {
    if (cycle_type_of(q, action, cycle.word())) continue;
    size_t fixed = 0;
    for (ArrowIdx a : cycle.word())
      if (action.vertex_fixed(q.src(a))) ++fixed;
    a7.pass = false;
    a7.witness = "cycle '" + cycle_str(q, cycle) + "' visits " + std::to_string(fixed) +
                 " fixed vertices out of " + std::to_string(cycle.length());
    break;
  }
  report.checks.push_back(a7);

  return report;
}

bool check_type3_coefficients(const Quiver& q, const Potential& w, const CyclicAction& action,
                              const Representatives& reps) {
  const int n = action.order();
  for (const auto& [cycle, coeff] : w.terms()) {
    auto type = cycle_type_of(q, action, cycle.word());
    if (!type || *type != CycleType::III) continue;
    CycleClass cls = classify_cycle(q, w, action, reps, cycle);
    auto [image, exp] = action.path_image(Path::of(cycle.word()), 1);
    (void)exp;
    Cycle gc = canonical_cycle(q, image);
    const Cyclotomic* a_gc = w.coeff(gc);
    if (!a_gc) return false;
    if (!(*a_gc == coeff * Cyclotomic::zeta_pow(n, cls.q))) return false;
  }
  return true;
}

}  // namespace skewqp
