#include "skewqp/gen.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace skewqp {

namespace {

using Triple = std::array<int, 3>;

std::string triple_name(const Triple& x) {
  std::ostringstream out;
  out << x[0] << "_" << x[1] << "_" << x[2];
  return out.str();
}

Triple rotate(const Triple& x) { return {x[2], x[0], x[1]}; }

constexpr std::array<Triple, 3> kSteps = {Triple{-1, 1, 0}, Triple{0, -1, 1}, Triple{1, 0, -1}};

Triple add(const Triple& x, const Triple& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }

bool valid(const Triple& x) { return x[0] >= 0 && x[1] >= 0 && x[2] >= 0; }

std::string step_arrow_name(int i, const Triple& base) {
  return "a" + std::to_string(i + 1) + "(" + triple_name(base) + ")";
}

bool is_acyclic(const Quiver& q) {
  std::vector<int> indegree(q.num_vertices(), 0);
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) ++indegree[q.tgt(a)];
  std::vector<VertexIdx> queue;
  for (VertexIdx v = 0; v < q.num_vertices(); ++v)
    if (indegree[v] == 0) queue.push_back(v);
  size_t removed = 0;
  while (!queue.empty()) {
    VertexIdx v = queue.back();
    queue.pop_back();
    ++removed;
    for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
      if (q.src(a) != v) continue;
      if (--indegree[q.tgt(a)] == 0) queue.push_back(q.tgt(a));
    }
  }
  return removed == q.num_vertices();
}

}  // namespace

ExampleBundle gen_type_a(int s) {
  if (s < 1) throw std::invalid_argument("gen_type_a: s must be >= 1");
  std::vector<Triple> points;
  for (int x1 = 0; x1 <= s - 1; ++x1)
    for (int x2 = 0; x2 + x1 <= s - 1; ++x2) points.push_back({x1, x2, s - 1 - x1 - x2});

  std::vector<std::string> vertex_names;
  std::map<Triple, VertexIdx> index_of;
  for (const Triple& x : points) {
    index_of[x] = static_cast<VertexIdx>(vertex_names.size());
    vertex_names.push_back(triple_name(x));
  }

  std::vector<Arrow> arrows;
  std::map<std::pair<int, Triple>, ArrowIdx> arrow_of;  // (direction, base point)
  for (int i = 0; i < 3; ++i) {
    for (const Triple& x : points) {
      Triple y = add(x, kSteps[i]);
      if (!valid(y)) continue;
      arrow_of[{i, x}] = static_cast<ArrowIdx>(arrows.size());
      arrows.push_back(Arrow{step_arrow_name(i, x), index_of.at(x), index_of.at(y)});
    }
  }
  Quiver quiver(vertex_names, arrows);

  Potential w(3);
  for (const Triple& x : points) {
    // One triangle per orientation: the step order 3,2,1 gets +1 and the
    // step order 2,3,1 gets -1.
    if (x[1] >= 1 && x[2] >= 1) {
      Triple x3 = add(x, kSteps[2]);
      Triple x23 = add(x3, kSteps[1]);
      w.add(quiver,
            Path::of({arrow_of.at({0, x23}), arrow_of.at({1, x3}), arrow_of.at({2, x})}),
            Cyclotomic::one(3));
    }
    if (x[1] >= 1) {
      Triple x2 = add(x, kSteps[1]);
      Triple x23 = add(x2, kSteps[2]);
      w.add(quiver,
            Path::of({arrow_of.at({0, x23}), arrow_of.at({2, x2}), arrow_of.at({1, x})}),
            -Cyclotomic::one(3));
    }
  }

  std::vector<VertexIdx> vmap(quiver.num_vertices());
  for (const Triple& x : points) vmap[index_of.at(x)] = index_of.at(rotate(x));
  std::vector<ArrowImage> amap(quiver.num_arrows());
  for (const auto& [key, idx] : arrow_of) {
    auto [i, x] = key;
    amap[idx] = ArrowImage{arrow_of.at({(i + 1) % 3, rotate(x)}), 0};
  }
  CyclicAction action(quiver, 3, std::move(vmap), std::move(amap));

  ExampleBundle bundle{"typeA" + std::to_string(s), std::move(quiver), std::move(w),
                       std::move(action), {},         {},
                       std::nullopt,      std::nullopt, {},
                       {}};
  if (s % 3 == 1) {
    for (int j = 0; j < 3; ++j) {
      std::vector<std::string> cut;
      for (const auto& [key, idx] : arrow_of) {
        const Triple& x = key.second;
        if (((x[2] - x[0]) % 3 + 3) % 3 == j) cut.push_back(step_arrow_name(key.first, x));
      }
      std::sort(cut.begin(), cut.end());
      bundle.cuts.emplace_back("C" + std::to_string(j), std::move(cut));
    }
  }
  return bundle;
}

ExampleBundle gen_tensor(const std::string& name, const Quiver& q1, const CyclicAction& g1,
                         const Quiver& q2, const CyclicAction& g2) {
  const std::array<const Quiver*, 2> qs = {&q1, &q2};
  const std::array<const CyclicAction*, 2> gs = {&g1, &g2};
  for (int i = 0; i < 2; ++i) {
    const Quiver& q = *qs[i];
    const CyclicAction& g = *gs[i];
    std::string which = "factor " + std::to_string(i + 1);
    if (!is_acyclic(q))
      throw std::invalid_argument("gen_tensor: " + which + " has an oriented cycle");
    for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
      if (g.b(a) != 0 && g.order() > 1)
        throw std::invalid_argument("gen_tensor: " + which + " arrow '" + q.arrow(a).name +
                                    "' carries a scalar");
      if (g.vertex_fixed(q.src(a)) && g.vertex_fixed(q.tgt(a)) && !g.arrow_fixed(a))
        throw std::invalid_argument("gen_tensor: " + which + " arrow '" + q.arrow(a).name +
                                    "' joins fixed vertices but is not fixed");
    }
    for (VertexIdx v = 0; v < q.num_vertices(); ++v) {
      if (!g.vertex_fixed(v) && g.vertex_orbit_size(v) != g.order())
        throw std::invalid_argument("gen_tensor: " + which + " vertex '" + q.vertex_name(v) +
                                    "' has orbit of size " +
                                    std::to_string(g.vertex_orbit_size(v)));
    }
  }
  if (g1.order() != 1 && g2.order() != 1 && g1.order() != g2.order())
    throw std::invalid_argument("gen_tensor: group orders " + std::to_string(g1.order()) +
                                " and " + std::to_string(g2.order()) +
                                " are incompatible (must be equal or one trivial)");
  const int n = std::max(g1.order(), g2.order());

  std::vector<std::string> vertex_names;
  std::map<std::pair<VertexIdx, VertexIdx>, VertexIdx> vid;
  for (VertexIdx x = 0; x < q1.num_vertices(); ++x) {
    for (VertexIdx y = 0; y < q2.num_vertices(); ++y) {
      vid[{x, y}] = static_cast<VertexIdx>(vertex_names.size());
      vertex_names.push_back(q1.vertex_name(x) + "|" + q2.vertex_name(y));
    }
  }

  std::vector<Arrow> arrows;
  std::map<std::pair<VertexIdx, ArrowIdx>, ArrowIdx> vert;   // (x, beta)
  std::map<std::pair<ArrowIdx, VertexIdx>, ArrowIdx> horiz;  // (alpha, y)
  std::map<std::pair<ArrowIdx, ArrowIdx>, ArrowIdx> diag;    // (alpha, beta)
  for (VertexIdx x = 0; x < q1.num_vertices(); ++x) {
    for (ArrowIdx b = 0; b < q2.num_arrows(); ++b) {
      vert[{x, b}] = static_cast<ArrowIdx>(arrows.size());
      arrows.push_back(Arrow{"v(" + q1.vertex_name(x) + "|" + q2.arrow(b).name + ")",
                             vid.at({x, q2.src(b)}), vid.at({x, q2.tgt(b)})});
    }
  }
  for (ArrowIdx a = 0; a < q1.num_arrows(); ++a) {
    for (VertexIdx y = 0; y < q2.num_vertices(); ++y) {
      horiz[{a, y}] = static_cast<ArrowIdx>(arrows.size());
      arrows.push_back(Arrow{"h(" + q1.arrow(a).name + "|" + q2.vertex_name(y) + ")",
                             vid.at({q1.src(a), y}), vid.at({q1.tgt(a), y})});
    }
  }
  for (ArrowIdx a = 0; a < q1.num_arrows(); ++a) {
    for (ArrowIdx b = 0; b < q2.num_arrows(); ++b) {
      diag[{a, b}] = static_cast<ArrowIdx>(arrows.size());
      arrows.push_back(Arrow{"d(" + q1.arrow(a).name + "|" + q2.arrow(b).name + ")",
                             vid.at({q1.tgt(a), q2.tgt(b)}), vid.at({q1.src(a), q2.src(b)})});
    }
  }
  Quiver quiver(vertex_names, arrows);

  Potential w(n);
  for (ArrowIdx a = 0; a < q1.num_arrows(); ++a) {
    for (ArrowIdx b = 0; b < q2.num_arrows(); ++b) {
      w.add(quiver,
            Path::of({horiz.at({a, q2.tgt(b)}), vert.at({q1.src(a), b}), diag.at({a, b})}),
            Cyclotomic::one(n));
      w.add(quiver,
            Path::of({vert.at({q1.tgt(a), b}), horiz.at({a, q2.src(b)}), diag.at({a, b})}),
            -Cyclotomic::one(n));
    }
  }

  std::vector<VertexIdx> vmap(quiver.num_vertices());
  for (const auto& [key, idx] : vid)
    vmap[idx] = vid.at({g1.vertex_image(key.first), g2.vertex_image(key.second)});
  std::vector<ArrowImage> amap(quiver.num_arrows());
  for (const auto& [key, idx] : vert)
    amap[idx] = ArrowImage{vert.at({g1.vertex_image(key.first), g2.star(key.second)}), 0};
  for (const auto& [key, idx] : horiz)
    amap[idx] = ArrowImage{horiz.at({g1.star(key.first), g2.vertex_image(key.second)}), 0};
  for (const auto& [key, idx] : diag)
    amap[idx] = ArrowImage{diag.at({g1.star(key.first), g2.star(key.second)}), 0};
  CyclicAction action(quiver, n, std::move(vmap), std::move(amap));

  ExampleBundle bundle{name, std::move(quiver), std::move(w), std::move(action), {}, {},
                       std::nullopt, std::nullopt, {}, {}};
  // The three arrow families are G-invariant cuts.
  std::vector<std::string> vcut, hcut, dcut;
  for (const auto& [key, idx] : vert) vcut.push_back(bundle.quiver.arrow(idx).name);
  for (const auto& [key, idx] : horiz) hcut.push_back(bundle.quiver.arrow(idx).name);
  for (const auto& [key, idx] : diag) dcut.push_back(bundle.quiver.arrow(idx).name);
  std::sort(vcut.begin(), vcut.end());
  std::sort(hcut.begin(), hcut.end());
  std::sort(dcut.begin(), dcut.end());
  bundle.cuts.emplace_back("vertical", std::move(vcut));
  bundle.cuts.emplace_back("horizontal", std::move(hcut));
  bundle.cuts.emplace_back("diagonal", std::move(dcut));
  return bundle;
}

namespace {

Quiver a5_quiver() {
  return Quiver({"2", "1", "0", "1p", "2p"}, {Arrow{"beta", 1, 0},      // 1 -> 2
                                              Arrow{"alpha", 2, 1},     // 0 -> 1
                                              Arrow{"alphap", 2, 3},    // 0 -> 1p
                                              Arrow{"betap", 3, 4}});   // 1p -> 2p
}

CyclicAction a5_involution(const Quiver& q) {
  std::vector<VertexIdx> vmap = {4, 3, 2, 1, 0};
  std::vector<ArrowImage> amap = {{3, 0}, {2, 0}, {1, 0}, {0, 0}};
  return CyclicAction(q, 2, std::move(vmap), std::move(amap));
}

ExampleBundle fixture_type_a4() {
  ExampleBundle bundle = gen_type_a(4);
  bundle.name = "typeA4";
  bundle.reps_override = {"0_0_3", "0_1_2", "1_0_2", "1_1_1"};
  bundle.expected_skew_vertices = 6;
  bundle.expected_skew_arrows = 10;
  const std::string at = "t1(a3(0_0_3))";   // alpha tilde: 1 -> 3
  const std::string bt = "t1(a2(0_1_2))";   // beta tilde: 2 -> 1
  const std::string gt = "t1(a1(1_0_2))";   // gamma tilde: 3 -> 2
  const std::string dt = "t1(a2(0_2_1))";   // delta tilde: 3 -> 2
  bundle.expected_skew_arrow_table = {
      {at, "eta(0_0_3)", "eta(1_0_2)"},
      {bt, "eta(0_1_2)", "eta(0_0_3)"},
      {gt, "eta(1_0_2)", "eta(0_1_2)"},
      {dt, "eta(1_0_2)", "eta(0_1_2)"},
  };
  for (int mu = 0; mu < 3; ++mu) {
    std::string m = std::to_string(mu);
    bundle.expected_skew_arrow_table.push_back(
        {"t2(a3(0_1_2)," + m + ")", "eta(0_1_2)", "eta(1_1_1," + m + ")"});
    bundle.expected_skew_arrow_table.push_back(
        {"t3(a2(1_1_1)," + m + ")", "eta(1_1_1," + m + ")", "eta(1_0_2)"});
  }
  bundle.expected_wg.push_back(ExpectedCycle{{at, bt, gt}, {{0, -1, 1}}});
  for (int mu = 0; mu < 3; ++mu) {
    std::string m = std::to_string(mu);
    std::string lt = "t3(a2(1_1_1)," + m + ")";
    std::string tt = "t2(a3(0_1_2)," + m + ")";
    bundle.expected_wg.push_back(ExpectedCycle{{lt, tt, gt}, {{0, 1, 1}}});
    // -zeta^{-mu}
    bundle.expected_wg.push_back(ExpectedCycle{{lt, tt, dt}, {{(3 - mu) % 3, -1, 1}}});
  }
  return bundle;
}

}  // namespace

ExampleBundle fixture(const std::string& name) {
  if (name == "typeA4") return fixture_type_a4();
  if (name == "typeA7") {
    ExampleBundle bundle = gen_type_a(7);
    bundle.name = "typeA7";
    bundle.expected_skew_vertices = 12;  // 9 free orbits + 3 copies of the center
    bundle.expected_skew_arrows = 25;    // 19 type-1 orbits + 3 + 3
    return bundle;
  }
  if (name == "A5xA3") {
    Quiver q1 = a5_quiver();
    CyclicAction g1 = a5_involution(q1);
    Quiver q2({"0", "1", "2"}, {Arrow{"gamma1", 1, 0}, Arrow{"gamma2", 2, 1}});
    CyclicAction g2 = CyclicAction::trivial(q2);
    ExampleBundle bundle = gen_tensor("A5xA3", q1, g1, q2, g2);
    bundle.expected_skew_vertices = 12;  // 6 orbit reps + 2 copies of (0,j)
    return bundle;
  }
  if (name == "A5xD4") {
    Quiver q1 = a5_quiver();
    CyclicAction g1 = a5_involution(q1);
    Quiver q2({"c", "l1", "l2", "l3"},
              {Arrow{"d1", 0, 1}, Arrow{"d2", 0, 2}, Arrow{"d3", 0, 3}});
    CyclicAction g2 = CyclicAction::trivial(q2);
    ExampleBundle bundle = gen_tensor("A5xD4", q1, g1, q2, g2);
    bundle.expected_skew_vertices = 16;  // 8 orbit reps + 2 copies of the 4 fixed
    return bundle;
  }
  throw std::invalid_argument("fixture: unknown name '" + name + "'");
}

ExampleBundle trivialize(const ExampleBundle& bundle) {
  Potential w(1);
  for (const auto& [cycle, coeff] : bundle.potential.terms()) {
    if (!coeff.is_rational())
      throw std::invalid_argument("trivialize: potential has a non-rational coefficient");
    w.add(cycle, Cyclotomic(1, coeff.rational_value()));
  }
  ExampleBundle out{bundle.name + "_trivial",
                    bundle.quiver,
                    std::move(w),
                    CyclicAction::trivial(bundle.quiver),
                    {},
                    bundle.cuts,
                    std::nullopt,
                    std::nullopt,
                    {},
                    {}};
  return out;
}

}  // namespace skewqp
