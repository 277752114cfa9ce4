#include "skewqp/skew.hpp"

#include <algorithm>

namespace skewqp {

namespace {

std::string mu_name(const std::string& stem, const std::string& base, int mu) {
  return stem + "(" + base + "," + std::to_string(mu) + ")";
}

}  // namespace

VertexIdx SkewQP::skew_vertex(VertexIdx base, int mu) const {
  auto it = vertex_lookup.find({base, mu});
  if (it == vertex_lookup.end())
    throw std::invalid_argument("SkewQP: no skew vertex for base '" +
                                base_quiver.vertex_name(base) + "', mu=" + std::to_string(mu));
  return it->second;
}

ArrowIdx SkewQP::skew_arrow(ArrowType type, ArrowIdx base_rep, int mu) const {
  auto it = arrow_lookup.find({static_cast<int>(type), base_rep, mu});
  if (it == arrow_lookup.end())
    throw std::invalid_argument("SkewQP: no skew arrow for base '" +
                                base_quiver.arrow(base_rep).name + "', mu=" + std::to_string(mu));
  return it->second;
}

SkewQP build_skew_qp(const Quiver& q, const Potential& w, const CyclicAction& action,
                     const Representatives& reps, const SkewOptions& opts) {
  AssumptionReport report = validate_action(q, w, action);
  if (!report.all_pass()) throw AssumptionError(std::move(report));

  const int n = action.order();
  SkewQP out{q, w, action, reps, Quiver({"?"}, {}), Potential(n), {}, {}, {}, {}};

  std::vector<std::string> vertex_names;
  std::vector<SkewVertexInfo> vinfo;
  for (VertexIdx v : reps.eps_prime) {
    out.vertex_lookup[{v, -1}] = static_cast<VertexIdx>(vertex_names.size());
    vertex_names.push_back("eta(" + q.vertex_name(v) + ")");
    vinfo.push_back({v, -1});
  }
  for (VertexIdx v : reps.eps_fixed) {
    for (int mu = 0; mu < n; ++mu) {
      out.vertex_lookup[{v, mu}] = static_cast<VertexIdx>(vertex_names.size());
      vertex_names.push_back(mu_name("eta", q.vertex_name(v), mu));
      vinfo.push_back({v, mu});
    }
  }

  std::vector<ArrowIdx> by_name(q.num_arrows());
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) by_name[a] = a;
  std::sort(by_name.begin(), by_name.end(),
            [&](ArrowIdx x, ArrowIdx y) { return q.name_rank(x) < q.name_rank(y); });

  std::vector<Arrow> arrows;
  std::vector<SkewArrowInfo> ainfo;
  auto add_arrow = [&](ArrowType type, ArrowIdx rep, int mu, std::string name, VertexIdx s,
                       VertexIdx t, int tval, int bval) {
    out.arrow_lookup[{static_cast<int>(type), rep, mu}] = static_cast<ArrowIdx>(arrows.size());
    arrows.push_back(Arrow{std::move(name), s, t});
    ainfo.push_back({type, rep, mu, tval, bval});
  };

  for (ArrowIdx a : by_name) {
    ArrowClass cls = classify_arrow(q, action, reps, a);
    const std::string& aname = q.arrow(a).name;
    switch (cls.type) {
      case ArrowType::None:
        break;
      case ArrowType::T1: {
        VertexIdx s = out.vertex_lookup.at({reps.rep_of[q.src(a)], -1});
        VertexIdx t = out.vertex_lookup.at({q.tgt(a), -1});
        add_arrow(ArrowType::T1, a, -1, "t1(" + aname + ")", s, t, cls.t, 0);
        break;
      }
      case ArrowType::T2: {
        for (int mu = 0; mu < n; ++mu) {
          VertexIdx s = out.vertex_lookup.at({q.src(a), -1});
          VertexIdx t = out.vertex_lookup.at({q.tgt(a), mu});
          add_arrow(ArrowType::T2, a, mu, mu_name("t2", aname, mu), s, t, 0, 0);
        }
        break;
      }
      case ArrowType::T3: {
        for (int mu = 0; mu < n; ++mu) {
          VertexIdx s = out.vertex_lookup.at({q.src(a), mu});
          VertexIdx t = out.vertex_lookup.at({q.tgt(a), -1});
          add_arrow(ArrowType::T3, a, mu, mu_name("t3", aname, mu), s, t, 0, 0);
        }
        break;
      }
      case ArrowType::T4: {
        for (int mu = 0; mu < n; ++mu) {
          VertexIdx s = out.vertex_lookup.at({q.src(a), mu});
          VertexIdx t = out.vertex_lookup.at({q.tgt(a), (mu - cls.b % n + n) % n});
          add_arrow(ArrowType::T4, a, mu, mu_name("t4", aname, mu), s, t, 0, cls.b);
        }
        break;
      }
    }
  }

  out.quiver = Quiver(std::move(vertex_names), std::move(arrows));
  out.vertex_info = std::move(vinfo);
  out.arrow_info = std::move(ainfo);

  // Assemble W_G over the cross-section of potential cycle orbits.
  Potential wg(n);
  for (const OrbitClass& oc : classify_potential(q, w, action, reps, opts)) {
    const CycleClass& cls = oc.cls;
    const size_t l = cls.chat.size();
    switch (cls.type) {
      case CycleType::I: {
        std::vector<ArrowIdx> word;
        word.reserve(l);
        for (ArrowIdx rep : cls.reps) word.push_back(out.skew_arrow(ArrowType::T1, rep, -1));
        Rational factor(cls.orbit_size, n);
        factor.canonicalize();
        wg.add(canonical_cycle(out.quiver, word), oc.coeff * factor);
        break;
      }
      case CycleType::II: {
        for (int mu = 0; mu < n; ++mu) {
          std::vector<ArrowIdx> word;
          word.reserve(l);
          word.push_back(out.skew_arrow(ArrowType::T3, cls.reps[0], mu));
          word.push_back(out.skew_arrow(ArrowType::T2, cls.reps[1], mu));
          for (size_t i = 3; i <= l; ++i)
            word.push_back(out.skew_arrow(ArrowType::T1, cls.reps[i - 1], -1));
          wg.add(canonical_cycle(out.quiver, word),
                 oc.coeff * Cyclotomic::zeta_pow(n, -cls.p * mu));
        }
        break;
      }
      case CycleType::III: {
        for (int mu = 0; mu < n; ++mu) {
          std::vector<ArrowIdx> word;
          word.reserve(l);
          word.push_back(out.skew_arrow(ArrowType::T2, cls.reps[0], mu));
          word.push_back(
              out.skew_arrow(ArrowType::T3, cls.reps[1], ((mu - cls.b_suffix[3]) % n + n) % n));
          for (size_t i = 3; i <= l; ++i)
            word.push_back(out.skew_arrow(ArrowType::T4, cls.reps[i - 1],
                                          ((mu - cls.b_suffix[i + 1]) % n + n) % n));
          wg.add(canonical_cycle(out.quiver, word), oc.coeff);
        }
        break;
      }
      case CycleType::IV: {
        for (int mu = 0; mu < n; ++mu) {
          std::vector<ArrowIdx> word;
          word.reserve(l);
          for (size_t i = 1; i <= l; ++i)
            word.push_back(out.skew_arrow(ArrowType::T4, cls.reps[i - 1],
                                          ((mu - cls.b_suffix[i + 1]) % n + n) % n));
          wg.add(canonical_cycle(out.quiver, word), oc.coeff);
        }
        break;
      }
    }
  }
  out.potential = std::move(wg);

  if (out.quiver.num_vertices() != reps.eps_prime.size() + static_cast<size_t>(n) * reps.eps_fixed.size())
    throw std::logic_error("build_skew_qp: vertex count invariant violated");
  return out;
}

CyclicAction dual_action(const SkewQP& skew) {
  const Quiver& qg = skew.quiver;
  const int n = skew.action.order();
  std::vector<VertexIdx> vmap(qg.num_vertices());
  for (VertexIdx v = 0; v < qg.num_vertices(); ++v) {
    const SkewVertexInfo& info = skew.vertex_info[v];
    vmap[v] = (info.mu < 0) ? v : skew.skew_vertex(info.base, (info.mu + 1) % n);
  }
  std::vector<ArrowImage> amap(qg.num_arrows());
  for (ArrowIdx a = 0; a < qg.num_arrows(); ++a) {
    const SkewArrowInfo& info = skew.arrow_info[a];
    if (info.type == ArrowType::T1)
      amap[a] = ArrowImage{a, info.t % n};
    else
      amap[a] = ArrowImage{skew.skew_arrow(info.type, info.base_rep, (info.mu + 1) % n), 0};
  }
  return CyclicAction(qg, n, std::move(vmap), std::move(amap));
}

RoundTrip roundtrip(const Quiver& q, const Potential& w, const CyclicAction& action,
                    const Representatives& reps, const SkewOptions& opts) {
  SkewQP skew = build_skew_qp(q, w, action, reps, opts);
  CyclicAction dual = dual_action(skew);

  // Distinguished representative set for the dual construction: the vertices
  // eta(v,0) represent the shifted orbits, the eta(v) are fixed.  The phi
  // rules below presume exactly this choice; changing it would require
  // re-deriving phi.
  std::vector<std::string> reps_g_names;
  for (VertexIdx v : reps.eps_fixed)
    reps_g_names.push_back(skew.quiver.vertex_name(skew.skew_vertex(v, 0)));
  for (VertexIdx v : reps.eps_prime)
    reps_g_names.push_back(skew.quiver.vertex_name(skew.skew_vertex(v, -1)));
  Representatives reps_g = choose_representatives(skew.quiver, dual, reps_g_names);

  SkewQP skew2 = build_skew_qp(skew.quiver, skew.potential, dual, reps_g, opts);

  const int n = action.order();
  RoundTrip rt{std::move(skew), dual, std::move(skew2), {}, {}, false, Potential(n), false};
  const SkewQP& s1 = rt.skew;
  const SkewQP& s2 = rt.double_skew;

  rt.phi_vertex.assign(s2.quiver.num_vertices(), kNoVertex);
  for (VertexIdx sv = 0; sv < s2.quiver.num_vertices(); ++sv) {
    const SkewVertexInfo& info2 = s2.vertex_info[sv];
    const SkewVertexInfo& info1 = s1.vertex_info[info2.base];
    if (info2.mu < 0) {
      // eta(w) for w = eta(eps,0), eps fixed in Q.
      if (info1.mu != 0) throw std::logic_error("roundtrip: unexpected double-skew vertex basis");
      rt.phi_vertex[sv] = info1.base;
    } else if (info1.mu < 0) {
      // eta(w,nu) for w = eta(eps), eps in eps_prime: phi = g^nu(eps).
      rt.phi_vertex[sv] = action.vertex_image(info1.base, info2.mu);
    } else {
      // Trivial group degeneration: everything fixed at both levels.
      if (n != 1 || info2.mu != 0 || info1.mu != 0)
        throw std::logic_error("roundtrip: unexpected double-skew vertex basis");
      rt.phi_vertex[sv] = info1.base;
    }
  }

  rt.phi_arrow.assign(s2.quiver.num_arrows(), 0);
  for (ArrowIdx sa = 0; sa < s2.quiver.num_arrows(); ++sa) {
    const SkewArrowInfo& info2 = s2.arrow_info[sa];
    const SkewArrowInfo& info1 = s1.arrow_info[info2.base_rep];
    const ArrowIdx alpha = info1.base_rep;
    switch (info2.type) {
      case ArrowType::T1:
        if (info1.type != ArrowType::T4 || info1.mu != info1.b % n)
          throw std::logic_error("roundtrip: type (1) dual arrow has unexpected basis");
        rt.phi_arrow[sa] = alpha;
        break;
      case ArrowType::T2:
        if (info1.type != ArrowType::T3 || info1.mu != 0)
          throw std::logic_error("roundtrip: type (2) dual arrow has unexpected basis");
        rt.phi_arrow[sa] = action.star(alpha, info2.mu);
        break;
      case ArrowType::T3:
        if (info1.type != ArrowType::T2 || info1.mu != 0)
          throw std::logic_error("roundtrip: type (3) dual arrow has unexpected basis");
        rt.phi_arrow[sa] = action.star(alpha, info2.mu);
        break;
      case ArrowType::T4:
        if (info1.type == ArrowType::T1) {
          rt.phi_arrow[sa] = action.star(alpha, info2.mu - info1.t);
        } else if (n == 1 && info1.type == ArrowType::T4) {
          rt.phi_arrow[sa] = alpha;
        } else {
          throw std::logic_error("roundtrip: type (4) dual arrow has unexpected basis");
        }
        break;
      case ArrowType::None:
        throw std::logic_error("roundtrip: unclassified double-skew arrow");
    }
  }

  // phi is a quiver isomorphism: bijective on vertices and arrows and
  // compatible with sources and targets.
  bool iso = s2.quiver.num_vertices() == q.num_vertices() &&
             s2.quiver.num_arrows() == q.num_arrows();
  if (iso) {
    std::vector<int> vhit(q.num_vertices(), 0), ahit(q.num_arrows(), 0);
    for (VertexIdx v : rt.phi_vertex) ++vhit[v];
    for (ArrowIdx a : rt.phi_arrow) ++ahit[a];
    for (int c : vhit) iso = iso && c == 1;
    for (int c : ahit) iso = iso && c == 1;
    for (ArrowIdx sa = 0; sa < s2.quiver.num_arrows() && iso; ++sa) {
      iso = q.src(rt.phi_arrow[sa]) == rt.phi_vertex[s2.quiver.src(sa)] &&
            q.tgt(rt.phi_arrow[sa]) == rt.phi_vertex[s2.quiver.tgt(sa)];
    }
  }
  rt.quiver_isomorphism = iso;

  for (const auto& [cycle, coeff] : s2.potential.terms()) {
    std::vector<ArrowIdx> word;
    word.reserve(cycle.length());
    for (ArrowIdx e : cycle.word()) word.push_back(rt.phi_arrow[e]);
    rt.mapped.add(canonical_cycle(q, word), coeff);
  }
  rt.potential_match = potential_equal(rt.mapped, w);
  return rt;
}

}  // namespace skewqp
