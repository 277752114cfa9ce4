#include "skewqp/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace skewqp {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("malformed JSON");
  return j;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

Integer integer_from(const json& v, const char* what) {
  try {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_string()) return Integer(v.get<std::string>());
  } catch (const std::exception&) {
  }
  throw SchemaError(std::string(what) + ": expected an integer or integer string");
}

json integer_to(const Integer& v) {
  if (v.fits_slong_p()) return json(v.get_si());
  return json(v.get_str());
}

Cyclotomic coeff_from(const json& terms, int order) {
  if (!terms.is_array()) throw SchemaError("coeff: expected an array of [k, p, q] terms");
  Cyclotomic out = Cyclotomic::zero(order);
  for (const json& term : terms) {
    if (!term.is_array() || term.size() != 3)
      throw SchemaError("coeff term: expected [k, p, q]");
    Integer k = integer_from(term[0], "coeff exponent");
    Integer p = integer_from(term[1], "coeff numerator");
    Integer den = integer_from(term[2], "coeff denominator");
    if (den == 0) throw SchemaError("coeff term: zero denominator");
    Rational r(p, den);
    r.canonicalize();
    long exp = static_cast<long>(mpz_fdiv_ui(k.get_mpz_t(), order));
    out += Cyclotomic::zeta_pow(order, exp) * r;
  }
  return out;
}

json coeff_to(const Cyclotomic& c) {
  json terms = json::array();
  for (int i = 0; i < c.degree(); ++i) {
    const Rational& r = c.coeffs()[i];
    if (r == 0) continue;
    terms.push_back(json::array({i, integer_to(r.get_num()), integer_to(r.get_den())}));
  }
  return terms;
}

}  // namespace

LoadedQP qp_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw SchemaError("QP file: expected a JSON object");

  const json& jorder = field(j, "zeta_order");
  if (!jorder.is_number_integer() || jorder.get<long long>() < 1)
    throw SchemaError("zeta_order: expected a positive integer");
  int order = jorder.get<int>();

  const json& jvertices = field(j, "vertices");
  if (!jvertices.is_array() || jvertices.empty())
    throw SchemaError("vertices: expected a nonempty array");
  std::vector<std::string> vertices;
  for (const json& v : jvertices) {
    if (!v.is_string()) throw SchemaError("vertices: expected strings");
    vertices.push_back(v.get<std::string>());
  }
  std::map<std::string, VertexIdx> vindex;
  for (VertexIdx v = 0; v < vertices.size(); ++v) {
    if (!vindex.emplace(vertices[v], v).second)
      throw SchemaError("vertices: duplicate id '" + vertices[v] + "'");
  }

  const json& jarrows = field(j, "arrows");
  if (!jarrows.is_array()) throw SchemaError("arrows: expected an array");
  std::vector<Arrow> arrows;
  for (const json& a : jarrows) {
    if (!a.is_object()) throw SchemaError("arrows: expected objects");
    std::string id = field(a, "id").get<std::string>();
    std::string src = field(a, "src").get<std::string>();
    std::string tgt = field(a, "tgt").get<std::string>();
    auto si = vindex.find(src), ti = vindex.find(tgt);
    if (si == vindex.end()) throw SchemaError("arrow '" + id + "': unknown src '" + src + "'");
    if (ti == vindex.end()) throw SchemaError("arrow '" + id + "': unknown tgt '" + tgt + "'");
    arrows.push_back(Arrow{id, si->second, ti->second});
  }

  LoadedQP out{Quiver({"?"}, {}), Potential(order)};
  try {
    out.quiver = Quiver(std::move(vertices), std::move(arrows));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (!out.quiver.is_connected())
    throw SchemaError("quiver: underlying graph is not connected");

  if (auto it = j.find("potential"); it != j.end()) {
    if (!it->is_array()) throw SchemaError("potential: expected an array");
    for (const json& entry : *it) {
      const json& jcycle = field(entry, "cycle");
      if (!jcycle.is_array()) throw SchemaError("potential cycle: expected an array of arrow ids");
      Path p;
      for (const json& aname : jcycle) {
        if (!aname.is_string()) throw SchemaError("potential cycle: expected arrow id strings");
        auto idx = out.quiver.find_arrow(aname.get<std::string>());
        if (!idx)
          throw SchemaError("potential cycle: unknown arrow '" + aname.get<std::string>() + "'");
        p.word.push_back(*idx);
      }
      Cyclotomic coeff = coeff_from(field(entry, "coeff"), order);
      try {
        out.potential.add(out.quiver, p, coeff);
      } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("potential cycle: ") + e.what());
      }
    }
  }
  return out;
}

std::string qp_to_json(const Quiver& q, const Potential& w) {
  json j;
  j["zeta_order"] = w.zeta_order();
  json vertices = json::array();
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) vertices.push_back(q.vertex_name(v));
  j["vertices"] = std::move(vertices);
  json arrows = json::array();
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    arrows.push_back(json{{"id", q.arrow(a).name},
                          {"src", q.vertex_name(q.src(a))},
                          {"tgt", q.vertex_name(q.tgt(a))}});
  }
  j["arrows"] = std::move(arrows);
  json potential = json::array();
  for (const auto& [cycle, coeff] : w.terms()) {
    json names = json::array();
    for (ArrowIdx a : cycle.word()) names.push_back(q.arrow(a).name);
    potential.push_back(json{{"cycle", std::move(names)}, {"coeff", coeff_to(coeff)}});
  }
  j["potential"] = std::move(potential);
  return j.dump(2) + "\n";
}

CyclicAction action_from_json(const Quiver& q, const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw SchemaError("action file: expected a JSON object");
  const json& jorder = field(j, "order");
  if (!jorder.is_number_integer() || jorder.get<long long>() < 1)
    throw SchemaError("order: expected a positive integer");
  int order = jorder.get<int>();

  const json& jvmap = field(j, "vertex_map");
  if (!jvmap.is_object()) throw SchemaError("vertex_map: expected an object");
  std::vector<VertexIdx> vmap(q.num_vertices(), kNoVertex);
  for (const auto& [name, image] : jvmap.items()) {
    auto v = q.find_vertex(name);
    if (!v) throw SchemaError("vertex_map: unknown vertex '" + name + "'");
    if (!image.is_string()) throw SchemaError("vertex_map: expected vertex id strings");
    auto w = q.find_vertex(image.get<std::string>());
    if (!w) throw SchemaError("vertex_map: unknown image '" + image.get<std::string>() + "'");
    vmap[*v] = *w;
  }
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) {
    if (vmap[v] == kNoVertex)
      throw SchemaError("vertex_map: no image for vertex '" + q.vertex_name(v) + "'");
  }

  const json& jamap = field(j, "arrow_map");
  if (!jamap.is_object()) throw SchemaError("arrow_map: expected an object");
  std::vector<ArrowImage> amap(q.num_arrows(), ArrowImage{0, 0});
  std::vector<bool> seen(q.num_arrows(), false);
  for (const auto& [name, image] : jamap.items()) {
    auto a = q.find_arrow(name);
    if (!a) throw SchemaError("arrow_map: unknown arrow '" + name + "'");
    if (!image.is_object()) throw SchemaError("arrow_map: expected objects");
    const json& jto = field(image, "arrow");
    if (!jto.is_string()) throw SchemaError("arrow_map: expected arrow id strings");
    auto b = q.find_arrow(jto.get<std::string>());
    if (!b) throw SchemaError("arrow_map: unknown image arrow '" + jto.get<std::string>() + "'");
    int exp = 0;
    if (auto it = image.find("zeta_exp"); it != image.end()) {
      Integer e = integer_from(*it, "zeta_exp");
      exp = static_cast<int>(mpz_fdiv_ui(e.get_mpz_t(), order));
    }
    amap[*a] = ArrowImage{*b, exp};
    seen[*a] = true;
  }
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    if (!seen[a]) throw SchemaError("arrow_map: no image for arrow '" + q.arrow(a).name + "'");
  }
  try {
    return CyclicAction(q, order, std::move(vmap), std::move(amap));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

std::string action_to_json(const Quiver& q, const CyclicAction& action) {
  json j;
  j["order"] = action.order();
  json vmap = json::object();
  for (VertexIdx v = 0; v < q.num_vertices(); ++v)
    vmap[q.vertex_name(v)] = q.vertex_name(action.vertex_image(v));
  j["vertex_map"] = std::move(vmap);
  json amap = json::object();
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    ArrowImage im = action.arrow_image(a);
    amap[q.arrow(a).name] = json{{"arrow", q.arrow(im.arrow).name}, {"zeta_exp", im.zeta_exp}};
  }
  j["arrow_map"] = std::move(amap);
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SchemaError("cannot write '" + path + "'");
  out << content;
}

LoadedQP load_qp_file(const std::string& path) { return qp_from_json(read_file(path)); }

CyclicAction load_action_file(const Quiver& q, const std::string& path) {
  return action_from_json(q, read_file(path));
}

std::string skew_provenance_json(const SkewQP& skew) {
  json j;
  json vertices = json::object();
  for (VertexIdx v = 0; v < skew.quiver.num_vertices(); ++v) {
    const SkewVertexInfo& info = skew.vertex_info[v];
    json entry{{"base", skew.base_quiver.vertex_name(info.base)}};
    if (info.mu >= 0)
      entry["mu"] = info.mu;
    else
      entry["mu"] = nullptr;
    vertices[skew.quiver.vertex_name(v)] = std::move(entry);
  }
  j["vertices"] = std::move(vertices);
  json arrows = json::object();
  for (ArrowIdx a = 0; a < skew.quiver.num_arrows(); ++a) {
    const SkewArrowInfo& info = skew.arrow_info[a];
    json entry{{"base", skew.base_quiver.arrow(info.base_rep).name},
               {"type", static_cast<int>(info.type)}};
    if (info.mu >= 0)
      entry["mu"] = info.mu;
    else
      entry["mu"] = nullptr;
    if (info.type == ArrowType::T1) entry["t"] = info.t;
    if (info.type == ArrowType::T4) entry["b"] = info.b;
    arrows[skew.quiver.arrow(a).name] = std::move(entry);
  }
  j["arrows"] = std::move(arrows);
  json reps = json::object();
  json prime = json::array(), fixed = json::array();
  for (VertexIdx v : skew.reps.eps_prime) prime.push_back(skew.base_quiver.vertex_name(v));
  for (VertexIdx v : skew.reps.eps_fixed) fixed.push_back(skew.base_quiver.vertex_name(v));
  reps["eps_prime"] = std::move(prime);
  reps["eps_fixed"] = std::move(fixed);
  j["representatives"] = std::move(reps);
  return j.dump(2) + "\n";
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string dot_export(const Quiver& q, const CyclicAction* action, const Representatives* reps) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (VertexIdx v = 0; v < q.num_vertices(); ++v) {
    out << "  " << dot_quote(q.vertex_name(v));
    if (action && action->vertex_fixed(v)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (ArrowIdx a = 0; a < q.num_arrows(); ++a) {
    std::string label = q.arrow(a).name;
    if (action && reps) {
      ArrowClass cls = classify_arrow(q, *action, *reps, a);
      if (cls.type != ArrowType::None) {
        label += " : type (" + std::to_string(static_cast<int>(cls.type)) + ")";
        if (cls.type == ArrowType::T1 && cls.t != 0) label += " t=" + std::to_string(cls.t);
        if (cls.type == ArrowType::T4 && cls.b != 0) label += " b=" + std::to_string(cls.b);
      }
    }
    out << "  " << dot_quote(q.vertex_name(q.src(a))) << " -> "
        << dot_quote(q.vertex_name(q.tgt(a))) << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace skewqp
