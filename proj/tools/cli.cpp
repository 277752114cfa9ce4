#include "cli.hpp"

#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewqp/canvas.hpp"
#include "skewqp/cuts.hpp"
#include "skewqp/gen.hpp"
#include "skewqp/io.hpp"
#include "skewqp/sga.hpp"

namespace skewqp {

namespace {

using nlohmann::json;

// Splits a comma-separated list, ignoring commas inside parentheses so that
// skew labels like "t2(a,1)" survive.
std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct QPInputs {
  LoadedQP qp;
  CyclicAction action;
  Representatives reps;
};

QPInputs load_inputs(const std::string& qp_path, const std::string& action_path,
                     const std::string& reps_list, int zeta_order_flag) {
  LoadedQP qp = load_qp_file(qp_path);
  CyclicAction action = load_action_file(qp.quiver, action_path);
  if (zeta_order_flag > 0 && zeta_order_flag != action.order())
    throw SchemaError("--zeta-order " + std::to_string(zeta_order_flag) +
                      " does not match the action order " + std::to_string(action.order()));
  if (qp.potential.zeta_order() != action.order())
    throw SchemaError("QP zeta_order " + std::to_string(qp.potential.zeta_order()) +
                      " does not match the action order " + std::to_string(action.order()));
  Representatives reps = choose_representatives(qp.quiver, action, split_list(reps_list));
  return QPInputs{std::move(qp), std::move(action), std::move(reps)};
}

Cut cut_from_list(const Quiver& q, const std::string& list) {
  Cut out;
  for (const std::string& name : split_list(list)) {
    auto a = q.find_arrow(name);
    if (!a) throw SchemaError("--cut: unknown arrow '" + name + "'");
    out.insert(*a);
  }
  return out;
}

void emit(std::ostream& out, bool as_json, const json& j, const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

json report_to_json(const AssumptionReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return json{{"checks", std::move(checks)}, {"all_pass", report.all_pass()}};
}

int cmd_validate(const QPInputs& in, bool as_json, std::ostream& out) {
  AssumptionReport report = validate_action(in.qp.quiver, in.qp.potential, in.action);
  emit(out, as_json, report_to_json(report), report.str());
  return report.all_pass() ? 0 : 1;
}

int cmd_skew(const QPInputs& in, const std::string& out_path, const std::string& prov_path,
             bool as_json, std::ostream& out) {
  SkewQP skew = build_skew_qp(in.qp.quiver, in.qp.potential, in.action, in.reps);
  std::string payload = qp_to_json(skew.quiver, skew.potential);
  if (!out_path.empty())
    write_file(out_path, payload);
  else if (!as_json)
    out << payload;
  if (!prov_path.empty()) write_file(prov_path, skew_provenance_json(skew));
  if (as_json) {
    json j{{"vertices", skew.quiver.num_vertices()},
           {"arrows", skew.quiver.num_arrows()},
           {"potential_cycles", skew.potential.size()}};
    out << j.dump(2) << "\n";
  } else {
    out << "skew QP: " << skew.quiver.num_vertices() << " vertices, "
        << skew.quiver.num_arrows() << " arrows, " << skew.potential.size()
        << " potential cycles\n";
  }
  return 0;
}

int cmd_roundtrip(const QPInputs& in, bool as_json, std::ostream& out) {
  RoundTrip rt = roundtrip(in.qp.quiver, in.qp.potential, in.action, in.reps);
  json j{{"quiver_isomorphism", rt.quiver_isomorphism},
         {"potential_match", rt.potential_match}};
  std::ostringstream text;
  text << "phi is a quiver isomorphism: " << (rt.quiver_isomorphism ? "true" : "false") << "\n";
  text << "phi((W_G)_dual) == W: " << (rt.potential_match ? "true" : "false") << "\n";
  emit(out, as_json, j, text.str());
  return rt.quiver_isomorphism && rt.potential_match ? 0 : 1;
}

int cmd_verify(const QPInputs& in, bool as_json, std::ostream& out) {
  SkewQP skew = build_skew_qp(in.qp.quiver, in.qp.potential, in.action, in.reps);
  GeneratorReport report = verify_generator_identities(skew);
  if (as_json) {
    json rows = json::array();
    for (const auto& row : report.rows) {
      json refined = json::array();
      for (const auto& [mu, ok] : row.refined) refined.push_back(json{{"mu", mu}, {"pass", ok}});
      rows.push_back(json{{"arrow", in.qp.quiver.arrow(row.arrow).name},
                          {"type", static_cast<int>(row.type)},
                          {"form", row.form},
                          {"pass", row.pass},
                          {"mismatch", row.mismatch},
                          {"refined", std::move(refined)}});
    }
    out << json{{"rows", std::move(rows)}, {"all_pass", report.all_pass()}}.dump(2) << "\n";
  } else {
    out << report.str(in.qp.quiver);
    out << (report.all_pass() ? "all identities hold\n" : "some identities FAIL\n");
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_canvas(const LoadedQP& qp, bool as_json, std::ostream& out) {
  CWComplex2 complex = build_canvas(qp.quiver, qp.potential);
  Homology h = homology(complex);
  json torsion = json::array();
  for (const Integer& d : h.h1_torsion) torsion.push_back(d.get_str());
  json j{{"cells", json{{"dim0", complex.n0}, {"dim1", complex.n1}, {"dim2", complex.n2}}},
         {"euler", h.euler},
         {"b0", h.b0},
         {"b1", h.b1},
         {"b2", h.b2},
         {"h1_torsion", std::move(torsion)}};
  std::ostringstream text;
  text << "cells: " << complex.n0 << " vertices, " << complex.n1 << " edges, " << complex.n2
       << " faces\n";
  text << "euler characteristic: " << h.euler << "\n";
  text << "betti numbers: b0=" << h.b0 << " b1=" << h.b1 << " b2=" << h.b2 << "\n";
  text << "H1 torsion:";
  if (h.h1_torsion.empty()) text << " none";
  for (const Integer& d : h.h1_torsion) text << " Z/" << d.get_str();
  text << "\n";
  emit(out, as_json, j, text.str());
  return 0;
}

std::string cut_names(const Quiver& q, const Cut& cut) {
  std::string out;
  for (ArrowIdx a : cut) {
    if (!out.empty()) out += ",";
    out += q.arrow(a).name;
  }
  return out;
}

int cmd_cuts_list(const LoadedQP& qp, const std::string& action_path, bool g_invariant,
                  bool check_enough, bool as_json, std::ostream& out) {
  std::optional<CyclicAction> action;
  if (!action_path.empty()) action = load_action_file(qp.quiver, action_path);
  if (g_invariant && !action) throw SchemaError("--g-invariant requires --action");
  std::vector<Cut> cuts =
      enumerate_cuts(qp.quiver, qp.potential, g_invariant, action ? &*action : nullptr);
  std::vector<ArrowIdx> uncovered;
  bool enough = g_invariant
                    ? has_enough_g_invariant_cuts(qp.quiver, qp.potential, *action, &uncovered)
                    : has_enough_cuts(qp.quiver, qp.potential, &uncovered);
  if (as_json) {
    json jcuts = json::array();
    for (const Cut& cut : cuts) {
      json names = json::array();
      for (ArrowIdx a : cut) names.push_back(qp.quiver.arrow(a).name);
      jcuts.push_back(std::move(names));
    }
    json juncovered = json::array();
    for (ArrowIdx a : uncovered) juncovered.push_back(qp.quiver.arrow(a).name);
    out << json{{"cuts", std::move(jcuts)},
                {"enough_cuts", enough},
                {"uncovered", std::move(juncovered)}}
               .dump(2)
        << "\n";
  } else {
    for (const Cut& cut : cuts) out << cut_names(qp.quiver, cut) << "\n";
    out << "count: " << cuts.size() << "\n";
    out << (g_invariant ? "enough G-invariant cuts: " : "enough cuts: ")
        << (enough ? "true" : "false") << "\n";
  }
  return check_enough && !enough ? 1 : 0;
}

int cmd_cuts_induce(const QPInputs& in, const std::string& cut_list, const std::string& out_path,
                    bool as_json, std::ostream& out) {
  Cut cut = cut_from_list(in.qp.quiver, cut_list);
  SkewQP skew = build_skew_qp(in.qp.quiver, in.qp.potential, in.action, in.reps);
  Cut induced;
  try {
    induced = induce_cut(skew, cut);
  } catch (const std::invalid_argument& e) {
    out << "FAIL: " << e.what() << "\n";
    return 1;
  }
  if (!out_path.empty()) write_file(out_path, qp_to_json(skew.quiver, skew.potential));
  if (as_json) {
    json names = json::array();
    for (ArrowIdx a : induced) names.push_back(skew.quiver.arrow(a).name);
    out << json{{"induced_cut", std::move(names)}, {"is_cut", true}}.dump(2) << "\n";
  } else {
    out << cut_names(skew.quiver, induced) << "\n";
    out << "induced cut is a cut of the skew QP: true\n";
  }
  return 0;
}

int cmd_cuts_truncate(const LoadedQP& qp, const std::string& cut_list,
                      const std::string& out_path, bool as_json, std::ostream& out) {
  Cut cut = cut_from_list(qp.quiver, cut_list);
  if (!is_cut(qp.quiver, qp.potential, cut)) {
    out << "FAIL: the given arrow set is not a cut\n";
    return 1;
  }
  TruncatedPresentation tp = truncated_presentation(qp.quiver, qp.potential, cut);
  json j;
  {
    // The truncated quiver in the interchange format plus a relations array.
    json base = json::parse(qp_to_json(tp.quiver, Potential(qp.potential.zeta_order())));
    json relations = json::array();
    for (const auto& [arrow, rel] : tp.relations) {
      json terms = json::array();
      for (const auto& [path, coeff] : rel.terms()) {
        json word = json::array();
        for (ArrowIdx a : path.word) word.push_back(tp.quiver.arrow(a).name);
        json cterms = json::array();
        for (int i = 0; i < coeff.degree(); ++i) {
          const Rational& r = coeff.coeffs()[i];
          if (r == 0) continue;
          cterms.push_back(json::array(
              {i, static_cast<long long>(r.get_num().get_si()),
               static_cast<long long>(r.get_den().get_si())}));
        }
        terms.push_back(json{{"path", std::move(word)}, {"coeff", std::move(cterms)}});
      }
      relations.push_back(json{{"arrow", arrow}, {"terms", std::move(terms)}});
    }
    base["relations"] = std::move(relations);
    j = std::move(base);
  }
  std::string payload = j.dump(2) + "\n";
  if (!out_path.empty())
    write_file(out_path, payload);
  else
    out << payload;
  if (!as_json && !out_path.empty())
    out << "truncated quiver: " << tp.quiver.num_arrows() << " arrows, " << tp.relations.size()
        << " relations\n";
  return 0;
}

int cmd_gen(const ExampleBundle& bundle, const std::string& qp_out, const std::string& action_out,
            const std::string& cuts_out, std::ostream& out) {
  std::string qp_payload = qp_to_json(bundle.quiver, bundle.potential);
  std::string action_payload = action_to_json(bundle.quiver, bundle.action);
  if (!qp_out.empty()) write_file(qp_out, qp_payload);
  if (!action_out.empty()) write_file(action_out, action_payload);
  if (!cuts_out.empty()) {
    json jcuts = json::object();
    for (const auto& [name, arrows] : bundle.cuts) jcuts[name] = arrows;
    json reps = json::array();
    for (const auto& name : bundle.reps_override) reps.push_back(name);
    write_file(cuts_out, json{{"cuts", std::move(jcuts)}, {"reps", std::move(reps)}}.dump(2) + "\n");
  }
  if (qp_out.empty() && action_out.empty()) {
    json combined{{"qp", json::parse(qp_payload)}, {"action", json::parse(action_payload)}};
    out << combined.dump(2) << "\n";
  } else {
    out << "generated " << bundle.name << ": " << bundle.quiver.num_vertices() << " vertices, "
        << bundle.quiver.num_arrows() << " arrows, " << bundle.potential.size()
        << " potential cycles\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"skew group quivers with potential over exact cyclotomic arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string qp_path, action_path, reps_list, cut_list, out_path, prov_path;
  int zeta_order = 0;

  auto* validate = app.add_subcommand("validate", "check the construction assumptions");
  validate->add_option("qp", qp_path)->required();
  validate->add_option("action", action_path)->required();
  validate->add_option("--zeta-order", zeta_order);

  auto* skew = app.add_subcommand("skew", "build the skew QP");
  skew->add_option("qp", qp_path)->required();
  skew->add_option("action", action_path)->required();
  skew->add_option("--reps", reps_list, "representative vertices, comma separated");
  skew->add_option("--zeta-order", zeta_order);
  skew->add_option("-o,--out", out_path, "write the skew QP here");
  skew->add_option("--provenance", prov_path, "write the label provenance sidecar here");

  auto* rtrip = app.add_subcommand("roundtrip", "dual-group round trip back to the input");
  rtrip->add_option("qp", qp_path)->required();
  rtrip->add_option("action", action_path)->required();
  rtrip->add_option("--reps", reps_list);
  rtrip->add_option("--zeta-order", zeta_order);

  auto* verify = app.add_subcommand("verify", "check the generator identities");
  verify->add_option("qp", qp_path)->required();
  verify->add_option("action", action_path)->required();
  verify->add_option("--reps", reps_list);
  verify->add_option("--zeta-order", zeta_order);

  auto* cuts = app.add_subcommand("cuts", "cut enumeration and manipulation");
  cuts->require_subcommand(1);
  bool g_invariant = false, check_enough = false;
  auto* cuts_list_cmd = cuts->add_subcommand("list", "enumerate cuts");
  cuts_list_cmd->add_option("qp", qp_path)->required();
  cuts_list_cmd->add_option("--action", action_path);
  cuts_list_cmd->add_flag("--g-invariant", g_invariant, "restrict to G-invariant cuts");
  cuts_list_cmd->add_flag("--enough", check_enough, "fail unless every arrow lies in a cut");
  auto* cuts_induce_cmd = cuts->add_subcommand("induce", "induce a cut on the skew QP");
  cuts_induce_cmd->add_option("qp", qp_path)->required();
  cuts_induce_cmd->add_option("action", action_path)->required();
  cuts_induce_cmd->add_option("--cut", cut_list)->required();
  cuts_induce_cmd->add_option("--reps", reps_list);
  cuts_induce_cmd->add_option("-o,--out", out_path);
  auto* cuts_trunc_cmd = cuts->add_subcommand("truncate", "truncated Jacobian presentation");
  cuts_trunc_cmd->add_option("qp", qp_path)->required();
  cuts_trunc_cmd->add_option("--cut", cut_list)->required();
  cuts_trunc_cmd->add_option("-o,--out", out_path);

  auto* canvas = app.add_subcommand("canvas", "CW complex, Euler characteristic and homology");
  canvas->add_option("qp", qp_path)->required();

  auto* gen = app.add_subcommand("gen", "generate example families");
  gen->require_subcommand(1);
  int type_a_s = 0;
  std::string q1_path, q2_path, inv1_path, inv2_path, gen_name = "tensor";
  std::string qp_out, action_out, cuts_out;
  auto* gen_type_a_cmd = gen->add_subcommand("typeA", "triangular-grid QP with the rotation");
  gen_type_a_cmd->add_option("--s", type_a_s)->required();
  gen_type_a_cmd->add_option("--qp-out", qp_out);
  gen_type_a_cmd->add_option("--action-out", action_out);
  gen_type_a_cmd->add_option("--cuts-out", cuts_out);
  auto* gen_tensor_cmd = gen->add_subcommand("tensor", "twisted tensor product of two quivers");
  gen_tensor_cmd->add_option("--q1", q1_path)->required();
  gen_tensor_cmd->add_option("--inv1", inv1_path)->required();
  gen_tensor_cmd->add_option("--q2", q2_path)->required();
  gen_tensor_cmd->add_option("--inv2", inv2_path)->required();
  gen_tensor_cmd->add_option("--name", gen_name);
  gen_tensor_cmd->add_option("--qp-out", qp_out);
  gen_tensor_cmd->add_option("--action-out", action_out);
  gen_tensor_cmd->add_option("--cuts-out", cuts_out);

  auto* export_cmd = app.add_subcommand("export", "DOT rendering of a quiver");
  bool want_dot = false;
  export_cmd->add_option("qp", qp_path)->required();
  export_cmd->add_option("--action", action_path);
  export_cmd->add_option("--reps", reps_list);
  export_cmd->add_flag("--dot", want_dot, "emit Graphviz DOT");
  export_cmd->add_option("-o,--out", out_path);

  // Let --json (and friends) appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
  }

  std::vector<const char*> argv;
  argv.push_back("skewqp");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*validate) {
      return cmd_validate(load_inputs(qp_path, action_path, reps_list, zeta_order), as_json, out);
    }
    if (*skew) {
      return cmd_skew(load_inputs(qp_path, action_path, reps_list, zeta_order), out_path,
                      prov_path, as_json, out);
    }
    if (*rtrip) {
      return cmd_roundtrip(load_inputs(qp_path, action_path, reps_list, zeta_order), as_json, out);
    }
    if (*verify) {
      return cmd_verify(load_inputs(qp_path, action_path, reps_list, zeta_order), as_json, out);
    }
    if (*cuts_list_cmd) {
      return cmd_cuts_list(load_qp_file(qp_path), action_path, g_invariant, check_enough, as_json,
                           out);
    }
    if (*cuts_induce_cmd) {
      return cmd_cuts_induce(load_inputs(qp_path, action_path, reps_list, 0), cut_list, out_path,
                             as_json, out);
    }
    if (*cuts_trunc_cmd) {
      return cmd_cuts_truncate(load_qp_file(qp_path), cut_list, out_path, as_json, out);
    }
    if (*canvas) {
      return cmd_canvas(load_qp_file(qp_path), as_json, out);
    }
    if (*gen_type_a_cmd) {
      return cmd_gen(gen_type_a(type_a_s), qp_out, action_out, cuts_out, out);
    }
    if (*gen_tensor_cmd) {
      LoadedQP q1 = load_qp_file(q1_path);
      LoadedQP q2 = load_qp_file(q2_path);
      CyclicAction g1 = load_action_file(q1.quiver, inv1_path);
      CyclicAction g2 = load_action_file(q2.quiver, inv2_path);
      return cmd_gen(gen_tensor(gen_name, q1.quiver, g1, q2.quiver, g2), qp_out, action_out,
                     cuts_out, out);
    }
    if (*export_cmd) {
      LoadedQP qp = load_qp_file(qp_path);
      std::optional<CyclicAction> action;
      std::optional<Representatives> reps;
      if (!action_path.empty()) {
        action = load_action_file(qp.quiver, action_path);
        reps = choose_representatives(qp.quiver, *action, split_list(reps_list));
      }
      (void)want_dot;  // DOT is the only format
      std::string dot = dot_export(qp.quiver, action ? &*action : nullptr, reps ? &*reps : nullptr);
      if (!out_path.empty())
        write_file(out_path, dot);
      else
        out << dot;
      return 0;
    }
  } catch (const AssumptionError& e) {
    out << e.report.str();
    err << "error: the action does not satisfy the construction assumptions\n";
    return 1;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace skewqp
