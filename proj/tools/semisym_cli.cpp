#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "semisym/algorithms.hpp"
#include "semisym/amalgam.hpp"
#include "semisym/census.hpp"
#include "semisym/coset_graph.hpp"
#include "semisym/forge.hpp"
#include "semisym/graph_aut.hpp"

using namespace semisym;
using nlohmann::json;

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

// Input problems map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t g_seed = 0;

GeneratedGroup reseeded(const GeneratedGroup& g) {
  GeneratedGroup r(g.degree(), g.generators(), g_seed);
  r.set_name(g.name());
  return r;
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string dir_of(const std::string& path) {
  auto pos = path.find_last_of('/');
  return pos == std::string::npos ? "." : path.substr(0, pos);
}

GeneratedGroup load_group(const std::string& path) {
  try {
    return reseeded(group_from_json(load_json(path)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Amalgam load_amalgam(const std::string& path) {
  try {
    Amalgam a = amalgam_from_json(load_json(path), dir_of(path));
    return Amalgam::from_members(reseeded(a.parent), reseeded(a.g1), reseeded(a.g2), a.type_label);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_atomic(out, text);
  }
}

void emit(const std::string& out, const json& j) { emit(out, j.dump(2) + "\n"); }

AmalgamType require_type(const std::string& s) {
  auto t = parse_amalgam_type(s);
  if (!t) throw UsageError("unknown amalgam type: " + s);
  return *t;
}

GeneratedGroup forge_group(const std::string& family, std::uint32_t q, std::size_t n, std::size_t m,
                          const std::string& name) {
  auto need_q = [&] {
    if (q == 0) throw UsageError(family + " needs --q");
  };
  auto need_n = [&] {
    if (n == 0) throw UsageError(family + " needs --n");
  };
  if (family == "psl2") return need_q(), psl2(q);
  if (family == "pgl2") return need_q(), pgl2(q);
  if (family == "psigmal2") return need_q(), psigmal2(q);
  if (family == "pgammal2") return need_q(), pgammal2(q);
  if (family == "psl3") return need_q(), psl3(q);
  if (family == "psl3-graph") return need_q(), psl3_graph_extension(q);
  if (family == "psu3") return need_q(), psu3(q);
  if (family == "psu3-field") return need_q(), psu3_field_extension(q);
  if (family == "sym") return need_n(), make_standard(StandardKind::Symmetric, n);
  if (family == "alt") return need_n(), make_standard(StandardKind::Alternating, n);
  if (family == "cyclic") return need_n(), make_standard(StandardKind::Cyclic, n);
  if (family == "dihedral") return need_n(), make_standard(StandardKind::Dihedral, n);
  if (family == "wreath") {
    need_n();
    if (m == 0) throw UsageError("wreath needs --m");
    return wreath_product(make_standard(StandardKind::Symmetric, n), make_standard(StandardKind::Symmetric, m));
  }
  if (family == "literature") {
    if (name.empty()) throw UsageError("literature needs --name");
    return literature_group(name);
  }
  throw UsageError("unknown family: " + family);
}

json evidence_json(const MemberEvidence& e) {
  return {{"order", e.order},
          {"abelian", e.abelian},
          {"center_order", e.center_order},
          {"o2_order", e.o2_order},
          {"o_upper_2_order", e.o_upper_2_order},
          {"o2_commutes_with_o_upper_2", e.o2_commutes_with_o_upper_2},
          {"core_order", e.core_order},
          {"core_homocyclic_4x4", e.core_homocyclic_4x4},
          {"core_extraspecial", e.core_extraspecial},
          {"eta", e.eta}};
}

json perm_list(const std::vector<Permutation>& gens) {
  auto a = json::array();
  for (const auto& p : gens) a.push_back(p.image_vector());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goldschmidt amalgams, coset graphs and semisymmetry checks"};
  app.require_subcommand(1);
  app.add_option("--seed", g_seed, "Seed for every randomized routine")->default_val(0);

  // forge
  std::string family, forge_out, lit_name;
  std::uint32_t q = 0;
  std::size_t n = 0, m = 0;
  auto* forge = app.add_subcommand("forge", "Build a permutation group and write it as a group file");
  forge->add_option("family", family,
                    "psl2 | pgl2 | psigmal2 | pgammal2 | psl3 | psl3-graph | psu3 | psu3-field | sym | alt | "
                    "cyclic | dihedral | wreath | literature")
      ->required();
  forge->add_option("--q", q, "Field size (prime for psl3 and psu3)");
  forge->add_option("--n", n, "Degree or polygon size; base degree for wreath");
  forge->add_option("--m", m, "Top degree for wreath (Sym(n) wr Sym(m))");
  forge->add_option("--name", lit_name, "Literature group name");
  forge->add_option("--out", forge_out, "Output path (stdout if omitted)");

  // amalgam
  std::string am_in, am_group, am_type, am_out;
  auto* amalgam = app.add_subcommand("amalgam", "Locate, verify and classify amalgams");
  amalgam->require_subcommand(1);
  auto* am_locate = amalgam->add_subcommand("locate", "Find an amalgam of a given type in a group");
  am_locate->add_option("--group", am_group, "Group file")->required();
  am_locate->add_option("--type", am_type, "Amalgam type, e.g. G2^1")->required();
  am_locate->add_option("--out", am_out, "Output path");
  auto* am_list = amalgam->add_subcommand("list", "List the types of all amalgams over a Sylow 2-subgroup");
  am_list->add_option("--group", am_group, "Group file")->required();
  auto* am_verify = amalgam->add_subcommand("verify", "Check the Goldschmidt conditions");
  am_verify->add_option("--in", am_in, "Amalgam file")->required();
  auto* am_classify = amalgam->add_subcommand("classify", "Name the amalgam type");
  am_classify->add_option("--in", am_in, "Amalgam file")->required();
  auto* am_sub = amalgam->add_subcommand("subamalgam", "Write the index-2 subamalgam");
  am_sub->add_option("--in", am_in, "Amalgam file")->required();
  am_sub->add_option("--out", am_out, "Output path");
  auto* am_over = amalgam->add_subcommand("overgroups", "Index-3 overgroups of a Sylow 2-subgroup");
  am_over->add_option("--group", am_group, "Group file")->required();

  // graph
  std::string gr_in, gr_quotient = "none", gr_format = "json", gr_out;
  auto* graph = app.add_subcommand("graph", "Coset graph of an amalgam");
  graph->add_option("--amalgam", gr_in, "Amalgam file")->required();
  graph->add_option("--quotient", gr_quotient, "none | maximal")->check(CLI::IsMember({"none", "maximal"}));
  graph->add_option("--format", gr_format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  graph->add_option("--out", gr_out, "Output path");

  // aut
  std::string aut_in, aut_out;
  bool aut_gens = false;
  auto* aut = app.add_subcommand("aut", "Automorphism group and symmetry verdict of a graph");
  aut->add_option("--graph", aut_in, "Graph file")->required();
  aut->add_flag("--generators", aut_gens, "Include automorphism generators");
  aut->add_option("--out", aut_out, "Output path");

  // census
  std::string tier_name = "core", census_json, census_filter;
  bool timings = false;
  auto* census = app.add_subcommand("census", "Reproduce the catalog of completions");
  census->require_subcommand(1);
  auto* c_run = census->add_subcommand("run", "Run the catalog");
  c_run->add_option("--tier", tier_name, "core | extended")->check(CLI::IsMember({"core", "extended"}));
  c_run->add_option("--json", census_json, "Write the JSON report here (stdout if omitted)");
  c_run->add_option("--filter", census_filter, "Run only cases whose id contains this text");
  c_run->add_flag("--timings", timings, "Record per-case seconds in the report");
  auto* c_facts = census->add_subcommand("facts", "Check the G5^1 facts inside Aut(M12)");
  c_facts->add_option("--json", census_json, "Write the JSON report here (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*forge) {
      GeneratedGroup g = forge_group(family, q, n, m, lit_name);
      json meta = {{"family", family}};
      if (q) meta["q"] = q;
      if (n) meta["n"] = n;
      if (m) meta["m"] = m;
      if (!lit_name.empty()) meta["name"] = lit_name;
      emit(forge_out, group_to_json(g, meta));
      return 0;
    }
    if (*amalgam) {
      if (*am_locate) {
        auto a = locate_amalgam(load_group(am_group), require_type(am_type));
        if (!a) {
          std::cerr << "no amalgam of type " << am_type << " found\n";
          return kVerificationFailed;
        }
        emit(am_out, amalgam_to_json(*a));
        return 0;
      }
      if (*am_list) {
        auto arr = json::array();
        for (const auto& a : locate_amalgams(load_group(am_group))) {
          auto c = classify_type(a);
          arr.push_back({{"type", to_string(c.type)}, {"g1_order", a.g1.order()}, {"g2_order", a.g2.order()},
                         {"g12_order", a.g12.order()}});
        }
        emit("", json{{"amalgams", arr}});
        return 0;
      }
      if (*am_verify) {
        const auto r = verify_goldschmidt(load_amalgam(am_in));
        emit("", json{{"passed", r.passed},
                      {"index1", r.index1},
                      {"index2", r.index2},
                      {"g12_divides_128", r.g12_divides_128},
                      {"core_trivial", r.core_trivial},
                      {"eta", {r.eta1, r.eta2}},
                      {"generates_parent", r.generates_parent},
                      {"failures", r.failures}});
        return r.passed ? 0 : kVerificationFailed;
      }
      if (*am_classify) {
        const Amalgam a = load_amalgam(am_in);
        const auto c = classify_type(a);
        json j{{"type", to_string(c.type)},
               {"swapped", c.swapped},
               {"sylow_completion", is_sylow_completion(a)},
               {"g12_order", c.evidence.g12_order},
               {"g1", evidence_json(c.evidence.g1)},
               {"g2", evidence_json(c.evidence.g2)}};
        emit("", j);
        if (a.type_label && *a.type_label != c.type) {
          std::cerr << "file labels the amalgam " << to_string(*a.type_label) << "\n";
          return kVerificationFailed;
        }
        return 0;
      }
      if (*am_sub) {
        emit(am_out, amalgam_to_json(subamalgam(load_amalgam(am_in))));
        return 0;
      }
      if (*am_over) {
        const GeneratedGroup g = load_group(am_group);
        const GeneratedGroup s = sylow_subgroup(g, 2);
        const auto r = find_index3_overgroups(g, s);
        auto arr = json::array();
        for (const auto& h : r.overgroups) arr.push_back({{"order", h.order()}, {"generators", perm_list(h.generators())}});
        emit("", json{{"sylow_order", s.order()}, {"complete", r.complete},
                      {"candidates_examined", r.candidates_examined}, {"overgroups", arr}});
        return 0;
      }
    }
    if (*graph) {
      const Amalgam a = load_amalgam(gr_in);
      CosetGraph cg = CosetGraph::build(a);
      std::cerr << "vertices " << cg.vertex_count() << ", edges " << cg.edges().size() << "\n";
      if (gr_quotient == "maximal") {
        const auto r = max_regular_normal(cg);
        std::cerr << "R order " << r.subgroup.order() << (r.unique ? "" : " (not unique)") << "\n";
        if (!r.subgroup.is_trivial()) cg = quotient(cg, r.subgroup);
      }
      if (gr_format == "dot") {
        emit(gr_out, graph_to_dot(cg, "coset_graph"));
      } else {
        emit(gr_out, graph_to_json(cg));
      }
      return 0;
    }
    if (*aut) {
      Graph g;
      try {
        g = Graph::from_json(load_json(aut_in));
      } catch (const std::invalid_argument& e) {
        throw UsageError(aut_in + ": " + e.what());
      }
      const auto res = automorphism_group(g);
      json j{{"vertices", g.vertex_count()}, {"edges", g.edges().size()}, {"aut_order", res.group.order()}};
      if (g.is_connected() && g.is_regular(3)) {
        const auto s = classify_symmetry(g, res.group);
        j["symmetry"] = to_string(s.verdict);
        j["vertex_transitive"] = s.vertex_transitive;
        j["edge_transitive"] = s.edge_transitive;
        j["arc_transitive"] = s.arc_transitive;
        if (s.verdict == Symmetry::Symmetric) {
          const auto t = tutte_stabilizer_check(g, res.group);
          j["vertex_stabilizer"] = {{"order", t.stabilizer_order}, {"type", t.matched_type}, {"allowed", t.passed}};
        }
        if (s.verdict == Symmetry::Semisymmetric) {
          const auto p = is_biprimitive(g, res.group);
          j["primitive_on_parts"] = {p.first, p.second};
        }
      }
      if (aut_gens) j["generators"] = perm_list(res.group.generators());
      emit(aut_out, j);
      return 0;
    }
    if (*census) {
      if (*c_run) {
        const Tier tier = *parse_tier(tier_name);
        const auto rep = run_catalog(tier, census_filter, [](const CaseReport& c) {
          std::cerr << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.id << "\n";
          for (const auto& x : c.comparisons) {
            if (!x.ok) std::cerr << "  " << x.field << ": expected " << x.expected << ", computed " << x.computed << "\n";
          }
        });
        for (const auto& x : rep.cross_checks) {
          std::cerr << "cross-check " << (x.passed ? "PASS " : "FAIL ") << x.name << ": " << x.detail << "\n";
        }
        std::cerr << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped << " skipped\n";
        emit(census_json, report_to_json(rep, timings));
        return rep.all_passed() ? 0 : kVerificationFailed;
      }
      if (*c_facts) {
        const auto rep = check_g51_facts();
        for (const auto& f : rep.facts) {
          std::cerr << (f.passed ? "PASS " : "FAIL ") << f.id << " " << f.claim << ": " << f.computed << "\n";
        }
        emit(census_json, facts_to_json(rep));
        return rep.all_passed() ? 0 : kVerificationFailed;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerificationFailed;
  }
  return kUsageError;
}
