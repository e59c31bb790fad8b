#include "semisym/census.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "semisym/algorithms.hpp"
#include "semisym/coset_graph.hpp"
#include "semisym/forge.hpp"
#include "semisym/small_group.hpp"

namespace semisym {

std::string to_string(Tier t) { return t == Tier::Core ? "core" : "extended"; }

std::optional<Tier> parse_tier(const std::string& s) {
  if (s == "core") return Tier::Core;
  if (s == "extended") return Tier::Extended;
  return std::nullopt;
}

namespace {

// Centre of a transitive group: each central element is fixed by where it sends point 0.
std::int64_t transitive_center_order(const GeneratedGroup& g) {
  const std::size_t n = g.degree();
  std::int64_t count = 0;
  for (Point j = 0; j < n; ++j) {
    std::vector<std::int64_t> c(n, -1);
    c[0] = j;
    std::vector<Point> queue{0};
    bool ok = true;
    for (std::size_t h = 0; h < queue.size() && ok; ++h) {
      Point x = queue[h];
      for (const auto& s : g.generators()) {
        Point y = s[x];
        auto want = static_cast<std::int64_t>(s[static_cast<Point>(c[x])]);
        if (c[y] < 0) {
          c[y] = want;
          queue.push_back(y);
        } else if (c[y] != want) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<char> hit(n, 0);
    for (auto v : c) {
      if (v < 0 || hit[static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = 1;
    }
    if (ok) ++count;
  }
  return count;
}

GeneratedGroup cyclic(std::size_t n) { return make_standard(StandardKind::Cyclic, n); }
GeneratedGroup sym(std::size_t n) { return make_standard(StandardKind::Symmetric, n); }
GeneratedGroup alt(std::size_t n) { return make_standard(StandardKind::Alternating, n); }

GeneratedGroup named(GeneratedGroup g, const std::string& name) {
  g.set_name(name);
  return g;
}

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

// Sym(3) wr Sym(3) subgroups on 9 points: blocks {0,1,2}, {3,4,5}, {6,7,8}.
GeneratedGroup three_cubed(const std::vector<Permutation>& top) {
  std::vector<Permutation> gens{cyc(9, {{0, 1, 2}}), cyc(9, {{0, 1}, {3, 4}}), cyc(9, {{3, 4}, {6, 7}}),
                                cyc(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})};
  gens.insert(gens.end(), top.begin(), top.end());
  return GeneratedGroup(9, gens);
}

GeneratedGroup three_cubed_alt4() { return named(three_cubed({}), "3^3.Alt(4)"); }
GeneratedGroup three_cubed_sym4_plain() {
  return named(three_cubed({cyc(9, {{0, 3}, {1, 4}, {2, 5}})}), "3^3.Sym(4)");
}
GeneratedGroup three_cubed_sym4_twisted() {
  return named(three_cubed({cyc(9, {{0, 3}, {1, 4}, {2, 5}, {6, 7}})}), "3^3.Sym(4)");
}

GeneratedGroup s294_group() {
  return named(affine_group(7, 2, {{2, 0, 0, 1}, {1, 0, 0, 2}, {0, 1, 1, 0}}), "7^2:(3wr2)");
}

NamedOrder no(std::string name, std::uint64_t order) { return {std::move(name), order}; }

CatalogCase make_case(std::string id, int division, std::string completion, std::function<GeneratedGroup()> build,
                      AmalgamType type, RegularPolicy policy = RegularPolicy::Maximal) {
  CatalogCase c;
  c.id = std::move(id);
  c.division = division;
  c.completion = std::move(completion);
  c.build = std::move(build);
  c.type = type;
  c.policy = policy;
  return c;
}

std::vector<CatalogCase> make_catalog() {
  std::vector<CatalogCase> v;
  auto add = [&](CatalogCase c) { v.push_back(std::move(c)); };
  const auto Sym = Symmetry::Symmetric;
  const auto Semi = Symmetry::Semisymmetric;
  auto z3sq = [] { return named(direct_product(cyclic(3), cyclic(3)), "3^2"); };
  auto z3sq2 = [] { return named(affine_group(3, 2, {{-1, 0, 0, -1}}), "3^2.2"); };
  auto z3wr2 = [] { return named(wreath_product(cyclic(3), cyclic(2)), "3wr2"); };
  auto s3s3 = [] { return named(direct_product(sym(3), sym(3)), "Sym(3)xSym(3)"); };
  auto s3wr3 = [] { return named(wreath_product(sym(3), cyclic(3)), "Sym(3)wr3"); };
  auto s3wrs3 = [] { return named(wreath_product(sym(3), sym(3)), "Sym(3)wrSym(3)"); };

  {
    CatalogCase c = make_case("div1-G1-3^2", 1, "3^2", z3sq, AmalgamType::G1);
    c.quotient_name = "3";
    c.quotient_reference = [] { return cyclic(3); };
    c.quotient_vertices = 2;
    c.graph_vertices = 6;
    c.note = "R is one of several diagonal subgroups of order 3";
    add(c);
  }
  {
    CatalogCase c = make_case("div1-G1^1-3^2.2", 1, "3^2.2", z3sq2, AmalgamType::G1_1);
    c.quotient_name = "Sym(3)";
    c.quotient_reference = [] { return sym(3); };
    c.quotient_vertices = 2;
    c.graph_vertices = 6;
    add(c);
  }
  auto div2 = [&](std::string id, std::string comp, std::function<GeneratedGroup()> b, AmalgamType t,
                  RegularPolicy pol, std::string qname, std::function<GeneratedGroup()> qref) {
    CatalogCase c = make_case(std::move(id), 2, std::move(comp), std::move(b), t, pol);
    c.quotient_name = std::move(qname);
    c.quotient_reference = std::move(qref);
    c.quotient_vertices = 6;
    c.aut_order = 72;
    c.aut_name = "Sym(3)wr2";
    c.symmetry = Sym;
    return c;
  };
  add(div2("div2-G1-3^2", "3^2", z3sq, AmalgamType::G1, RegularPolicy::Trivial, "3^2", z3sq));
  add(div2("div2-G1^1-3^2.2", "3^2.2", z3sq2, AmalgamType::G1_1, RegularPolicy::Trivial, "3^2.2", z3sq2));
  add(div2("div2-G1^2-3wr2", "3wr2", z3wr2, AmalgamType::G1_2, RegularPolicy::Maximal, "3wr2", z3wr2));
  add(div2("div2-G1^3-Sym(3)xSym(3)", "Sym(3)xSym(3)", s3s3, AmalgamType::G1_3, RegularPolicy::Maximal,
           "Sym(3)xSym(3)", s3s3));
  {
    CatalogCase c = div2("div2-G1^2-S294", "7^2:(3wr2)", s294_group, AmalgamType::G1_2, RegularPolicy::Maximal,
                         "3wr2", z3wr2);
    c.graph_vertices = 294;
    c.graph_symmetry = Semi;
    add(c);
  }
  auto div3 = [&](std::string id, std::string comp, std::function<GeneratedGroup()> b, AmalgamType t) {
    CatalogCase c = make_case(std::move(id), 3, comp, b, t);
    c.quotient_name = comp;
    c.quotient_reference = b;
    c.quotient_vertices = 54;
    c.aut_order = 1296;
    c.aut_name = "Sym(3)wrSym(3)";
    c.symmetry = Semi;
    c.primitive_parts = 1;
    return c;
  };
  add(div3("div3-G2-3^3.Alt(4)", "3^3.Alt(4)", three_cubed_alt4, AmalgamType::G2));
  add(div3("div3-G2^1-3^3.Sym(4)", "3^3.Sym(4)", three_cubed_sym4_twisted, AmalgamType::G2_1));
  add(div3("div3-G2^2-3^3.Sym(4)", "3^3.Sym(4)", three_cubed_sym4_plain, AmalgamType::G2_2));
  add(div3("div3-G2^3-Sym(3)wr3", "Sym(3)wr3", s3wr3, AmalgamType::G2_3));
  add(div3("div3-G2^4-Sym(3)wrSym(3)", "Sym(3)wrSym(3)", s3wrs3, AmalgamType::G2_4));

  auto simple = [&](std::string id, int div, std::string comp, std::function<GeneratedGroup()> b, AmalgamType t,
                    std::size_t vertices, std::optional<std::uint64_t> aut, std::string aut_name, Symmetry s,
                    std::optional<int> prim) {
    CatalogCase c = make_case(std::move(id), div, comp, b, t);
    c.quotient_name = comp;
    c.quotient_reference = b;
    c.quotient_vertices = vertices;
    c.aut_order = aut;
    c.aut_name = std::move(aut_name);
    c.symmetry = s;
    c.primitive_parts = prim;
    return c;
  };
  add(simple("div4-G1^3-PSL2(11)", 4, "PSL2(11)", [] { return psl2(11); }, AmalgamType::G1_3, 110, 1320,
             "PGL2(11)", Sym, std::nullopt));
  add(simple("div4-G1^3-PSL2(13)", 4, "PSL2(13)", [] { return psl2(13); }, AmalgamType::G1_3, 182, 2184,
             "PGL2(13)", Sym, std::nullopt));
  add(simple("div5-G2-PSL2(11)", 5, "PSL2(11)", [] { return psl2(11); }, AmalgamType::G2, 110, 1320, "PGL2(11)",
             Semi, 2));
  add(simple("div5-G2^1-PGL2(11)", 5, "PGL2(11)", [] { return pgl2(11); }, AmalgamType::G2_1, 110, 1320,
             "PGL2(11)", Semi, 2));
  add(simple("div5-G2-PSL2(13)", 5, "PSL2(13)", [] { return psl2(13); }, AmalgamType::G2, 182, 2184, "PGL2(13)",
             Semi, 2));
  add(simple("div5-G2^1-PGL2(13)", 5, "PGL2(13)", [] { return pgl2(13); }, AmalgamType::G2_1, 182, 2184,
             "PGL2(13)", Semi, 2));
  add(simple("div6-G2^2-Alt(7)", 6, "Alt(7)", [] { return alt(7); }, AmalgamType::G2_2, 210, 5040, "Sym(7)", Semi,
             0));
  add(simple("div6-G2^4-Sym(7)", 6, "Sym(7)", [] { return sym(7); }, AmalgamType::G2_4, 210, 5040, "Sym(7)", Semi,
             0));
  {
    CatalogCase c = simple("div7-G2^1-PSL2(23)", 7, "PSL2(23)", [] { return psl2(23); }, AmalgamType::G2_1, 506,
                           std::nullopt, "", Semi, 2);
    c.aut_candidates = {no("PSL2(23)", 6072), no("PGL2(23)", 12144)};
    c.note = "the Aut column lists PSL2(p) while the biprimitivity argument names PGL2(23); the computed group is reported";
    add(c);
  }
  add(simple("div8-G2^1-PSL2(25)", 8, "PSL2(25)", [] { return psl2(25); }, AmalgamType::G2_1, 650, 15600,
             "PSigmaL2(25)", Semi, 1));
  add(simple("div8-G2^4-PSigmaL2(25)", 8, "PSigmaL2(25)", [] { return psigmal2(25); }, AmalgamType::G2_4, 650,
             15600, "PSigmaL2(25)", Semi, 1));
  add(simple("div9-G3-PSL2(7)", 9, "PSL2(7)", [] { return psl2(7); }, AmalgamType::G3, 14, 336, "PGL2(7)", Sym,
             std::nullopt));
  add(simple("div9-G3-PSL2(23)", 9, "PSL2(23)", [] { return psl2(23); }, AmalgamType::G3, 506, 12144, "PGL2(23)",
             Sym, std::nullopt));
  add(simple("div10-G3-PSL2(9)", 10, "PSL2(9)", [] { return psl2(9); }, AmalgamType::G3, 30, 1440, "PGammaL2(9)",
             Sym, std::nullopt));
  add(simple("div10-G3^1-PSigmaL2(9)", 10, "PSigmaL2(9)", [] { return psigmal2(9); }, AmalgamType::G3_1, 30, 1440,
             "PGammaL2(9)", Sym, std::nullopt));
  {
    CatalogCase c = simple("div11-G4-PSL3(5)", 11, "PSL3(5)", [] { return psl3(5); }, AmalgamType::G4, 7750, 744000,
                           "PSL3(5).2", Semi, 1);
    c.tier = Tier::Extended;
    add(c);
    CatalogCase d = simple("div11-G4^1-PSL3(5).2", 11, "PSL3(5).2", [] { return psl3_graph_extension(5); },
                           AmalgamType::G4_1, 7750, 744000, "PSL3(5).2", Semi, 1);
    d.tier = Tier::Extended;
    add(d);
  }
  add(simple("div12-G4-PSU3(3)", 12, "PSU3(3)", [] { return psu3(3); }, AmalgamType::G4, 126, 12096, "G2(2)",
             Semi, 2));
  add(simple("div12-G4^1-PSU3(3).2", 12, "PSU3(3).2", [] { return literature_group("G2(2)"); }, AmalgamType::G4_1,
             126, 12096, "G2(2)", Semi, 2));
  add(simple("div13-G5-M12", 13, "M12", [] { return literature_group("M12"); }, AmalgamType::G5, 990, 190080,
             "Aut(M12)", Semi, 2));
  add(simple("div13-G5^1-Aut(M12)", 13, "Aut(M12)", [] { return literature_group("Aut(M12)"); },
             AmalgamType::G5_1, 990, 190080, "Aut(M12)", Semi, 2));
  {
    CatalogCase c = make_case("div14-G5-G2(3)", 14, "G2(3)", {}, AmalgamType::G5);
    c.tier = Tier::Extended;
    c.skip_reason = "G2(3) is not constructed";
    add(c);
    CatalogCase d = make_case("div14-G5^1-Aut(G2(3))", 14, "Aut(G2(3))", {}, AmalgamType::G5_1);
    d.tier = Tier::Extended;
    d.skip_reason = "Aut(G2(3)) is not constructed";
    add(d);
  }
  return v;
}

std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const GroupFingerprint& f) {
  std::ostringstream os;
  os << "order " << f.order << ", derived";
  for (auto d : f.derived_series) os << " " << d;
  os << ", centre " << f.center_order;
  return os.str();
}

// Faithful action of G/R on the cosets of R.
GeneratedGroup quotient_group(const GeneratedGroup& g, const GeneratedGroup& r) {
  if (r.is_trivial()) return g;
  auto cg = CosetGraph::build(g, r, r, r);
  return cg.vertex_action();
}

int count_primitive(std::pair<bool, bool> p) { return (p.first ? 1 : 0) + (p.second ? 1 : 0); }

}  // namespace

GroupFingerprint fingerprint(const GeneratedGroup& g) {
  GroupFingerprint f;
  f.order = g.order();
  GeneratedGroup cur = g;
  f.derived_series.push_back(cur.order());
  for (;;) {
    GeneratedGroup d = derived_subgroup(cur);
    if (d.order() == cur.order()) break;
    f.derived_series.push_back(d.order());
    cur = std::move(d);
    if (cur.is_trivial()) break;
  }
  if (g.order() <= kEnumerationBound) {
    f.center_order = static_cast<std::int64_t>(center(g).order());
  } else if (is_transitive(g)) {
    f.center_order = transitive_center_order(g);
  }
  return f;
}

const std::vector<CatalogCase>& catalog() {
  static const std::vector<CatalogCase> c = make_catalog();
  return c;
}

CaseReport run_case(const CatalogCase& c) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseReport r;
  r.id = c.id;
  r.division = c.division;
  r.completion = c.completion;
  r.type = to_string(c.type);
  r.note = c.note;
  if (!c.skip_reason.empty()) {
    r.skipped = true;
    r.skip_reason = c.skip_reason;
    return r;
  }
  auto cmp = [&](std::string field, std::string expected, std::string computed) {
    bool ok = expected == computed;
    r.comparisons.push_back({std::move(field), std::move(expected), std::move(computed), ok});
  };
  try {
    const GeneratedGroup g = c.build();
    r.completion_order = g.order();
    auto located = locate_amalgam(g, c.type);
    cmp("amalgam located", "true", str(located.has_value()));
    if (!located) throw std::runtime_error("no amalgam of type " + to_string(c.type));
    const Amalgam& a = *located;
    const auto verify = verify_goldschmidt(a);
    cmp("goldschmidt conditions", "true", str(verify.passed));
    const auto cls = classify_type(a);
    cmp("type", to_string(c.type), to_string(cls.type));
    const bool sylow = is_sylow_completion(a);
    cmp("sylow completion", "true", str(sylow));

    const auto cg = CosetGraph::build(a);
    r.graph_vertices = cg.vertex_count();
    cmp("edge count", str(g.order() / a.g12.order()), str(static_cast<std::uint64_t>(cg.edges().size())));
    cmp("odd parts iff sylow", str(sylow), str(cg.left_size() % 2 == 1 && cg.right_size() % 2 == 1));
    cmp("action kernel", "1", str(action_kernel(cg).order()));

    GeneratedGroup reg = GeneratedGroup::trivial(g.degree());
    if (c.policy == RegularPolicy::Maximal) {
      auto m = max_regular_normal(cg);
      reg = m.subgroup;
      r.r_unique = m.unique;
    }
    r.r_order = reg.order();
    cmp("R semiregular", "true", str(is_semiregular(cg, reg)));
    const auto qg = reg.is_trivial() ? cg : quotient(cg, reg);
    r.quotient_vertices = qg.vertex_count();
    r.quotient_degenerate = qg.degenerate();
    cmp("quotient vertices", str(static_cast<std::uint64_t>(c.quotient_vertices)), str(static_cast<std::uint64_t>(r.quotient_vertices)));
    if (c.quotient_reference) {
      const auto got = fingerprint(quotient_group(g, reg));
      const auto want = fingerprint(c.quotient_reference());
      cmp("G/R fingerprint (" + c.quotient_name + ")", str(want), str(got));
    }
    if (c.graph_vertices) cmp("graph vertices", str(static_cast<std::uint64_t>(*c.graph_vertices)), str(static_cast<std::uint64_t>(r.graph_vertices)));
    if (c.graph_symmetry) {
      const Graph full = Graph::from_coset_graph(cg);
      r.graph_symmetry = classify_symmetry(full).verdict;
      cmp("graph symmetry", to_string(*c.graph_symmetry), to_string(*r.graph_symmetry));
    }
    if (qg.degenerate()) {
      cmp("quotient degenerate", str(c.quotient_vertices == 2), "true");
    } else {
      const Graph q = Graph::from_coset_graph(qg);
      const auto aut = automorphism_group(q).group;
      r.aut_order = aut.order();
      bool contains = std::all_of(qg.action_images().begin(), qg.action_images().end(),
                                  [&](const Permutation& x) { return aut.contains(x); });
      cmp("Aut contains the completion action", "true", str(contains));
      if (c.aut_order) {
        cmp("|Aut|", str(*c.aut_order), str(aut.order()));
        r.aut_name = aut.order() == *c.aut_order ? c.aut_name : "";
      }
      for (const auto& cand : c.aut_candidates) {
        if (cand.order == aut.order()) r.aut_name = cand.name;
      }
      const auto sym = classify_symmetry(q, aut);
      r.symmetry = sym.verdict;
      if (c.symmetry) cmp("symmetry", to_string(*c.symmetry), to_string(sym.verdict));
      if (sym.verdict == Symmetry::Symmetric) {
        cmp("vertex stabilizer allowed", "true", str(tutte_stabilizer_check(q, aut).passed));
      }
      if (sym.verdict == Symmetry::Semisymmetric) {
        // The two Aut-orbits are the parts.
        const auto orb = orbits(q.vertex_count(), aut.generators());
        bool parts = orb.size() == 2;
        for (const auto& o : orb) {
          const bool left = o.front() < qg.left_size();
          for (auto x : o) parts = parts && ((x < qg.left_size()) == left);
        }
        cmp("Aut orbits are the parts", "true", str(parts));
      }
      if (sym.verdict == Symmetry::Semisymmetric || c.primitive_parts) {
        r.primitive_parts = count_primitive(is_biprimitive(q, aut));
        if (c.primitive_parts) cmp("primitive parts", str(static_cast<std::uint64_t>(*c.primitive_parts)), str(static_cast<std::uint64_t>(*r.primitive_parts)));
      }
    }
  } catch (const BoundExceeded& e) {
    r.skipped = true;
    r.skip_reason = std::string("budget exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r.comparisons.push_back({"pipeline", "completes", e.what(), false});
  }
  r.passed = !r.skipped && std::all_of(r.comparisons.begin(), r.comparisons.end(), [](const auto& x) { return x.ok; });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

CensusReport run_catalog(Tier tier, const std::string& filter, const std::function<void(const CaseReport&)>& progress) {
  CensusReport rep;
  rep.tier = tier;
  for (const auto& c : catalog()) {
    if (tier == Tier::Core && c.tier != Tier::Core) continue;
    if (!filter.empty() && c.id.find(filter) == std::string::npos) continue;
    rep.cases.push_back(run_case(c));
    const auto& cr = rep.cases.back();
    if (cr.skipped) {
      ++rep.skipped;
    } else if (cr.passed) {
      ++rep.passed;
    } else {
      ++rep.failed;
    }
    if (progress) progress(cr);
  }

  // Cross-checks need the whole catalog.
  if (!filter.empty()) return rep;

  // Biprimitive semisymmetric graphs and their automorphism groups.
  {
    const std::set<std::string> stated{"PGL2(11)", "PGL2(13)", "PSL2(23)", "G2(2)", "Aut(M12)"};
    std::set<std::string> found;
    for (const auto& c : rep.cases) {
      if (c.symmetry == Symmetry::Semisymmetric && c.primitive_parts == 2) {
        found.insert(c.aut_name.empty() ? "order " + str(c.aut_order.value_or(0)) : c.aut_name);
      }
    }
    CrossCheck x{"biprimitive semisymmetric Aut groups", false, ""};
    std::ostringstream os;
    os << "found:";
    for (const auto& s : found) os << " " << s;
    std::vector<std::string> missing, extra;
    std::set_difference(stated.begin(), stated.end(), found.begin(), found.end(), std::back_inserter(missing));
    std::set_difference(found.begin(), found.end(), stated.begin(), stated.end(), std::back_inserter(extra));
    if (!missing.empty()) {
      os << "; stated but not found:";
      for (const auto& s : missing) os << " " << s;
    }
    if (!extra.empty()) {
      os << "; found but not stated:";
      for (const auto& s : extra) os << " " << s;
    }
    x.passed = missing.empty() && extra.empty();
    x.detail = os.str();
    rep.cross_checks.push_back(x);
  }
  // Semisymmetric graphs up to 768 vertices against the census orders named in the text.
  {
    const std::set<std::size_t> named_orders{54, 294, 486, 702};
    std::set<std::size_t> seen;
    for (const auto& c : rep.cases) {
      if (c.symmetry == Symmetry::Semisymmetric && c.quotient_vertices <= 768) seen.insert(c.quotient_vertices);
      if (c.graph_symmetry == Symmetry::Semisymmetric && c.graph_vertices <= 768) seen.insert(c.graph_vertices);
    }
    std::ostringstream os;
    os << "semisymmetric orders:";
    for (auto n : seen) os << " " << n;
    std::vector<std::size_t> outside;
    for (auto n : seen) {
      if (!named_orders.count(n)) outside.push_back(n);
    }
    if (!outside.empty()) {
      os << "; not among 54 294 486 702:";
      for (auto n : outside) os << " " << n;
    }
    rep.cross_checks.push_back({"semisymmetric orders within {54, 294, 486, 702}", outside.empty(), os.str()});
  }
  return rep;
}

nlohmann::json report_to_json(const CensusReport& r, bool with_timings) {
  nlohmann::json j;
  j["schema"] = "semisym-census/1";
  j["tier"] = to_string(r.tier);
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["skipped"] = r.skipped;
  auto cases = nlohmann::json::array();
  for (const auto& c : r.cases) {
    nlohmann::json k;
    k["id"] = c.id;
    k["division"] = c.division;
    k["completion"] = c.completion;
    k["type"] = c.type;
    k["status"] = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
    if (c.skipped) {
      k["reason"] = c.skip_reason;
    } else {
      k["completion_order"] = c.completion_order;
      k["graph_vertices"] = c.graph_vertices;
      k["r_order"] = c.r_order;
      k["r_unique"] = c.r_unique;
      k["quotient_vertices"] = c.quotient_vertices;
      k["quotient_degenerate"] = c.quotient_degenerate;
      if (c.graph_symmetry) k["graph_symmetry"] = to_string(*c.graph_symmetry);
      if (c.aut_order) k["aut_order"] = *c.aut_order;
      if (!c.aut_name.empty()) k["aut_name"] = c.aut_name;
      if (c.symmetry) k["symmetry"] = to_string(*c.symmetry);
      if (c.primitive_parts) k["primitive_parts"] = *c.primitive_parts;
      auto comps = nlohmann::json::array();
      for (const auto& x : c.comparisons) {
        comps.push_back({{"field", x.field}, {"expected", x.expected}, {"computed", x.computed}, {"ok", x.ok}});
      }
      k["comparisons"] = std::move(comps);
    }
    if (!c.note.empty()) k["note"] = c.note;
    if (with_timings) k["seconds"] = c.seconds;
    cases.push_back(std::move(k));
  }
  j["cases"] = std::move(cases);
  auto xs = nlohmann::json::array();
  for (const auto& x : r.cross_checks) xs.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
  j["cross_checks"] = std::move(xs);
  return j;
}

bool FactReport::all_passed() const {
  return !facts.empty() && std::all_of(facts.begin(), facts.end(), [](const auto& f) { return f.passed; });
}

FactReport check_g51_facts() {
  FactReport rep;
  auto add = [&](std::string id, std::string claim, std::string computed, bool ok) {
    rep.facts.push_back({std::move(id), std::move(claim), std::move(computed), ok});
  };
  const GeneratedGroup aut = literature_group("Aut(M12)");
  auto located = locate_amalgam(aut, AmalgamType::G5_1);
  if (!located) throw std::runtime_error("G5^1 amalgam not located in Aut(M12)");
  const Amalgam& a = *located;
  const Amalgam sub = subamalgam(a);

  SmallGroup t1(a.g1);
  SmallGroup t2(a.g2);
  using Set = ElementSet;
  const Set g1 = t1.whole();
  const Set g12 = t1.from_group(a.g12);
  const Set g12s = t1.from_group(sub.g12);
  const Set q1 = t1.o_p(g1, 2);
  const Set up1 = t1.o_upper_p(g1, 2);
  const Set q2_in2 = t2.o_p(t2.whole(), 2);
  const Set z1 = t1.omega1(t1.center(q1));
  const Set z2_in2 = t2.omega1(t2.center(q2_in2));
  // Move subgroups between the two tables through their generators.
  auto to1 = [&](const Set& s) { return t1.from_group(t2.to_group(s)); };
  auto to2 = [&](const Set& s) { return t2.from_group(t1.to_group(s)); };
  const Set v2_in2 = t2.normal_closure(to2(z1), t2.whole());
  const Set v2 = to1(v2_in2);
  const Set u1 = t1.normal_closure(v2, g1);
  const Set w1 = t1.commutator(u1, up1);

  // (1)
  add("1a", "Z1 is elementary abelian of order 4", str(static_cast<std::uint64_t>(z1.count())),
      z1.count() == 4 && t1.is_elementary_abelian(z1));
  add("1b", "|U1| = 32", str(static_cast<std::uint64_t>(u1.count())), u1.count() == 32);
  add("1c", "W1 = 4 x 4", str(t1.is_homocyclic_4x4(w1)), t1.is_homocyclic_4x4(w1));
  {
    std::size_t homocyclic = 0;
    for (const auto& s : t1.subgroups(q1, 16)) {
      if (s.count() == 16 && t1.is_homocyclic_4x4(s)) ++homocyclic;
    }
    add("1d", "W1 is characteristic in Q1 (the only 4 x 4 subgroup of Q1)",
        str(static_cast<std::uint64_t>(homocyclic)) + " subgroups 4 x 4", homocyclic == 1);
  }
  // (2)
  add("2a", "|Z2| = 2", str(static_cast<std::uint64_t>(z2_in2.count())), z2_in2.count() == 2);
  add("2b", "V2 is elementary abelian of order 8", str(static_cast<std::uint64_t>(v2.count())),
      v2.count() == 8 && t1.is_elementary_abelian(v2));
  // (3)
  Set f1;
  {
    std::size_t normal8 = 0;
    for (const auto& s : t1.subgroups(u1, 8)) {
      if (s.count() == 8 && t1.is_normal(s, g1)) {
        ++normal8;
        f1 = s;
      }
    }
    add("3a", "U1 has a unique subgroup of order 8 normal in G1", str(static_cast<std::uint64_t>(normal8)),
        normal8 == 1);
  }
  const Set f = t1.centralizer(f1, g1);
  add("3b", "F = C_G1(F1) is elementary abelian of order 16", str(static_cast<std::uint64_t>(f.count())),
      f.count() == 16 && t1.is_elementary_abelian(f));
  {
    std::size_t ea16 = 0;
    bool same = false;
    for (const auto& s : t1.subgroups(g12, 16)) {
      if (s.count() == 16 && t1.is_elementary_abelian(s)) {
        ++ea16;
        same = same || s == f;
      }
    }
    add("3c", "F is the unique elementary abelian subgroup of order 16 in G12",
        str(static_cast<std::uint64_t>(ea16)), ea16 == 1 && same);
  }
  // (4), (5)
  {
    bool ok4 = true, ok5 = true;
    for (auto x : g12.members()) {
      if (g12s.test(x)) continue;
      if (f.test(x)) {
        Set cx = t1.centralizer(t1.closure({x}), g12);
        ok4 = ok4 && cx == f;
      }
      if (t1.element_order(x) == 2) ok5 = ok5 && f.test(x);
    }
    add("4", "C_G12(x) = F for x in F outside G12*", str(ok4), ok4);
    add("5", "involutions of G12 outside G12* lie in F", str(ok5), ok5);
  }
  // (6), (7), (8)
  const Set fg = t1.commutator(f, g12);
  add("6", "[F, G12] is normal in G1 of order 8", str(static_cast<std::uint64_t>(fg.count())),
      fg.count() == 8 && t1.is_normal(fg, g1));
  {
    bool ok = true;
    for (auto y : fg.members()) ok = ok && !t1.is_abelian(t1.centralizer(t1.closure({y}), g12));
    add("7", "C_G12(y) is non-abelian for y in [F, G12]", str(ok), ok);
  }
  {
    const Set c3 = t1.commutator(t1.commutator(fg, g12), g12);
    const Set z2 = to1(z2_in2);
    add("8", "[F, G12, G12, G12] = Z2", str(static_cast<std::uint64_t>(c3.count())), c3 == z2 && c3.count() == 2);
  }
  // (9) and the orbit lengths of G12 used with it.
  auto orbit_lengths = [&](const Set& acting) {
    std::vector<std::uint64_t> lens;
    for (const auto& o : t1.conjugation_orbits(f, acting)) lens.push_back(o.size());
    std::sort(lens.rbegin(), lens.rend());
    return lens;
  };
  auto lens_str = [](const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  {
    const auto l1 = orbit_lengths(g1);
    add("9a", "orbits of G1 on F have lengths 8 4 3 1", lens_str(l1), l1 == std::vector<std::uint64_t>{8, 4, 3, 1});
    const auto l12 = orbit_lengths(g12);
    add("9b", "orbits of G12 on F have lengths 8 4 2 1 1", lens_str(l12),
        l12 == std::vector<std::uint64_t>{8, 4, 2, 1, 1});
  }
  // (10) fusion of involutions generated by conjugation in G1 and in G2.
  {
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> id;
    std::vector<Permutation> invs;
    auto collect = [&](const GeneratedGroup& h) {
      h.for_each_element([&](const Permutation& x) {
        if (x.order() == 2 && id.emplace(x, static_cast<std::uint32_t>(invs.size())).second) invs.push_back(x);
        return true;
      });
    };
    collect(a.g1);
    collect(a.g2);
    std::vector<std::uint32_t> parent(invs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::uint32_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto* h : {&a.g1, &a.g2}) {
      for (std::uint32_t i = 0; i < invs.size(); ++i) {
        if (!h->contains(invs[i])) continue;
        for (const auto& s : h->generators()) parent[find(i)] = find(id.at(conjugate(invs[i], s)));
      }
    }
    std::set<std::uint32_t> classes, inner, hit;
    for (std::uint32_t i = 0; i < invs.size(); ++i) {
      classes.insert(find(i));
      if (sub.g1.contains(invs[i]) || sub.g2.contains(invs[i])) inner.insert(find(i));
    }
    for (auto x : fg.members()) {
      if (t1.element_order(x) == 2) hit.insert(find(id.at(t1.element(x))));
    }
    // Read as a statement about the involutions of the subamalgam: the outer
    // involutions of Aut(M12) form a further class that misses it.
    add("10", "the subamalgam's involutions fall into at most two classes, each meeting [F, G12]",
        str(static_cast<std::uint64_t>(inner.size())) + " classes meet the subamalgam, " +
            str(static_cast<std::uint64_t>(hit.size())) + " meet [F, G12], " +
            str(static_cast<std::uint64_t>(classes.size())) + " in all",
        inner.size() <= 2 && hit == inner);
  }
  // Structure of the G5 subamalgam.
  {
    const auto cls = classify_type(sub);
    add("sub", "the subamalgam has type G5 with |G12*| = 64", to_string(cls.type) + ", " + str(sub.g12.order()),
        cls.type == AmalgamType::G5 && !cls.swapped && sub.g12.order() == 64);
    SmallGroup s1(sub.g1);
    const Set h12 = s1.from_group(sub.g12);
    add("L1", "|Z(G12*)| = 2", str(static_cast<std::uint64_t>(s1.center(h12).count())), s1.center(h12).count() == 2);
    const Set qa = s1.o_p(s1.whole(), 2);
    const Set lhs = s1.omega1(s1.center(qa));
    const Set rhs = s1.omega1(s1.derived(h12));
    add("L2", "Omega1(Z(O2(G1*))) = Omega1([G12*, G12*])", str(static_cast<std::uint64_t>(lhs.count())) + " vs " +
        str(static_cast<std::uint64_t>(rhs.count())), lhs == rhs);
    SmallGroup s2(sub.g2);
    const Set qb = s1.from_group(s2.to_group(s2.o_p(s2.whole(), 2)));
    std::size_t extraspecial = 0;
    bool same = false;
    for (const auto& s : s1.subgroups(h12, 32)) {
      if (s.count() == 32 && s1.is_extraspecial(s)) {
        ++extraspecial;
        same = same || s == qb;
      }
    }
    add("L3", "O2(G2*) is the unique extraspecial subgroup of order 32 in G12*",
        str(static_cast<std::uint64_t>(extraspecial)), extraspecial == 1 && same);
  }
  return rep;
}

nlohmann::json facts_to_json(const FactReport& r) {
  auto arr = nlohmann::json::array();
  for (const auto& f : r.facts) {
    arr.push_back({{"id", f.id}, {"claim", f.claim}, {"computed", f.computed}, {"passed", f.passed}});
  }
  return {{"facts", arr}, {"passed", r.all_passed()}};
}

}  // namespace semisym
