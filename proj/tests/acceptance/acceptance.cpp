// Acceptance harness: one PASS/FAIL line per criterion, each with its runtime limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>

#include "semisym/algorithms.hpp"
#include "semisym/amalgam.hpp"
#include "semisym/census.hpp"
#include "semisym/coset_graph.hpp"
#include "semisym/forge.hpp"
#include "semisym/graph_aut.hpp"

using namespace semisym;

namespace {

// Collects failed expectations for one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  template <class A, class B>
  void expect_eq(const A& computed, const B& expected, const std::string& what) {
    std::ostringstream os;
    os << what << ": expected " << expected << ", computed " << computed;
    expect(computed == expected, os.str());
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failures_.size()) + "/" + std::to_string(checks_) + " checks";
    for (const auto& n : notes_) s += "; " + n;
    for (const auto& f : failures_) s += "\n      MISMATCH " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_, notes_;
};

GeneratedGroup sym(std::size_t n) { return make_standard(StandardKind::Symmetric, n); }
GeneratedGroup alt(std::size_t n) { return make_standard(StandardKind::Alternating, n); }

std::ostream& operator<<(std::ostream& os, Symmetry s) { return os << to_string(s); }

Amalgam require_amalgam(const GeneratedGroup& g, AmalgamType t, const std::string& where) {
  auto a = locate_amalgam(g, t);
  if (!a) throw std::runtime_error("no " + to_string(t) + " amalgam in " + where);
  return *a;
}

struct Built {
  CosetGraph cg;
  Graph graph;
  GeneratedGroup aut;
};

Built build_graph(const Amalgam& a) {
  auto cg = CosetGraph::build(a);
  auto graph = Graph::from_coset_graph(cg);
  auto aut = automorphism_group(graph).group;
  return {std::move(cg), std::move(graph), std::move(aut)};
}

// Every graph built by the criteria, for the edge-count property.
std::vector<std::pair<std::string, std::pair<std::size_t, std::uint64_t>>> g_edge_records;

void record_edges(const std::string& label, const Amalgam& a, const CosetGraph& cg) {
  g_edge_records.push_back({label, {cg.edges().size(), a.parent.order() / a.g12.order()}});
}

// First core catalog completion of each type.
std::map<AmalgamType, Amalgam> catalog_samples() {
  std::map<AmalgamType, Amalgam> out;
  for (const auto& c : catalog()) {
    if (c.tier != Tier::Core || !c.skip_reason.empty() || out.count(c.type)) continue;
    out.emplace(c.type, require_amalgam(c.build(), c.type, c.completion));
  }
  return out;
}

const CatalogCase& case_by_id(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw std::runtime_error("no catalog case " + id);
}

Tally ac1() {
  Tally t;
  const auto samples = catalog_samples();
  t.expect_eq(samples.size(), std::size_t{15}, "types located");
  for (const auto& [type, a] : samples) {
    const auto name = to_string(type);
    const auto v = verify_goldschmidt(a);
    t.expect(v.passed, name + " passes verification");
    t.expect_eq(to_string(classify_type(a).type), name, name + " classification");
    t.expect(128 % a.g12.order() == 0, name + " |G12| = " + std::to_string(a.g12.order()) + " divides 128");
    t.expect(v.eta1 <= 2 && v.eta2 <= 2, name + " eta <= 2");
  }
  return t;
}

Tally ac2() {
  Tally t;
  const auto a = require_amalgam(wreath_product(sym(3), sym(3)), AmalgamType::G2_4, "Sym(3)wrSym(3)");
  const auto b = build_graph(a);
  record_edges("Gray", a, b.cg);
  t.expect_eq(b.graph.vertex_count(), std::size_t{54}, "vertices");
  t.expect(b.graph.is_regular(3), "cubic");
  t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, Symmetry::Semisymmetric, "verdict");
  t.expect_eq(b.aut.order(), std::uint64_t{1296}, "|Aut|");
  return t;
}

Tally ac3() {
  Tally t;
  int seen = 0;
  for (const auto& c : catalog()) {
    if (c.division != 2) continue;
    ++seen;
    const auto a = require_amalgam(c.build(), c.type, c.completion);
    auto cg = CosetGraph::build(a);
    record_edges(c.id, a, cg);
    // Reduce by the regular normal subgroup where the case calls for it.
    if (c.policy == RegularPolicy::Maximal) {
      const auto r = max_regular_normal(cg);
      if (!r.subgroup.is_trivial()) cg = quotient(cg, r.subgroup);
    }
    const auto g = Graph::from_coset_graph(cg);
    const auto aut = automorphism_group(g).group;
    t.expect_eq(g.vertex_count(), std::size_t{6}, c.id + " vertices");
    t.expect_eq(aut.order(), std::uint64_t{72}, c.id + " |Aut|");
    t.expect_eq(classify_symmetry(g, aut).verdict, Symmetry::Symmetric, c.id + " verdict");
  }
  t.note(std::to_string(seen) + " completions");
  return t;
}

Tally ac4() {
  Tally t;
  const auto parent = case_by_id("div2-G1^2-S294").build();
  t.expect_eq(parent.order(), std::uint64_t{882}, "|7^2:(3wr2)|");
  const auto a = require_amalgam(parent, AmalgamType::G1_2, "7^2:(3wr2)");
  t.expect(verify_goldschmidt(a).passed, "verification");
  t.expect(is_sylow_completion(a), "Sylow completion");
  const auto b = build_graph(a);
  record_edges("S294", a, b.cg);
  t.expect_eq(b.graph.vertex_count(), std::size_t{294}, "vertices");
  const auto r = max_regular_normal(b.cg);
  t.expect_eq(r.subgroup.order(), std::uint64_t{49}, "|R|");
  t.expect(r.subgroup.same_group(p_core(parent, 7)), "R is the normal 7^2");
  const auto q = quotient(b.cg, r.subgroup);
  t.expect_eq(q.left_size(), std::size_t{3}, "quotient left part");
  t.expect_eq(q.right_size(), std::size_t{3}, "quotient right part");
  t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, Symmetry::Semisymmetric, "verdict");
  t.note("|Aut| " + std::to_string(b.aut.order()));
  return t;
}

Tally ac5() {
  Tally t;
  struct Row {
    std::string label;
    GeneratedGroup group;
    AmalgamType type;
    std::optional<std::size_t> vertices;
    Symmetry verdict;
    std::optional<std::uint64_t> aut;
  };
  const std::vector<Row> rows = {
      {"PSL2(11) G1^3", psl2(11), AmalgamType::G1_3, 110, Symmetry::Symmetric, 1320},
      {"PSL2(11) G2", psl2(11), AmalgamType::G2, 110, Symmetry::Semisymmetric, std::nullopt},
      {"PSL2(13) G1^3", psl2(13), AmalgamType::G1_3, std::nullopt, Symmetry::Symmetric, 2184},
      {"PSL2(13) G2", psl2(13), AmalgamType::G2, std::nullopt, Symmetry::Semisymmetric, std::nullopt},
      {"PSL2(23) G2^1", psl2(23), AmalgamType::G2_1, 506, Symmetry::Semisymmetric, std::nullopt},
      // Expected value is |PGL2(9)|.
      {"Alt(6) G3", alt(6), AmalgamType::G3, 30, Symmetry::Symmetric, 720},
  };
  for (const auto& row : rows) {
    const auto a = require_amalgam(row.group, row.type, row.label);
    const auto b = build_graph(a);
    record_edges(row.label, a, b.cg);
    if (row.vertices) t.expect_eq(b.graph.vertex_count(), *row.vertices, row.label + " vertices");
    t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, row.verdict, row.label + " verdict");
    if (row.aut) t.expect_eq(b.aut.order(), *row.aut, row.label + " |Aut|");
  }
  return t;
}

Tally ac6() {
  Tally t;
  const auto a = require_amalgam(alt(7), AmalgamType::G2_2, "Alt(7)");
  const auto b = build_graph(a);
  record_edges("Alt(7)", a, b.cg);
  t.expect_eq(b.graph.vertex_count(), std::size_t{210}, "vertices");
  t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, Symmetry::Semisymmetric, "verdict");
  t.expect_eq(b.aut.order(), std::uint64_t{5040}, "|Aut|");
  t.expect(b.aut.order() == sym(7).order(), "|Aut| = |Sym(7)|");
  return t;
}

Tally ac7() {
  Tally t;
  const std::vector<std::tuple<std::string, GeneratedGroup, AmalgamType>> rows = {
      {"PSU3(3) G4", psu3(3), AmalgamType::G4},
      {"G2(2) G4^1", literature_group("G2(2)"), AmalgamType::G4_1},
  };
  for (const auto& [label, g, type] : rows) {
    const auto a = require_amalgam(g, type, label);
    const auto b = build_graph(a);
    record_edges(label, a, b.cg);
    t.expect_eq(b.graph.vertex_count(), std::size_t{126}, label + " vertices");
    t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, Symmetry::Semisymmetric, label + " verdict");
    t.expect_eq(b.aut.order(), std::uint64_t{12096}, label + " |Aut|");
    t.expect(is_biprimitive(b.graph, b.aut) == std::pair{true, true}, label + " biprimitive");
  }
  return t;
}

Tally ac8() {
  Tally t;
  const auto a = require_amalgam(literature_group("M12"), AmalgamType::G5, "M12");
  const auto b = build_graph(a);
  record_edges("M12", a, b.cg);
  t.expect_eq(b.graph.vertex_count(), std::size_t{990}, "vertices");
  t.expect_eq(classify_symmetry(b.graph, b.aut).verdict, Symmetry::Semisymmetric, "verdict");
  t.expect_eq(b.aut.order(), std::uint64_t{190080}, "|Aut|");
  const auto a1 = require_amalgam(literature_group("Aut(M12)"), AmalgamType::G5_1, "Aut(M12)");
  t.expect(is_sylow_completion(a1), "Aut(M12) G5^1 Sylow completion");
  t.expect_eq(a1.g12.order(), std::uint64_t{128}, "Aut(M12) |G12|");
  return t;
}

Tally ac9() {
  Tally t;
  const auto facts = check_g51_facts();
  std::size_t numbered = 0, lemma = 0;
  for (const auto& f : facts.facts) {
    t.expect(f.passed, f.id + ": " + f.claim + " (computed " + f.computed + ")");
    if (!f.id.empty() && f.id[0] == 'L') ++lemma;
    else if (!f.id.empty() && std::isdigit(static_cast<unsigned char>(f.id[0]))) ++numbered;
  }
  std::unordered_set<std::string> tops;
  for (const auto& f : facts.facts)
    if (!f.id.empty() && std::isdigit(static_cast<unsigned char>(f.id[0])))
      tops.insert(f.id.substr(0, f.id.find_first_not_of("0123456789")));
  t.expect_eq(tops.size(), std::size_t{10}, "enumerated facts covered");
  t.expect_eq(lemma, std::size_t{3}, "structural claims");
  t.note(std::to_string(numbered) + " fact checks, " + std::to_string(lemma) + " structural claims");
  return t;
}

// Closure by breadth-first multiplication; 0 when it exceeds the bound.
std::uint64_t closure_order(std::size_t n, const std::vector<Permutation>& gens, std::uint64_t bound) {
  std::unordered_set<Permutation, PermutationHash> seen{Permutation(n)};
  std::deque<Permutation> queue{Permutation(n)};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = x * g;
      if (seen.insert(y).second) {
        if (seen.size() > bound) return 0;
        queue.push_back(std::move(y));
      }
    }
  }
  return seen.size();
}

std::uint64_t brute_force_aut(const Graph& g) {
  std::vector<Point> p(g.vertex_count());
  std::iota(p.begin(), p.end(), Point{0});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Tally ac10() {
  Tally t;
  std::mt19937_64 rng(10);

  // Group order against enumeration.
  std::size_t groups = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 7;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + trial % 3; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      // Restricting the moved points keeps many groups small.
      const std::size_t m = 2 + rng() % (n - 1);
      std::shuffle(img.begin(), img.begin() + m, rng);
      gens.push_back(Permutation(img));
    }
    const auto brute = closure_order(n, gens, 10000);
    if (brute == 0) continue;
    ++groups;
    t.expect_eq(GeneratedGroup(n, gens, trial).order(), brute, "order of trial " + std::to_string(trial));
  }

  // Aut against brute force on at most 10 vertices.
  std::size_t graphs = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = trial < 117 ? 2 + trial % 7 : 10 - (trial - 117) % 2;
    std::bernoulli_distribution coin(0.2 + 0.15 * (trial % 5));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph g(n, e);
    ++graphs;
    t.expect_eq(automorphism_group(g).group.order(), brute_force_aut(g), "Aut of graph " + g.to_json().dump());
  }

  // Amalgam properties over one completion per type.
  for (const auto& [type, a] : catalog_samples()) {
    const auto name = to_string(type);
    t.expect_eq(to_string(classify_type(a.swapped()).type), to_string(classify_type(a).type),
                name + " orientation invariance");
    const auto once = subamalgam(a);
    const auto twice = subamalgam(once);
    t.expect(twice.g1.same_group(once.g1) && twice.g2.same_group(once.g2), name + " subamalgam idempotent");
    const auto cg = CosetGraph::build(a);
    record_edges(name, a, cg);
    const bool odd = cg.left_size() % 2 == 1 && cg.right_size() % 2 == 1;
    t.expect_eq(is_sylow_completion(a), odd, name + " Sylow completion iff odd parts");
  }
  for (const auto& [label, counts] : g_edge_records)
    t.expect_eq(counts.first, counts.second, label + " edges = [G:G12]");
  t.note(std::to_string(groups) + " groups, " + std::to_string(graphs) + " graphs, " +
         std::to_string(g_edge_records.size()) + " built graphs");
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit_seconds;
    std::function<Tally()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 60, ac1}, {2, 5, ac2},  {3, 1, ac3},   {4, 30, ac4},   {5, 120, ac5},
      {6, 30, ac6}, {7, 60, ac7}, {8, 300, ac8}, {9, 120, ac9}, {10, 300, ac10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      const auto t = c.run();
      ok = t.ok();
      detail = t.summary();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      ok = false;
      detail += "\n      runtime over limit";
    }
    failed += !ok;
    std::printf("AC%-2d %s  %7.2f s (limit %g s)  %s\n", c.id, ok ? "PASS" : "FAIL", secs, c.limit_seconds,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
