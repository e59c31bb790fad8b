#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "semisym/census.hpp"
#include "semisym/coset_graph.hpp"
#include "semisym/forge.hpp"
#include "semisym/graph_aut.hpp"

using namespace semisym;

namespace {

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

Graph located_graph(const std::string& id) {
  for (const auto& c : catalog()) {
    if (c.id != id) continue;
    auto a = locate_amalgam(c.build(), c.type);
    REQUIRE(a.has_value());
    return Graph::from_coset_graph(CosetGraph::build(*a));
  }
  FAIL("no catalog case " << id);
  throw 0;
}

// Oracle: count vertex permutations preserving adjacency by trying all of them.
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

Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  Edges e;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph petersen() {
  Edges e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph heawood() {
  Edges e;
  for (std::uint32_t i = 0; i < 14; ++i) {
    e.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
  }
  return Graph(14, e);
}

Graph cube() {
  Edges e;
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t b = 1; b < 8; b <<= 1)
      if ((i ^ b) > i) e.emplace_back(i, i ^ b);
  return Graph(8, e);
}

}  // namespace

TEST_CASE("invalid graphs are rejected") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_json(nlohmann::json::object()), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_json({{"vertices", 3}, {"edges", {{0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(automorphism_group(Graph(0, {})), std::invalid_argument);
  CHECK_THROWS_AS(automorphism_group(Graph::cycle(20), 10), BoundExceeded);
}

TEST_CASE("graph json round trip") {
  const auto g = petersen();
  const auto back = Graph::from_json(g.to_json());
  CHECK(back.vertex_count() == 10);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("small named graphs") {
  CHECK(automorphism_group(Graph::cycle(6)).group.order() == 12);
  const auto k33 = Graph::complete_bipartite(3, 3);
  CHECK(automorphism_group(k33).group.order() == 72);
  CHECK(brute_force_aut(k33) == 72);
  CHECK(automorphism_group(petersen()).group.order() == 120);
  CHECK(automorphism_group(heawood()).group.order() == 336);
  CHECK(automorphism_group(cube()).group.order() == 48);
  CHECK(brute_force_aut(cube()) == 48);
}

TEST_CASE("automorphism group matches brute force on random graphs") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const double density = 0.15 + 0.7 * (trial % 5) / 4.0;
    const auto g = random_graph(rng, n, density);
    CAPTURE(trial);
    CAPTURE(g.to_json().dump());
    const auto aut = automorphism_group(g);
    CHECK(aut.group.order() == brute_force_aut(g));
    for (const auto& x : aut.group.generators()) CHECK(g.is_automorphism(x));
  }
}

TEST_CASE("automorphism group is invariant under relabelling") {
  std::mt19937_64 rng(7);
  const auto base = heawood();
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint32_t> p(14);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin(), p.end(), rng);
    Edges e;
    for (const auto& [u, v] : base.edges()) e.emplace_back(std::min(p[u], p[v]), std::max(p[u], p[v]));
    const Graph g(14, e);
    CHECK(automorphism_group(g).group.order() == 336);
    CHECK(are_isomorphic(g, base));
  }
}

TEST_CASE("isomorphism") {
  CHECK(are_isomorphic(Graph::complete_bipartite(3, 3), Graph::complete_bipartite(3, 3)));
  CHECK_FALSE(are_isomorphic(Graph::cycle(6), Graph::complete_bipartite(3, 3)));
  CHECK_FALSE(are_isomorphic(petersen(), Graph::cycle(10)));
  CHECK_FALSE(are_isomorphic(cube(), Graph::cycle(8)));
  const Graph split(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(are_isomorphic(split, split), std::invalid_argument);
}

TEST_CASE("transitivity") {
  const auto c6 = Graph::cycle(6);
  const auto aut = automorphism_group(c6).group;
  CHECK(is_vertex_transitive(c6, aut));
  CHECK(is_edge_transitive(c6, aut));
  const Graph path(3, {{0, 1}, {1, 2}});
  const auto paut = automorphism_group(path).group;
  CHECK_FALSE(is_vertex_transitive(path, paut));
  CHECK(is_edge_transitive(path, paut));
  CHECK(edge_orbit_count(path, {}) == 2);
}

TEST_CASE("symmetry classification") {
  for (const auto& g : {Graph::complete_bipartite(3, 3), petersen(), heawood(), cube()}) {
    const auto r = classify_symmetry(g);
    CHECK(r.verdict == Symmetry::Symmetric);
    CHECK(r.arc_transitive);
  }
  const auto gray = located_graph("div3-G2^4-Sym(3)wrSym(3)");
  const auto r = classify_symmetry(gray);
  CHECK(r.verdict == Symmetry::Semisymmetric);
  CHECK(r.aut_order == 1296);
  CHECK(r.edge_transitive);
  CHECK_FALSE(r.vertex_transitive);
  CHECK_THROWS_AS(classify_symmetry(Graph::cycle(6)), std::invalid_argument);
  // A cubic graph that is neither: the triangular prism.
  const Graph prism(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(classify_symmetry(prism).verdict == Symmetry::Neither);
  CHECK(to_string(Symmetry::Semisymmetric) == "semisymmetric");
}

TEST_CASE("primitivity of the parts") {
  const auto gray = located_graph("div3-G2^4-Sym(3)wrSym(3)");
  const auto [a, b] = is_biprimitive(gray);
  CHECK(a != b);
  const auto p11 = Graph::from_coset_graph(CosetGraph::build(*locate_amalgam(psl2(11), AmalgamType::G2)));
  const auto s = classify_symmetry(p11);
  CHECK(s.aut_order == 1320);
  CHECK(s.verdict == Symmetry::Semisymmetric);
  CHECK(is_biprimitive(p11) == std::pair{true, true});
  CHECK_THROWS_AS(is_biprimitive(petersen()), std::invalid_argument);
}

TEST_CASE("vertex stabilizers of symmetric cubic graphs") {
  const auto k4 = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto k4r = tutte_stabilizer_check(k4);
  CHECK(k4r.stabilizer_order == 6);
  CHECK(k4r.matched_type == "Sym(3)");
  const auto k33 = tutte_stabilizer_check(Graph::complete_bipartite(3, 3));
  CHECK(k33.stabilizer_order == 12);
  CHECK(k33.matched_type == "Sym(3)x2");
  CHECK(k33.passed);
  CHECK(tutte_stabilizer_check(petersen()).stabilizer_order == 12);
  const auto h = tutte_stabilizer_check(heawood());
  CHECK(h.stabilizer_order == 24);
  CHECK(h.matched_type == "Sym(4)");
  CHECK(h.divides_48);
  CHECK(tutte_stabilizer_check(cube()).stabilizer_order == 6);
  const auto p3 = Graph::from_coset_graph(CosetGraph::build(*locate_amalgam(psl2(11), AmalgamType::G1_3)));
  CHECK(tutte_stabilizer_check(p3).stabilizer_order == 12);
  CHECK_THROWS_AS(tutte_stabilizer_check(located_graph("div3-G2^4-Sym(3)wrSym(3)")), std::invalid_argument);
}

TEST_CASE("unitary completions give a biprimitive semisymmetric graph") {
  for (const auto& id : {"div12-G4-PSU3(3)", "div12-G4^1-PSU3(3).2"}) {
    CAPTURE(id);
    const auto g = located_graph(id);
    CHECK(g.vertex_count() == 126);
    const auto aut = automorphism_group(g);
    CHECK(aut.group.order() == 12096);
    const auto s = classify_symmetry(g, aut.group);
    CHECK(s.verdict == Symmetry::Semisymmetric);
    CHECK(is_biprimitive(g, aut.group) == std::pair{true, true});
  }
}
