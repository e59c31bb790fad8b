#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "semisym/algorithms.hpp"
#include "semisym/amalgam.hpp"
#include "semisym/forge.hpp"
#include "semisym/small_group.hpp"

using namespace semisym;

namespace {

using Elements = std::set<std::vector<Point>>;

// Oracle: breadth-first closure under right multiplication by the generators.
Elements brute_closure(std::size_t n, const std::vector<Permutation>& gens) {
  Elements seen;
  std::vector<Permutation> queue{Permutation(n)};
  seen.insert(queue[0].image_vector());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& s : gens) {
      Permutation x = queue[i] * s;
      if (seen.insert(x.image_vector()).second) queue.push_back(x);
    }
  }
  return seen;
}

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

// Small random groups: 1 to 3 random generators on 3 to 7 points.
std::vector<Permutation> random_gens(std::mt19937_64& rng, std::size_t& n) {
  n = 3 + rng() % 5;
  std::vector<Permutation> gens;
  const std::size_t k = 1 + rng() % 3;
  for (std::size_t i = 0; i < k; ++i) {
    Permutation p = random_perm(n, rng);
    // Bias towards small subgroups by sometimes taking a power.
    if (rng() % 2) p = p.pow(static_cast<std::int64_t>(1 + rng() % 3));
    gens.push_back(p);
  }
  return gens;
}

Elements as_set(const GeneratedGroup& g) {
  Elements s;
  for (const auto& x : g.elements()) s.insert(x.image_vector());
  return s;
}

GeneratedGroup sym(std::size_t n) { return make_standard(StandardKind::Symmetric, n); }
GeneratedGroup alt(std::size_t n) { return make_standard(StandardKind::Alternating, n); }
Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

}  // namespace

TEST_CASE("permutation arithmetic follows the right action") {
  const Permutation a = cyc(4, {{0, 1}});
  const Permutation b = cyc(4, {{1, 2}});
  // (a*b)[i] = b[a[i]]
  CHECK((a * b)[0] == 2);
  CHECK((a * b)[2] == 1);
  CHECK(conjugate(a, b) == b.inverse() * a * b);
  CHECK(conjugate(a, b) == cyc(4, {{0, 2}}));
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  const Permutation c = cyc(7, {{0, 1, 2}, {3, 4, 5, 6}});
  CHECK(c.order() == 12);
  CHECK(c.pow(12).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(c.smallest_moved_point() == 0);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), std::invalid_argument);
}

TEST_CASE("orders of named groups") {
  CHECK(sym(5).order() == 120);
  CHECK(psl2(11).order() == 660);
  CHECK(psl2(11).degree() == 12);
  const auto m12 = literature_group("M12");
  CHECK(m12.order() == 95040);
  CHECK(m12.order() == 64ULL * 27 * 5 * 11);
}

TEST_CASE("order and membership agree with brute-force closure") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    const GeneratedGroup g(n, gens);
    const Elements oracle = brute_closure(n, gens);
    REQUIRE(oracle.size() <= 10000);
    CHECK(g.order() == oracle.size());
    CHECK(as_set(g) == oracle);
    for (int t = 0; t < 10; ++t) {
      const Permutation x = random_perm(n, rng);
      CHECK(g.contains(x) == static_cast<bool>(oracle.count(x.image_vector())));
    }
  }
}

TEST_CASE("membership examples") {
  const auto s4 = sym(4);
  CHECK(s4.contains(Permutation(4)));
  CHECK_FALSE(GeneratedGroup(5, {cyc(5, {{0, 1, 2, 3}}), cyc(5, {{0, 1}})}).contains(cyc(5, {{0, 1, 2, 3, 4}})));
  const auto p = psl2(11);
  const auto s = sylow_subgroup(p, 2);
  bool found = false;
  for (const auto& x : p.elements()) {
    if (x.order() == 11) {
      CHECK_FALSE(s.contains(x));
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("min_in_coset is the lexicographic minimum of the coset") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    const GeneratedGroup h = GeneratedGroup(n, gens).with_full_base();
    const auto hs = h.elements();
    const Permutation g = random_perm(n, rng);
    Permutation best = hs[0] * g;
    for (const auto& x : hs) best = std::min(best, x * g);
    CHECK(h.min_in_coset(g) == best);
  }
}

TEST_CASE("trivial groups keep a requested base") {
  const auto t = GeneratedGroup::trivial(5).with_full_base();
  CHECK(t.has_full_base());
  const Permutation g = cyc(5, {{0, 4}});
  CHECK(t.min_in_coset(g) == g);
}

TEST_CASE("orbits") {
  CHECK(orbits(GeneratedGroup::trivial(4)).size() == 4);
  auto o = orbits(6, {cyc(6, {{0, 1, 2}})});
  CHECK(o == std::vector<std::vector<Point>>{{0, 1, 2}, {3}, {4}, {5}});
  const auto s = sylow_subgroup(alt(6), 2);
  std::size_t total = 0;
  for (const auto& orb : orbits(s)) {
    total += orb.size();
    CHECK(8 % orb.size() == 0);
  }
  CHECK(total == 6);
}

TEST_CASE("orbits partition the points like union-find") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (const auto& s : gens) {
      for (std::size_t i = 0; i < n; ++i) parent[find(i)] = find(s[i]);
    }
    for (const auto& orb : orbits(n, gens)) {
      for (auto x : orb) CHECK(find(x) == find(orb[0]));
    }
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) roots.insert(find(i));
    CHECK(orbits(n, gens).size() == roots.size());
  }
}

TEST_CASE("Sylow subgroups") {
  const auto s = sylow_subgroup(sym(4), 2);
  CHECK(s.order() == 8);
  CHECK_FALSE(structure_probe(s).abelian);
  CHECK(sylow_subgroup(literature_group("M12"), 2).order() == 64);
  const auto w = wreath_product(sym(3), sym(3));
  CHECK(sylow_subgroup(w, 3).order() == 81);
}

TEST_CASE("Sylow subgroups of random groups have the full p-part") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    const GeneratedGroup g(n, gens);
    for (auto p : prime_divisors(g.order())) {
      const auto s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g.order(), p));
      CHECK(is_power_of(s.order(), p));
      CHECK(s.is_subgroup_of(g));
    }
  }
}

TEST_CASE("p-cores and p-residuals") {
  const auto v = p_core(sym(4), 2);
  CHECK(v.order() == 4);
  CHECK(structure_probe(v).elementary_abelian);
  CHECK(p_core(alt(5), 2).is_trivial());
  CHECK(o_upper_p(sym(3), 2).order() == 3);
  CHECK(o_upper_p(sym(4), 2).same_group(alt(4)));
  // Alt(4) x 2 on 6 points.
  const GeneratedGroup a4x2(6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}, {2, 3}}), cyc(6, {{4, 5}})});
  CHECK(a4x2.order() == 24);
  CHECK(o_upper_p(a4x2, 2).order() == 12);
}

TEST_CASE("normal closure") {
  const auto s4 = sym(4);
  CHECK(normal_closure(s4, s4).same_group(s4));
  CHECK(normal_closure(s4, {cyc(4, {{0, 1}})}).same_group(s4));
  CHECK(normal_closure(alt(5), {cyc(5, {{0, 1, 2}})}).order() == 60);
}

TEST_CASE("normal closure matches the conjugate-closure oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    const GeneratedGroup g(n, gens);
    const auto elems = g.elements();
    const Permutation x = elems[rng() % elems.size()];
    std::vector<Permutation> conj;
    for (const auto& y : elems) conj.push_back(conjugate(x, y));
    const Elements oracle = brute_closure(n, conj);
    CHECK(as_set(normal_closure(g, {x})) == oracle);
  }
}

TEST_CASE("core and intersection") {
  const auto s4 = sym(4);
  const auto v = p_core(s4, 2);
  CHECK(core_in(v, {s4}).same_group(v));
  // Two Sym(4) overgroups of a Sylow 2-subgroup of Alt(6).
  const auto a6 = alt(6);
  const auto s = sylow_subgroup(a6, 2);
  const auto over = find_index3_overgroups(a6, s);
  REQUIRE(over.overgroups.size() == 2);
  const auto d8 = intersect(over.overgroups[0], over.overgroups[1]);
  CHECK(d8.order() == 8);
  CHECK(core_in(d8, {over.overgroups[0], over.overgroups[1]}).is_trivial());
}

TEST_CASE("intersection matches set intersection") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> ga{random_perm(n, rng)}, gb{random_perm(n, rng), random_perm(n, rng).pow(2)};
    const GeneratedGroup a(n, ga), b(n, gb);
    const Elements ea = as_set(a), eb = as_set(b);
    Elements both;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::inserter(both, both.begin()));
    CHECK(as_set(intersect(a, b)) == both);
  }
}

TEST_CASE("centres and derived subgroups") {
  CHECK(center(sym(3)).is_trivial());
  CHECK(center(sylow_subgroup(literature_group("M12"), 2)).order() == 2);
  CHECK(derived_subgroup(sym(4)).same_group(alt(4)));
}

TEST_CASE("centre matches the commuting-element oracle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 0;
    auto gens = random_gens(rng, n);
    const GeneratedGroup g(n, gens);
    std::size_t central = 0;
    for (const auto& x : g.elements()) {
      bool ok = true;
      for (const auto& s : gens) ok = ok && x * s == s * x;
      central += ok;
    }
    CHECK(center(g).order() == central);
  }
}

TEST_CASE("block systems and primitivity") {
  CHECK(is_primitive(sym(4)));
  const auto w = wreath_product(sym(3), sym(3));
  auto systems = block_systems(w);
  REQUIRE(systems.size() == 1);
  CHECK(systems[0].block_count() == 3);
  CHECK(systems[0].blocks[0].size() == 3);
  // 2-transitivity oracle: one orbit on ordered pairs of distinct points.
  const auto p = psl2(11);
  const std::size_t n = p.degree();
  std::vector<Permutation> pair_gens;
  for (const auto& s : p.generators()) {
    std::vector<Point> img(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) img[i * n + j] = static_cast<Point>(s[i] * n + s[j]);
    }
    pair_gens.push_back(Permutation(img));
  }
  CHECK(orbits(n * n, pair_gens).size() == 2);  // the diagonal and the rest
  CHECK(is_primitive(p));
}

TEST_CASE("chief factors and eta") {
  const auto r = eta_count(sym(4));
  CHECK(r.eta == 1);
  CHECK(std::accumulate(r.factor_orders.begin(), r.factor_orders.end(), std::uint64_t{1}, std::multiplies<>()) == 4);
}

TEST_CASE("structure probes") {
  const GeneratedGroup klein(4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  const auto k = structure_probe(klein);
  CHECK(k.elementary_abelian);
  CHECK(k.exponent == 2);
  const auto d = structure_probe(make_standard(StandardKind::Dihedral, 12));
  CHECK(d.order == 24);
  CHECK_FALSE(d.abelian);
  CHECK(d.center_order == 2);
  CHECK(d.exponent == 12);
}

TEST_CASE("multiplication-table groups agree with the chain") {
  const auto s4 = sym(4);
  SmallGroup t(s4);
  CHECK(t.size() == 24);
  CHECK(t.o_p(t.whole(), 2).count() == 4);
  CHECK(t.derived(t.whole()).count() == 12);
  CHECK(t.center(t.whole()).count() == 1);
  CHECK_THROWS_AS(SmallGroup(sym(8)), BoundExceeded);
}
