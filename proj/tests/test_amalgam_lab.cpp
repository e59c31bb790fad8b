#include <doctest.h>

#include <map>

#include "semisym/algorithms.hpp"
#include "semisym/amalgam.hpp"
#include "semisym/census.hpp"
#include "semisym/forge.hpp"

using namespace semisym;

namespace {

GeneratedGroup sym(std::size_t n) { return make_standard(StandardKind::Symmetric, n); }
GeneratedGroup alt(std::size_t n) { return make_standard(StandardKind::Alternating, n); }
Permutation cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Permutation::from_cycles(n, c); }

// Extends x by fixed points up to degree n.
Permutation pad(const Permutation& x, std::size_t n) {
  auto v = x.image_vector();
  for (auto i = static_cast<Point>(v.size()); i < n; ++i) v.push_back(i);
  return Permutation(v);
}

// One located amalgam per type, taken from the first catalog completion of that type.
const std::map<AmalgamType, Amalgam>& samples() {
  static const std::map<AmalgamType, Amalgam> m = [] {
    std::map<AmalgamType, Amalgam> out;
    for (const auto& c : catalog()) {
      if (c.tier != Tier::Core || out.count(c.type)) continue;
      auto a = locate_amalgam(c.build(), c.type);
      if (a) out.emplace(c.type, *a);
    }
    return out;
  }();
  return m;
}

std::pair<GeneratedGroup, GeneratedGroup> alt6_overgroups() {
  const auto a6 = alt(6);
  const auto r = find_index3_overgroups(a6, sylow_subgroup(a6, 2));
  REQUIRE(r.overgroups.size() == 2);
  return {r.overgroups[0], r.overgroups[1]};
}

}  // namespace

TEST_CASE("type names round trip") {
  CHECK(all_amalgam_types().size() == 15);
  for (auto t : all_amalgam_types()) {
    CHECK(parse_amalgam_type(to_string(t)) == t);
    CHECK(plain_type(amalgam_class(t)) == *parse_amalgam_type("G" + std::to_string(amalgam_class(t))));
  }
  CHECK_FALSE(parse_amalgam_type("G6").has_value());
}

TEST_CASE("verification of the Sym(4) amalgam in Alt(6)") {
  auto [s1, s2] = alt6_overgroups();
  CHECK(s1.order() == 24);
  CHECK(s2.order() == 24);
  const auto a = Amalgam::from_members(alt(6), s1, s2);
  CHECK(a.g12.order() == 8);
  const auto r = verify_goldschmidt(a);
  CHECK(r.passed);
  CHECK(r.core_trivial);
  CHECK(classify_type(a).type == AmalgamType::G3);
}

TEST_CASE("a shared normal subgroup fails verification") {
  // Sym(4) x Sym(3) on 7 points; both members normalize the Klein group of the Sym(4) factor.
  const auto parent = direct_product(sym(4), sym(3));
  const auto s4 = sym(4);
  const auto d8 = sylow_subgroup(s4, 2);
  std::vector<Permutation> g1_gens, g2_gens;
  for (const auto& x : s4.generators()) g1_gens.push_back(pad(x, 7));
  g1_gens.push_back(cyc(7, {{4, 5}}));
  for (const auto& x : d8.generators()) g2_gens.push_back(pad(x, 7));
  g2_gens.push_back(cyc(7, {{4, 5}}));
  g2_gens.push_back(cyc(7, {{4, 5, 6}}));
  const auto a = Amalgam::from_members(parent, GeneratedGroup(7, g1_gens), GeneratedGroup(7, g2_gens));
  CHECK(a.g12.order() == 16);
  const auto r = verify_goldschmidt(a);
  CHECK_FALSE(r.passed);
  CHECK_FALSE(r.core_trivial);
}

TEST_CASE("the Z3 amalgam in 3^2") {
  const auto z3sq = direct_product(make_standard(StandardKind::Cyclic, 3), make_standard(StandardKind::Cyclic, 3));
  const auto a = Amalgam::from_members(z3sq, GeneratedGroup(6, {cyc(6, {{0, 1, 2}})}),
                                       GeneratedGroup(6, {cyc(6, {{3, 4, 5}})}));
  CHECK(a.g12.is_trivial());
  CHECK(verify_goldschmidt(a).passed);
  CHECK(classify_type(a).type == AmalgamType::G1);
}

TEST_CASE("every type is located in its catalog completion") {
  const auto& s = samples();
  CHECK(s.size() == 15);
  for (const auto& [t, a] : s) {
    CAPTURE(to_string(t));
    const auto r = verify_goldschmidt(a);
    CHECK(r.passed);
    CHECK(128 % a.g12.order() == 0);
    CHECK(r.eta1 <= 2);
    CHECK(r.eta2 <= 2);
    const auto c = classify_type(a);
    CHECK(c.type == t);
    CHECK_FALSE(c.swapped);
  }
}

TEST_CASE("specific classifications") {
  const auto& s = samples();
  const auto g2 = *locate_amalgam(psl2(11), AmalgamType::G2);
  CHECK(g2.g1.order() == 12);  // Alt(4)
  CHECK(g2.g2.order() == 12);  // Sym(3) x 2
  CHECK(g2.g12.order() == 4);
  const auto& g12 = s.at(AmalgamType::G1_2);
  CHECK(g12.g12.order() == 2);
  CHECK(s.at(AmalgamType::G5).parent.order() == 95040);
}

TEST_CASE("member evidence for classes 4 and 5") {
  const auto& s = samples();
  const auto e41 = member_evidence(s.at(AmalgamType::G4_1).g2);
  CHECK(e41.eta == 1);
  const auto e5 = member_evidence(s.at(AmalgamType::G5).g2);
  CHECK(e5.eta == 2);
  const auto o2 = p_core(s.at(AmalgamType::G4_1).g2, 2);
  CHECK(o2.order() == 32);
  const auto probe = structure_probe(o2);
  CHECK(probe.extraspecial);
  CHECK(probe.center_order == 2);
}

TEST_CASE("classification does not depend on member order") {
  for (const auto& [t, a] : samples()) {
    CAPTURE(to_string(t));
    const auto c = classify_type(a);
    const auto d = classify_type(a.swapped());
    CHECK(d.type == c.type);
    // Types whose two members have the same shape have no preferred orientation.
    if (d.swapped == c.swapped) CHECK(member_evidence(a.g1).order == member_evidence(a.g2).order);
  }
}

TEST_CASE("subamalgams") {
  const auto& s = samples();
  const auto sub11 = subamalgam(s.at(AmalgamType::G1_1));
  CHECK(classify_type(sub11).type == AmalgamType::G1);
  CHECK(sub11.g1.order() == 3);
  CHECK(sub11.g2.order() == 3);
  const auto sub51 = subamalgam(s.at(AmalgamType::G5_1));
  CHECK(classify_type(sub51).type == AmalgamType::G5);
  CHECK(sub51.g12.order() == 64);
  const auto& g3 = s.at(AmalgamType::G3);
  const auto sub3 = subamalgam(g3);
  CHECK(sub3.g1.same_group(g3.g1));
  CHECK(sub3.g2.same_group(g3.g2));
}

TEST_CASE("subamalgam is idempotent and drops to the plain type") {
  for (const auto& [t, a] : samples()) {
    CAPTURE(to_string(t));
    const auto once = subamalgam(a);
    const auto twice = subamalgam(once);
    CHECK(twice.g1.same_group(once.g1));
    CHECK(twice.g2.same_group(once.g2));
    CHECK(twice.g12.same_group(once.g12));
    CHECK(classify_type(once).type == plain_type(amalgam_class(t)));
  }
}

TEST_CASE("Sylow completions") {
  auto [s1, s2] = alt6_overgroups();
  CHECK(is_sylow_completion(Amalgam::from_members(alt(6), s1, s2)));
  // Same members inside Sym(6) on the same points.
  CHECK_FALSE(is_sylow_completion(Amalgam::from_members(sym(6), s1, s2)));
  CHECK(is_sylow_completion(samples().at(AmalgamType::G5)));
}

TEST_CASE("index-3 overgroups") {
  const auto s4 = sym(4);
  const auto r = find_index3_overgroups(s4, sylow_subgroup(s4, 2));
  CHECK(r.complete);
  REQUIRE(r.overgroups.size() == 1);
  CHECK(r.overgroups[0].same_group(s4));
  const auto p = psl2(23);
  const auto over = find_index3_overgroups(p, sylow_subgroup(p, 2));
  CHECK(over.complete);
  bool has_s4 = false, has_d24 = false;
  for (const auto& h : over.overgroups) {
    const auto probe = structure_probe(h);
    if (h.order() != 24) continue;
    has_s4 = has_s4 || (probe.center_order == 1 && !probe.order_profile.count(12));
    has_d24 = has_d24 || (probe.center_order == 2 && probe.order_profile.count(12));
  }
  CHECK(has_s4);
  CHECK(has_d24);
  const auto g21 = locate_amalgam(p, AmalgamType::G2_1);
  REQUIRE(g21.has_value());
  CHECK(g21->g1.order() == 24);
  CHECK(g21->g2.order() == 24);
}

TEST_CASE("symmetrizing elements") {
  const auto p9 = psl2(9);
  const auto a = locate_amalgam(p9, AmalgamType::G3);
  REQUIRE(a.has_value());
  const auto found = find_symmetrizing_element(*a, pgl2(9));
  CHECK(found.status == SearchStatus::Found);
  REQUIRE(found.element.has_value());
  CHECK(conjugate_group(a->g1, *found.element).same_group(a->g2));
  const auto& gray = samples().at(AmalgamType::G2_4);
  CHECK(find_symmetrizing_element(gray, gray.parent).status == SearchStatus::Exhausted);
  const auto s1 = alt6_overgroups().first;
  const auto same = Amalgam::from_members(alt(6), s1, s1);
  const auto id = find_symmetrizing_element(same, alt(6));
  CHECK(id.status == SearchStatus::Found);
  CHECK(id.element->is_identity());
}

TEST_CASE("amalgam files round trip") {
  const auto& a = samples().at(AmalgamType::G2);
  const auto j = amalgam_to_json(a);
  const auto b = amalgam_from_json(j);
  CHECK(b.parent.same_group(a.parent));
  CHECK(b.g1.same_group(a.g1));
  CHECK(b.g2.same_group(a.g2));
  CHECK(b.g12.same_group(a.g12));
  CHECK(amalgam_to_json(b).dump() == j.dump());
}
