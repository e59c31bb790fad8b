#include <doctest.h>

#include <set>

#include "semisym/algorithms.hpp"
#include "semisym/census.hpp"
#include "semisym/forge.hpp"

using namespace semisym;

namespace {

const CatalogCase& case_by_id(const std::string& id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  FAIL("no catalog case " << id);
  throw 0;
}

const Comparison* find_field(const CaseReport& r, const std::string& field) {
  for (const auto& c : r.comparisons)
    if (c.field == field) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  std::set<std::string> ids;
  std::set<int> divisions;
  for (const auto& c : cat) {
    CHECK(ids.insert(c.id).second);
    divisions.insert(c.division);
    CHECK((static_cast<bool>(c.build) || !c.skip_reason.empty()));
  }
  CHECK(divisions.size() == 14);
  CHECK(*divisions.begin() == 1);
  CHECK(*divisions.rbegin() == 14);
  std::set<AmalgamType> types;
  for (const auto& c : cat) types.insert(c.type);
  CHECK(types.size() == 15);
}

TEST_CASE("fingerprints") {
  const auto f = fingerprint(make_standard(StandardKind::Symmetric, 4));
  CHECK(f.order == 24);
  CHECK(f.derived_series == std::vector<std::uint64_t>{24, 12, 4, 1});
  CHECK(f.center_order == 1);
  CHECK(fingerprint(psl2(7)).derived_series == std::vector<std::uint64_t>{168});
  CHECK(fingerprint(psl2(7)) == fingerprint(psl3(2)));
  CHECK_FALSE(fingerprint(make_standard(StandardKind::Alternating, 4)) == fingerprint(make_standard(StandardKind::Dihedral, 6)));
}

TEST_CASE("division 3 cases give the Gray graph") {
  for (const auto& c : catalog()) {
    if (c.division != 3) continue;
    CAPTURE(c.id);
    const auto r = run_case(c);
    CHECK(r.passed);
    CHECK(r.quotient_vertices == 54);
    REQUIRE(r.aut_order.has_value());
    CHECK(*r.aut_order == 1296);
    CHECK(r.symmetry == Symmetry::Semisymmetric);
    for (const auto& cmp : r.comparisons) CHECK_MESSAGE(cmp.ok, cmp.field);
  }
}

TEST_CASE("division 12 and 13 cases") {
  for (const auto& id : {"div12-G4-PSU3(3)", "div12-G4^1-PSU3(3).2", "div13-G5-M12", "div13-G5^1-Aut(M12)"}) {
    CAPTURE(id);
    const auto r = run_case(case_by_id(id));
    CHECK(r.passed);
    CHECK(r.symmetry == Symmetry::Semisymmetric);
    CHECK(r.primitive_parts == 2);
  }
  const auto m = run_case(case_by_id("div13-G5-M12"));
  CHECK(m.quotient_vertices == 2 * 95040 / (3 * 64));  // edge stabilizer is a Sylow 2-subgroup
  CHECK(*m.aut_order == 190080);
  CHECK(m.aut_name == "Aut(M12)");
}

TEST_CASE("Sylow completions are exactly those with an odd invariant") {
  for (const auto& c : catalog()) {
    if (c.tier != Tier::Core || !c.skip_reason.empty()) continue;
    CAPTURE(c.id);
    const auto r = run_case(c);
    const auto* sylow = find_field(r, "sylow completion");
    const auto* odd = find_field(r, "odd parts iff sylow");
    REQUIRE(sylow != nullptr);
    REQUIRE(odd != nullptr);
    CHECK(odd->ok);
  }
}

TEST_CASE("skipped cases carry a reason") {
  const auto& c = case_by_id("div14-G5-G2(3)");
  CHECK_FALSE(c.skip_reason.empty());
  const auto r = run_case(c);
  CHECK(r.skipped);
  CHECK_FALSE(r.skip_reason.empty());
}

TEST_CASE("filtered runs and report json") {
  const auto rep = run_catalog(Tier::Core, "div1-");
  CHECK(rep.cases.size() == 2);
  CHECK(rep.all_passed());
  CHECK(rep.cross_checks.empty());
  const auto j = report_to_json(rep);
  CHECK(j["schema"] == "semisym-census/1");
  CHECK(j["cases"].size() == 2);
  CHECK_FALSE(j["cases"][0].contains("seconds"));
  CHECK(report_to_json(rep).dump() == j.dump());
  CHECK(report_to_json(rep, true)["cases"][0].contains("seconds"));
  CHECK(run_catalog(Tier::Core, "no-such-case").cases.empty());
}

TEST_CASE("the enumerated facts hold") {
  const auto facts = check_g51_facts();
  CHECK(facts.facts.size() >= 20);
  for (const auto& f : facts.facts) CHECK_MESSAGE(f.passed, f.id << ": " << f.claim << " / " << f.computed);
  CHECK(facts.all_passed());
  CHECK(facts_to_json(facts)["facts"].size() == facts.facts.size());
}
