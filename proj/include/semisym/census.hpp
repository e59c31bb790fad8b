#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semisym/amalgam.hpp"
#include "semisym/graph_aut.hpp"
#include "semisym/group.hpp"

namespace semisym {

enum class Tier { Core, Extended };
std::string to_string(Tier t);
std::optional<Tier> parse_tier(const std::string& s);

// Which regular normal subgroup the quotient uses.
enum class RegularPolicy { Maximal, Trivial };

struct NamedOrder {
  std::string name;
  std::uint64_t order = 0;
};

struct CatalogCase {
  std::string id;
  int division = 0;
  std::string completion;
  std::function<GeneratedGroup()> build;
  AmalgamType type = AmalgamType::G1;
  RegularPolicy policy = RegularPolicy::Maximal;
  Tier tier = Tier::Core;
  // Present when the completion cannot be built at desk scale.
  std::string skip_reason;

  std::string quotient_name;
  std::function<GeneratedGroup()> quotient_reference;
  std::size_t quotient_vertices = 0;  // of the graph modulo R
  // Expectations on the quotient graph; empty when the quotient is degenerate.
  std::optional<std::uint64_t> aut_order;
  std::string aut_name;
  // Candidates to name the computed Aut when the tables disagree.
  std::vector<NamedOrder> aut_candidates;
  std::optional<Symmetry> symmetry;
  std::optional<int> primitive_parts;
  // Expectations on the unreduced graph when R is nontrivial.
  std::optional<std::size_t> graph_vertices;
  std::optional<Symmetry> graph_symmetry;
  std::string note;
};

// Order, derived series orders and centre order.
struct GroupFingerprint {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> derived_series;
  std::int64_t center_order = -1;  // -1 when not computed
  bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(const GeneratedGroup& g);

struct Comparison {
  std::string field;
  std::string expected;
  std::string computed;
  bool ok = false;
};

struct CaseReport {
  std::string id;
  int division = 0;
  std::string completion;
  std::string type;
  bool skipped = false;
  std::string skip_reason;
  bool passed = false;
  std::vector<Comparison> comparisons;
  // Computed facts, kept for cross-checks.
  std::uint64_t completion_order = 0;
  std::uint64_t r_order = 1;
  bool r_unique = true;
  std::size_t graph_vertices = 0;
  std::optional<Symmetry> graph_symmetry;
  std::size_t quotient_vertices = 0;
  bool quotient_degenerate = false;
  std::optional<std::uint64_t> aut_order;
  std::string aut_name;
  std::optional<Symmetry> symmetry;
  std::optional<int> primitive_parts;
  std::string note;
  double seconds = 0;
};

const std::vector<CatalogCase>& catalog();
CaseReport run_case(const CatalogCase& c);

struct CrossCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CensusReport {
  Tier tier = Tier::Core;
  std::vector<CaseReport> cases;
  std::vector<CrossCheck> cross_checks;
  std::size_t passed = 0, failed = 0, skipped = 0;
  bool all_passed() const { return failed == 0; }
};

// filter: run only cases whose id contains this string; empty runs all.
CensusReport run_catalog(Tier tier, const std::string& filter = "",
                         const std::function<void(const CaseReport&)>& progress = {});
nlohmann::json report_to_json(const CensusReport& r, bool with_timings = false);

struct FactCheck {
  std::string id;
  std::string claim;
  std::string computed;
  bool passed = false;
};
struct FactReport {
  std::vector<FactCheck> facts;
  bool all_passed() const;
};
// The enumerated facts about the G5^1 amalgam in Aut(M12) and the three
// structural claims about the G5 subamalgam.
FactReport check_g51_facts();
nlohmann::json facts_to_json(const FactReport& r);

}  // namespace semisym
