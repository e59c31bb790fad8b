#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semisym/group.hpp"

namespace semisym {

enum class AmalgamType { G1, G1_1, G1_2, G1_3, G2, G2_1, G2_2, G2_3, G2_4, G3, G3_1, G4, G4_1, G5, G5_1 };

const std::vector<AmalgamType>& all_amalgam_types();
std::string to_string(AmalgamType t);  // "G2^1" style
std::optional<AmalgamType> parse_amalgam_type(const std::string& s);
int amalgam_class(AmalgamType t);       // 1..5
AmalgamType plain_type(int amalgam_class);

struct Amalgam {
  GeneratedGroup parent;
  GeneratedGroup g1, g2, g12;
  std::optional<AmalgamType> type_label;

  // g12 is computed as g1 intersected with g2.
  static Amalgam from_members(GeneratedGroup parent, GeneratedGroup g1, GeneratedGroup g2,
                              std::optional<AmalgamType> label = std::nullopt);
  Amalgam swapped() const;
};

struct VerificationReport {
  bool members_in_parent = false;
  bool g12_is_intersection = false;
  std::uint64_t index1 = 0, index2 = 0;
  bool g12_divides_128 = false;
  bool core_trivial = false;
  int eta1 = -1, eta2 = -1;
  bool generates_parent = false;  // informational
  bool passed = false;
  std::vector<std::string> failures;
};
VerificationReport verify_goldschmidt(const Amalgam& a);

struct MemberEvidence {
  std::uint64_t order = 0;
  bool abelian = false;
  std::uint64_t center_order = 0;
  std::uint64_t max_element_order = 0;
  std::uint64_t o2_order = 0;
  std::uint64_t o2_exponent = 0;
  bool o2_elementary_abelian = false;
  std::uint64_t o_upper_2_order = 0;
  bool o2_commutes_with_o_upper_2 = false;  // [O_2, O^2] = 1
  // Structure of O_2(O^2(G_i)).
  std::uint64_t core_order = 0;
  bool core_homocyclic_4x4 = false;
  bool core_extraspecial = false;
  int eta = 0;
};

struct AmalgamTypeEvidence {
  MemberEvidence g1, g2;
  std::uint64_t g12_order = 0;
  std::uint64_t g12_center_order = 0;
};

struct Classification {
  AmalgamType type = AmalgamType::G1;
  AmalgamTypeEvidence evidence;
  // True when the input order of members is the reverse of the table order.
  bool swapped = false;
};

MemberEvidence member_evidence(const GeneratedGroup& member);
Classification classify_type(const Amalgam& a);
Amalgam subamalgam(const Amalgam& a);
bool is_sylow_completion(const Amalgam& a);

struct OvergroupSearch {
  std::vector<GeneratedGroup> overgroups;
  bool complete = false;
  std::uint64_t candidates_examined = 0;
};
OvergroupSearch find_index3_overgroups(const GeneratedGroup& g, const GeneratedGroup& s,
                                       std::uint64_t bound = kEnumerationBound,
                                       std::uint64_t sample_budget = 200000);

enum class SearchStatus { Found, Exhausted, BudgetExceeded };
std::string to_string(SearchStatus s);

struct SymmetrizingSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Permutation> element;
  std::uint64_t examined = 0;
};
SymmetrizingSearch find_symmetrizing_element(const Amalgam& a, const GeneratedGroup& ambient,
                                             std::uint64_t bound = kEnumerationBound,
                                             std::uint64_t sample_budget = 1000000);

// Goldschmidt amalgams (G1, G2, S) with S a Sylow 2-subgroup of g, the members
// index-3 overgroups of S, and <G1, G2> = g. Each pair is listed once.
std::vector<Amalgam> locate_amalgams(const GeneratedGroup& g);
// First located amalgam with the requested type.
std::optional<Amalgam> locate_amalgam(const GeneratedGroup& g, AmalgamType type);

// Amalgam file: {"parent": group object or path, "g1": [...], "g2": [...], "type"?}.
nlohmann::json amalgam_to_json(const Amalgam& a);
Amalgam amalgam_from_json(const nlohmann::json& j, const std::string& base_dir = ".");

}  // namespace semisym
