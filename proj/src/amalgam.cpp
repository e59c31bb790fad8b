#include "semisym/amalgam.hpp"

#include <algorithm>
#include <filesystem>
#include <unordered_map>
#include <map>

#include "semisym/algorithms.hpp"
#include "semisym/forge.hpp"
#include "semisym/small_group.hpp"

namespace semisym {

namespace {

const std::vector<std::pair<AmalgamType, std::string>>& type_names() {
  static const std::vector<std::pair<AmalgamType, std::string>> names{
      {AmalgamType::G1, "G1"},     {AmalgamType::G1_1, "G1^1"}, {AmalgamType::G1_2, "G1^2"},
      {AmalgamType::G1_3, "G1^3"}, {AmalgamType::G2, "G2"},     {AmalgamType::G2_1, "G2^1"},
      {AmalgamType::G2_2, "G2^2"}, {AmalgamType::G2_3, "G2^3"}, {AmalgamType::G2_4, "G2^4"},
      {AmalgamType::G3, "G3"},     {AmalgamType::G3_1, "G3^1"}, {AmalgamType::G4, "G4"},
      {AmalgamType::G4_1, "G4^1"}, {AmalgamType::G5, "G5"},     {AmalgamType::G5_1, "G5^1"}};
  return names;
}

}  // namespace

const std::vector<AmalgamType>& all_amalgam_types() {
  static const std::vector<AmalgamType> all = [] {
    std::vector<AmalgamType> v;
    for (const auto& [t, n] : type_names()) v.push_back(t);
    return v;
  }();
  return all;
}

std::string to_string(AmalgamType t) {
  for (const auto& [k, n] : type_names()) {
    if (k == t) return n;
  }
  return "?";
}

std::optional<AmalgamType> parse_amalgam_type(const std::string& s) {
  for (const auto& [k, n] : type_names()) {
    if (n == s) return k;
  }
  return std::nullopt;
}

int amalgam_class(AmalgamType t) {
  switch (t) {
    case AmalgamType::G1:
    case AmalgamType::G1_1:
    case AmalgamType::G1_2:
    case AmalgamType::G1_3:
      return 1;
    case AmalgamType::G2:
    case AmalgamType::G2_1:
    case AmalgamType::G2_2:
    case AmalgamType::G2_3:
    case AmalgamType::G2_4:
      return 2;
    case AmalgamType::G3:
    case AmalgamType::G3_1:
      return 3;
    case AmalgamType::G4:
    case AmalgamType::G4_1:
      return 4;
    case AmalgamType::G5:
    case AmalgamType::G5_1:
      return 5;
  }
  return 0;
}

AmalgamType plain_type(int cls) {
  switch (cls) {
    case 1: return AmalgamType::G1;
    case 2: return AmalgamType::G2;
    case 3: return AmalgamType::G3;
    case 4: return AmalgamType::G4;
    case 5: return AmalgamType::G5;
    default: throw std::invalid_argument("amalgam class must be 1..5");
  }
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

Amalgam Amalgam::from_members(GeneratedGroup parent, GeneratedGroup g1, GeneratedGroup g2,
                              std::optional<AmalgamType> label) {
  Amalgam a;
  a.g12 = intersect(g1, g2);
  a.parent = std::move(parent);
  a.g1 = std::move(g1);
  a.g2 = std::move(g2);
  a.type_label = label;
  return a;
}

Amalgam Amalgam::swapped() const {
  Amalgam a = *this;
  std::swap(a.g1, a.g2);
  return a;
}

VerificationReport verify_goldschmidt(const Amalgam& a) {
  VerificationReport r;
  auto fail = [&](std::string msg) { r.failures.push_back(std::move(msg)); };
  r.members_in_parent = a.g1.is_subgroup_of(a.parent) && a.g2.is_subgroup_of(a.parent) && a.g12.is_subgroup_of(a.parent);
  if (!r.members_in_parent) fail("members are not subgroups of the parent");
  r.g12_is_intersection = a.g12.same_group(intersect(a.g1, a.g2));
  if (!r.g12_is_intersection) fail("g12 is not the intersection of g1 and g2");
  r.index1 = a.g1.order() % a.g12.order() == 0 ? a.g1.order() / a.g12.order() : 0;
  r.index2 = a.g2.order() % a.g12.order() == 0 ? a.g2.order() / a.g12.order() : 0;
  if (r.index1 != 3 || r.index2 != 3) fail("g12 does not have index 3 in both members");
  r.g12_divides_128 = 128 % a.g12.order() == 0;
  if (!r.g12_divides_128) fail("|g12| does not divide 2^7");
  r.core_trivial = core_in(a.g12, {a.g1, a.g2}).is_trivial();
  if (!r.core_trivial) fail("g12 contains a nontrivial subgroup normal in both members");
  try {
    r.eta1 = eta_count(a.g1).eta;
    r.eta2 = eta_count(a.g2).eta;
    if (r.eta1 > 2 || r.eta2 > 2) fail("eta exceeds 2");
  } catch (const BoundExceeded&) {
    fail("members too large for chief series computation");
  }
  r.generates_parent = join(a.g1, a.g2).order() == a.parent.order();
  r.passed = r.failures.empty();
  return r;
}

MemberEvidence member_evidence(const GeneratedGroup& member) {
  SmallGroup t(member);
  const auto h = t.whole();
  MemberEvidence e;
  e.order = t.size();
  e.abelian = t.is_abelian(h);
  e.center_order = t.center(h).count();
  for (std::size_t i = 0; i < t.size(); ++i) {
    e.max_element_order = std::max(e.max_element_order, t.element_order(static_cast<SmallGroup::Index>(i)));
  }
  const auto o2 = t.o_p(h, 2);
  const auto up = t.o_upper_p(h, 2);
  e.o2_order = o2.count();
  e.o2_exponent = t.exponent(o2);
  e.o2_elementary_abelian = t.is_elementary_abelian(o2);
  e.o_upper_2_order = up.count();
  e.o2_commutes_with_o_upper_2 = t.commutator(o2, up) == t.trivial();
  const auto core = t.o_p(up, 2);
  e.core_order = core.count();
  e.core_homocyclic_4x4 = t.is_homocyclic_4x4(core);
  e.core_extraspecial = t.is_extraspecial(core);
  for (const auto& s : t.chief_series(o2, h)) e.eta += s.noncentral ? 1 : 0;
  return e;
}

Classification classify_type(const Amalgam& a) {
  Classification c;
  auto& ev = c.evidence;
  ev.g1 = member_evidence(a.g1);
  ev.g2 = member_evidence(a.g2);
  ev.g12_order = a.g12.order();
  ev.g12_center_order = center(a.g12).order();
  const bool f1 = ev.g1.o2_commutes_with_o_upper_2;
  const bool f2 = ev.g2.o2_commutes_with_o_upper_2;
  const int cls_flags = (f1 && f2) ? 1 : (f1 != f2 ? 2 : 3);
  const auto n = ev.g12_order;
  auto fail = [&]() -> Classification {
    throw std::logic_error("no Goldschmidt type matches: |g12| = " + std::to_string(n) + ", commuting flags " +
                           std::to_string(f1) + "/" + std::to_string(f2));
  };
  // In class G2 the table lists the member with [O_2, O^2] != 1 first.
  const bool class2_swapped = f1 && !f2;
  const MemberEvidence& noncomm = class2_swapped ? ev.g2 : ev.g1;
  const MemberEvidence& comm = class2_swapped ? ev.g1 : ev.g2;

  if (n == 1) {
    c.type = AmalgamType::G1;
  } else if (n == 2) {
    if (cls_flags != 1) return fail();
    if (ev.g1.abelian || ev.g2.abelian) {
      c.type = AmalgamType::G1_2;
      c.swapped = ev.g1.abelian;
    } else {
      c.type = AmalgamType::G1_1;
    }
  } else if (n == 4) {
    if (cls_flags == 1) {
      c.type = AmalgamType::G1_3;
    } else if (cls_flags == 2) {
      c.type = AmalgamType::G2;
      c.swapped = class2_swapped;
    } else {
      return fail();
    }
  } else if (n == 8) {
    if (cls_flags == 2) {
      c.swapped = class2_swapped;
      if (noncomm.center_order == 2) {
        c.type = AmalgamType::G2_3;
      } else if (comm.o2_order == 4 && comm.o2_exponent == 4) {
        c.type = AmalgamType::G2_1;
      } else {
        c.type = AmalgamType::G2_2;
      }
    } else if (cls_flags == 3) {
      c.type = AmalgamType::G3;
    } else {
      return fail();
    }
  } else if (n == 16) {
    if (cls_flags == 2) {
      c.type = AmalgamType::G2_4;
      c.swapped = class2_swapped;
    } else if (cls_flags == 3) {
      c.type = AmalgamType::G3_1;
    } else {
      return fail();
    }
  } else if (n == 32 || n == 64 || n == 128) {
    if (cls_flags != 3) return fail();
    // Table order puts the member with O_2(O^2) = 4 x 4 first.
    if (ev.g1.core_homocyclic_4x4 == ev.g2.core_homocyclic_4x4) return fail();
    c.swapped = ev.g2.core_homocyclic_4x4;
    const MemberEvidence& second = c.swapped ? ev.g1 : ev.g2;
    if (n == 32) {
      c.type = AmalgamType::G4;
    } else if (n == 64) {
      if (second.eta == 1) {
        c.type = AmalgamType::G4_1;
      } else if (second.eta == 2) {
        c.type = AmalgamType::G5;
      } else {
        return fail();
      }
    } else {
      c.type = AmalgamType::G5_1;
    }
  } else {
    return fail();
  }
  return c;
}

Amalgam subamalgam(const Amalgam& a) {
  auto parts = [](const GeneratedGroup& g) {
    SmallGroup t(g);
    auto up = t.o_upper_p(t.whole(), 2);
    return std::pair{t.to_group(up), t.to_group(t.o_p(up, 2))};
  };
  auto [up1, core1] = parts(a.g1);
  auto [up2, core2] = parts(a.g2);
  GeneratedGroup m1 = join(up1, core2);
  GeneratedGroup m2 = join(up2, core1);
  Amalgam s = Amalgam::from_members(a.parent, std::move(m1), std::move(m2));
  if (!s.g12.same_group(join(core1, core2))) {
    throw std::logic_error("subamalgam intersection differs from O_2(O^2(G1)) O_2(O^2(G2))");
  }
  if (a.type_label) s.type_label = plain_type(amalgam_class(*a.type_label));
  return s;
}

bool is_sylow_completion(const Amalgam& a) {
  const bool sylow = a.g12.order() == p_part(a.parent.order(), 2);
  const bool odd_index = a.g1.order() != 0 && (a.parent.order() / a.g1.order()) % 2 == 1;
  if (sylow != odd_index) throw std::logic_error("Sylow test and index parity disagree");
  return sylow;
}

OvergroupSearch find_index3_overgroups(const GeneratedGroup& g, const GeneratedGroup& s, std::uint64_t bound,
                                       std::uint64_t sample_budget) {
  if (!is_power_of(s.order(), 2)) throw std::invalid_argument("overgroup search needs a 2-subgroup");
  OvergroupSearch out;
  const auto& sg = s.generators();
  auto in_x = [&](const Permutation& y, const Permutation& tinv, const Permutation& t2inv) {
    return s.contains(y) || s.contains(y * tinv) || s.contains(y * t2inv);
  };
  // Test whether S u St u St^2 is closed, which makes it the group <S, t> of order 3|S|.
  auto consider = [&](const Permutation& t) {
    ++out.candidates_examined;
    if (t.order() != 3) return;
    for (const auto& h : out.overgroups) {
      if (h.contains(t)) return;
    }
    const Permutation t2 = t * t;
    const Permutation tinv = t2, t2inv = t;
    for (const auto& x : sg) {
      if (!in_x(t * x, tinv, t2inv) || !in_x(t2 * x, tinv, t2inv)) return;
    }
    GeneratedGroup h = join(s, {t});
    if (h.order() != 3 * s.order()) throw std::logic_error("coset closure test accepted a larger group");
    out.overgroups.push_back(std::move(h));
  };
  // Every element of order 3 lies in O^2(g).
  const GeneratedGroup* scan = nullptr;
  GeneratedGroup odd_part;
  if (g.order() <= bound) {
    scan = &g;
  } else {
    odd_part = o_upper_p(g, 2);
    if (odd_part.order() <= bound) scan = &odd_part;
  }
  if (scan) {
    scan->for_each_element([&](const Permutation& t) {
      consider(t);
      return true;
    });
    out.complete = true;
  } else {
    std::mt19937_64 rng(g.rng_seed() * 0x2545f4914f6cdd1dULL + 3);
    for (std::uint64_t i = 0; i < sample_budget; ++i) {
      Permutation x = g.random_element(rng);
      auto o = x.order();
      if (o % 3 == 0) consider(x.pow(static_cast<std::int64_t>(o / 3)));
    }
    out.complete = false;
  }
  return out;
}

SymmetrizingSearch find_symmetrizing_element(const Amalgam& a, const GeneratedGroup& ambient, std::uint64_t bound,
                                             std::uint64_t sample_budget) {
  SymmetrizingSearch r;
  if (a.g1.order() != a.g2.order()) return r;
  auto qualifies = [&](const Permutation& x) {
    ++r.examined;
    if (!normalizes(x, a.g12)) return false;
    for (const auto& s : a.g1.generators()) {
      if (!a.g2.contains(conjugate(s, x))) return false;
    }
    return a.g12.contains(x * x);
  };
  if (ambient.order() <= bound) {
    ambient.for_each_element([&](const Permutation& x) {
      if (qualifies(x)) {
        r.element = x;
        r.status = SearchStatus::Found;
        return false;
      }
      return true;
    });
    return r;
  }
  std::mt19937_64 rng(ambient.rng_seed() * 0x9e3779b97f4a7c15ULL + 17);
  for (std::uint64_t i = 0; i < sample_budget; ++i) {
    Permutation x = ambient.random_element(rng);
    if (qualifies(x)) {
      r.element = x;
      r.status = SearchStatus::Found;
      return r;
    }
  }
  r.status = SearchStatus::BudgetExceeded;
  return r;
}

std::vector<Amalgam> locate_amalgams(const GeneratedGroup& g) {
  std::vector<Amalgam> out;
  const GeneratedGroup s = sylow_subgroup(g, 2);
  const auto search = find_index3_overgroups(g, s);
  const auto& hs = search.overgroups;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      if (join(hs[i], hs[j]).order() != g.order()) continue;
      if (!core_in(s, {hs[i], hs[j]}).is_trivial()) continue;
      Amalgam a;
      a.parent = g;
      a.g1 = hs[i];
      a.g2 = hs[j];
      a.g12 = s;
      out.push_back(std::move(a));
    }
  }
  return out;
}

std::optional<Amalgam> locate_amalgam(const GeneratedGroup& g, AmalgamType type) {
  for (auto& a : locate_amalgams(g)) {
    auto c = classify_type(a);
    if (c.type != type) continue;
    Amalgam r = c.swapped ? a.swapped() : a;
    r.type_label = type;
    return r;
  }
  return std::nullopt;
}

nlohmann::json amalgam_to_json(const Amalgam& a) {
  // Member generators first, then the parent's; each permutation is stored once
  // so that writing a loaded file reproduces it.
  std::vector<Permutation> gens;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  auto add = [&](const Permutation& x) {
    auto [it, fresh] = index.emplace(x, gens.size());
    if (fresh) gens.push_back(x);
    return it->second;
  };
  std::vector<std::size_t> i1, i2;
  for (const auto& x : a.g1.generators()) i1.push_back(add(x));
  for (const auto& x : a.g2.generators()) i2.push_back(add(x));
  for (const auto& x : a.parent.generators()) add(x);
  GeneratedGroup p(a.parent.degree(), gens);
  p.set_name(a.parent.name());
  nlohmann::json j;
  j["parent"] = group_to_json(p);
  j["g1"] = i1;
  j["g2"] = i2;
  if (a.type_label) j["type"] = to_string(*a.type_label);
  return j;
}

Amalgam amalgam_from_json(const nlohmann::json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("parent") || !j.contains("g1") || !j.contains("g2")) {
    throw std::invalid_argument("malformed amalgam file: need parent, g1 and g2");
  }
  GeneratedGroup parent;
  if (j["parent"].is_string()) {
    auto path = std::filesystem::path(base_dir) / j["parent"].get<std::string>();
    parent = group_from_json(nlohmann::json::parse(read_text(path.string())));
  } else {
    parent = group_from_json(j["parent"]);
  }
  auto pick = [&](const nlohmann::json& idx) {
    std::vector<Permutation> gens;
    for (const auto& i : idx) {
      auto k = i.get<std::size_t>();
      if (k >= parent.generators().size()) throw std::invalid_argument("malformed amalgam file: generator index");
      gens.push_back(parent.generators()[k]);
    }
    return GeneratedGroup(parent.degree(), std::move(gens));
  };
  std::optional<AmalgamType> label;
  if (j.contains("type")) {
    label = parse_amalgam_type(j["type"].get<std::string>());
    if (!label) throw std::invalid_argument("malformed amalgam file: unknown type");
  }
  return Amalgam::from_members(parent, pick(j["g1"]), pick(j["g2"]), label);
}

}  // namespace semisym
