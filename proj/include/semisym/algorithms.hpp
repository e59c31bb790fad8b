#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "semisym/group.hpp"

namespace semisym {

// Arithmetic helpers.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// Orbits sorted internally, listed by smallest point.
std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens);
std::vector<std::vector<Point>> orbits(const GeneratedGroup& g);
bool is_transitive(const GeneratedGroup& g);

// Element helpers.
Permutation p_part_of(const Permutation& x, std::uint64_t p);
Permutation p_prime_part_of(const Permutation& x, std::uint64_t p);
GeneratedGroup conjugate_group(const GeneratedGroup& h, const Permutation& x);
bool normalizes(const Permutation& x, const GeneratedGroup& h);
GeneratedGroup join(const GeneratedGroup& a, const GeneratedGroup& b);
GeneratedGroup join(const GeneratedGroup& a, const std::vector<Permutation>& extra);
// Greedy generating set for the subgroup consisting of exactly `elements`.
GeneratedGroup group_from_elements(std::size_t degree, const std::vector<Permutation>& elements,
                                   std::uint64_t rng_seed = 0);

GeneratedGroup sylow_subgroup(const GeneratedGroup& g, std::uint64_t p);
GeneratedGroup p_core(const GeneratedGroup& g, std::uint64_t p);
GeneratedGroup o_upper_p(const GeneratedGroup& g, std::uint64_t p);
GeneratedGroup normal_closure(const GeneratedGroup& g, const GeneratedGroup& s);
GeneratedGroup normal_closure(const GeneratedGroup& g, const std::vector<Permutation>& elems);
GeneratedGroup core_in(const GeneratedGroup& k, const std::vector<GeneratedGroup>& hs,
                       std::uint64_t bound = kEnumerationBound);
GeneratedGroup intersect(const GeneratedGroup& a, const GeneratedGroup& b,
                         std::uint64_t bound = kEnumerationBound);
GeneratedGroup center(const GeneratedGroup& g, std::uint64_t bound = kEnumerationBound);
GeneratedGroup centralizer(const GeneratedGroup& g, const std::vector<Permutation>& elems,
                           std::uint64_t bound = kEnumerationBound);
GeneratedGroup derived_subgroup(const GeneratedGroup& g);
GeneratedGroup omega1(const GeneratedGroup& g, std::uint64_t bound = kEnumerationBound);
bool is_normal_in(const GeneratedGroup& n, const GeneratedGroup& g);

struct BlockSystem {
  std::vector<std::vector<Point>> blocks;
  std::size_t block_count() const { return blocks.size(); }
  bool operator==(const BlockSystem&) const = default;
};
// Minimal nontrivial block systems of a transitive group.
std::vector<BlockSystem> block_systems(const GeneratedGroup& g);
bool is_primitive(const GeneratedGroup& g);
// Same, for the group generated by `gens` on `degree` points.
bool is_primitive(std::size_t degree, const std::vector<Permutation>& gens);

struct ChiefFactorReport {
  std::vector<std::uint64_t> factor_orders;
  std::vector<bool> noncentral;
  int eta = 0;
};
// A chief series of O_2(g) under g; bounded by the table size of SmallGroup.
ChiefFactorReport eta_count(const GeneratedGroup& g);

struct StructureDescriptor {
  std::uint64_t order = 1;
  bool abelian = true;
  bool elementary_abelian = false;
  bool extraspecial = false;
  std::uint64_t exponent = 1;
  std::uint64_t center_order = 1;
  int derived_length = 0;  // -1 when not soluble
  std::uint64_t involutions = 0;
  std::map<std::uint64_t, std::uint64_t> order_profile;  // element order -> count
};
StructureDescriptor structure_probe(const GeneratedGroup& g, std::uint64_t bound = kEnumerationBound);

}  // namespace semisym
