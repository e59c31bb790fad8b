#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "semisym/permutation.hpp"

namespace semisym {

inline constexpr std::uint64_t kEnumerationBound = 100000;

// Raised when an element-level routine would have to enumerate more elements
// than its bound allows.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One level of a stabilizer chain. orbit[0] is the base point; each other orbit
// point records the tree edge (parent point, generator index) that reached it.
struct ChainLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> generator_inverses;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;  // point -> orbit index or -1
  std::vector<Point> parent;           // per orbit index
  std::vector<std::int32_t> label;     // per orbit index, -1 at the root
  std::vector<Permutation> reps;       // cached u_b, empty if not cached
  std::vector<Permutation> inverse_reps;

  bool in_orbit(Point p) const { return position[p] >= 0; }
};

class GeneratedGroup {
 public:
  GeneratedGroup() = default;
  // Builds the chain with Schreier-Sims. Base points start with base_prefix and
  // are extended by the smallest point moved by the element that forced them.
  GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                 std::uint64_t rng_seed = 0, std::vector<Point> base_prefix = {});

  // Trusts base and per-level strong generators; no Schreier-Sims is run.
  static GeneratedGroup from_strong_generators(std::size_t degree,
                                               std::vector<Permutation> generators,
                                               std::vector<Point> base,
                                               std::vector<std::vector<Permutation>> level_generators,
                                               std::uint64_t rng_seed = 0);
  static GeneratedGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }
  std::uint64_t rng_seed() const noexcept { return rng_seed_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  std::size_t chain_length() const noexcept { return levels_.size(); }
  const ChainLevel& level(std::size_t i) const { return levels_.at(i); }
  std::vector<Point> base() const;

  bool contains(const Permutation& p) const;
  // Remainder of sifting p through the whole chain; identity iff p is a member.
  Permutation sift(const Permutation& p) const;
  // u with base_point(level)^u = point.
  Permutation coset_rep(std::size_t level, Point point) const;

  // Visits every element once, starting with the identity; stop by returning false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;
  std::vector<Permutation> elements(std::uint64_t bound = kEnumerationBound) const;
  Permutation random_element(std::mt19937_64& rng) const;

  // Rebuilds the chain with the given base prefix.
  GeneratedGroup with_base(std::vector<Point> prefix) const;
  // Chain whose base is 0,1,...,n-1 in order; needed by min_in_coset.
  GeneratedGroup with_full_base() const;
  bool has_full_base() const noexcept { return full_base_; }
  // Least element (lexicographic on image vectors) of the right coset H*g.
  // Requires has_full_base().
  Permutation min_in_coset(const Permutation& g) const;

  bool is_subgroup_of(const GeneratedGroup& other) const;
  bool same_group(const GeneratedGroup& other) const;

 private:
  void schreier_sims(std::vector<Point> base_prefix);
  void rebuild_orbit(ChainLevel& lv) const;
  void add_level(Point b);
  // Sifts from level `from`; returns the residue and the level where it stuck.
  std::pair<Permutation, std::size_t> strip(Permutation h, std::size_t from) const;
  Permutation inverse_rep(const ChainLevel& lv, std::int32_t idx) const;
  Permutation rep(const ChainLevel& lv, std::int32_t idx) const;
  void finalize();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<ChainLevel> levels_;
  std::uint64_t order_ = 1;
  std::uint64_t rng_seed_ = 0;
  bool full_base_ = false;
  std::string name_;
};

// Subgroup generated by the given elements, sharing degree with `ambient`.
GeneratedGroup subgroup(const GeneratedGroup& ambient, std::vector<Permutation> gens);

}  // namespace semisym
