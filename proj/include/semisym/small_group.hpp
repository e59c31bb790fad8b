#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "semisym/group.hpp"

namespace semisym {

// Fixed-size bitset over the element indices of a SmallGroup.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  bool test(std::uint32_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint32_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const noexcept;
  std::vector<std::uint32_t> members() const;
  bool subset_of(const ElementSet& o) const noexcept;
  ElementSet operator&(const ElementSet& o) const;
  bool operator==(const ElementSet&) const = default;
  std::size_t hash() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

// A permutation group small enough for a full multiplication table. Subgroups
// are element bitsets; element 0 is the identity.
class SmallGroup {
 public:
  using Index = std::uint32_t;
  static constexpr std::uint64_t kDefaultBound = 4096;

  explicit SmallGroup(const GeneratedGroup& g, std::uint64_t bound = kDefaultBound);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& element(Index i) const { return elements_.at(i); }
  std::optional<Index> index_of(const Permutation& p) const;
  Index mul(Index a, Index b) const noexcept { return table_[static_cast<std::size_t>(a) * size() + b]; }
  Index inv(Index a) const noexcept { return inverse_[a]; }
  Index conj(Index a, Index by) const noexcept { return mul(mul(inv(by), a), by); }
  Index comm(Index a, Index b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  std::uint64_t element_order(Index a) const noexcept { return orders_[a]; }

  ElementSet whole() const;
  ElementSet trivial() const;
  ElementSet closure(const std::vector<Index>& gens) const;
  // Generates greedily from the listed elements, skipping those already reached.
  ElementSet generate(const std::vector<Index>& elems) const;
  ElementSet join(const ElementSet& a, const ElementSet& b) const;
  std::vector<Index> generators_of(const ElementSet& s) const;
  ElementSet from_group(const GeneratedGroup& sub) const;
  GeneratedGroup to_group(const ElementSet& s) const;

  bool is_normal(const ElementSet& a, const ElementSet& in) const;
  ElementSet normal_closure(const ElementSet& a, const ElementSet& in) const;
  ElementSet conjugate(const ElementSet& a, Index by) const;
  ElementSet commutator(const ElementSet& a, const ElementSet& b) const;
  ElementSet centralizer(const ElementSet& a, const ElementSet& in) const;
  ElementSet normalizer(const ElementSet& a, const ElementSet& in) const;
  ElementSet center(const ElementSet& h) const { return centralizer(h, h); }
  ElementSet derived(const ElementSet& h) const { return commutator(h, h); }
  ElementSet omega1(const ElementSet& h) const;
  ElementSet o_p(const ElementSet& h, std::uint64_t p) const;
  ElementSet o_upper_p(const ElementSet& h, std::uint64_t p) const;

  bool is_abelian(const ElementSet& h) const;
  std::uint64_t exponent(const ElementSet& h) const;
  std::size_t involution_count(const ElementSet& h) const;
  bool is_elementary_abelian(const ElementSet& h) const;
  bool is_extraspecial(const ElementSet& h) const;
  // Z4 x Z4: abelian of order 16 with exponent 4 and exactly three involutions.
  bool is_homocyclic_4x4(const ElementSet& h) const;

  // Orbits of `acting` by conjugation on the members of x, listed by least index.
  std::vector<std::vector<Index>> conjugation_orbits(const ElementSet& x, const ElementSet& acting) const;
  // Subgroups K with start <= K <= h and |K| <= max_order.
  std::vector<ElementSet> subgroups(const ElementSet& h, std::size_t max_order,
                                    const ElementSet* start = nullptr) const;

  struct ChiefStep {
    std::uint64_t order;
    bool noncentral;
  };
  // Chief series of q (normal in h) under conjugation by h, bottom up.
  std::vector<ChiefStep> chief_series(const ElementSet& q, const ElementSet& h) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> index_;
  std::vector<Index> table_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
};

}  // namespace semisym
