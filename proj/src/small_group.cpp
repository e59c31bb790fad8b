#include "semisym/small_group.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "semisym/algorithms.hpp"

namespace semisym {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return out;
}

bool ElementSet::subset_of(const ElementSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
  return r;
}

std::size_t ElementSet::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

SmallGroup::SmallGroup(const GeneratedGroup& g, std::uint64_t bound) : degree_(g.degree()) {
  if (g.order() > bound) {
    throw BoundExceeded("group of order " + std::to_string(g.order()) + " too large for a table");
  }
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    if (!s.is_identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  const std::size_t n = g.order();
  elements_.reserve(n);
  elements_.emplace_back(degree_);
  index_.emplace(elements_[0], 0);
  std::vector<Index> parent{0};
  std::vector<std::uint32_t> via{0};
  std::vector<std::vector<Index>> right(gens.size(), std::vector<Index>(n, 0));
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Permutation y = elements_[i] * gens[j];
      auto [it, fresh] = index_.emplace(y, static_cast<Index>(elements_.size()));
      if (fresh) {
        elements_.push_back(std::move(y));
        parent.push_back(static_cast<Index>(i));
        via.push_back(static_cast<std::uint32_t>(j));
      }
      right[j][i] = it->second;
    }
  }
  if (elements_.size() != n) throw std::logic_error("element enumeration disagrees with chain order");
  table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    Index* row = &table_[a * n];
    row[0] = static_cast<Index>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[via[b]][row[parent[b]]];
  }
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    const Index* row = &table_[a * n];
    for (std::size_t b = 0; b < n; ++b) {
      if (row[b] == 0) {
        inverse_[a] = static_cast<Index>(b);
        break;
      }
    }
  }
  orders_.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    Index x = static_cast<Index>(a);
    std::uint64_t k = 1;
    while (x != 0) {
      x = mul(x, static_cast<Index>(a));
      ++k;
    }
    orders_[a] = k;
  }
}

std::optional<SmallGroup::Index> SmallGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementSet SmallGroup::whole() const {
  ElementSet s(size());
  for (std::size_t i = 0; i < size(); ++i) s.set(static_cast<Index>(i));
  return s;
}

ElementSet SmallGroup::trivial() const {
  ElementSet s(size());
  s.set(0);
  return s;
}

ElementSet SmallGroup::closure(const std::vector<Index>& gens) const {
  ElementSet s(size());
  s.set(0);
  std::vector<Index> list{0};
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Index g : gens) {
      Index y = mul(list[i], g);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  }
  return s;
}

ElementSet SmallGroup::generate(const std::vector<Index>& elems) const {
  std::vector<Index> gens;
  ElementSet s = trivial();
  for (Index x : elems) {
    if (s.test(x)) continue;
    gens.push_back(x);
    s = closure(gens);
  }
  return s;
}

ElementSet SmallGroup::join(const ElementSet& a, const ElementSet& b) const {
  auto ga = generators_of(a);
  auto gb = generators_of(b);
  ga.insert(ga.end(), gb.begin(), gb.end());
  return generate(ga);
}

std::vector<SmallGroup::Index> SmallGroup::generators_of(const ElementSet& s) const {
  std::vector<Index> gens;
  ElementSet h = trivial();
  for (Index x : s.members()) {
    if (h.test(x)) continue;
    gens.push_back(x);
    h = closure(gens);
  }
  return gens;
}

ElementSet SmallGroup::from_group(const GeneratedGroup& sub) const {
  std::vector<Index> gens;
  for (const auto& g : sub.generators()) {
    auto i = index_of(g);
    if (!i) throw std::invalid_argument("subgroup generator outside the table group");
    gens.push_back(*i);
  }
  return closure(gens);
}

GeneratedGroup SmallGroup::to_group(const ElementSet& s) const {
  std::vector<Permutation> gens;
  for (Index i : generators_of(s)) gens.push_back(elements_[i]);
  return GeneratedGroup(degree_, std::move(gens));
}

bool SmallGroup::is_normal(const ElementSet& a, const ElementSet& in) const {
  auto ga = generators_of(a);
  for (Index g : generators_of(in)) {
    for (Index x : ga) {
      if (!a.test(conj(x, g))) return false;
    }
  }
  return true;
}

ElementSet SmallGroup::normal_closure(const ElementSet& a, const ElementSet& in) const {
  auto list = generators_of(a);
  auto gin = generators_of(in);
  ElementSet h = closure(list);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Index g : gin) {
      Index c = conj(list[i], g);
      if (!h.test(c)) {
        list.push_back(c);
        h = closure(list);
      }
    }
  }
  return h;
}

ElementSet SmallGroup::conjugate(const ElementSet& a, Index by) const {
  ElementSet r(size());
  for (Index x : a.members()) r.set(conj(x, by));
  return r;
}

ElementSet SmallGroup::commutator(const ElementSet& a, const ElementSet& b) const {
  ElementSet seen(size());
  std::vector<Index> comms;
  auto mb = b.members();
  for (Index x : a.members()) {
    for (Index y : mb) {
      Index c = comm(x, y);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  }
  return generate(comms);
}

ElementSet SmallGroup::centralizer(const ElementSet& a, const ElementSet& in) const {
  auto ga = generators_of(a);
  ElementSet r(size());
  for (Index g : in.members()) {
    bool ok = true;
    for (Index x : ga) {
      if (mul(g, x) != mul(x, g)) {
        ok = false;
        break;
      }
    }
    if (ok) r.set(g);
  }
  return r;
}

ElementSet SmallGroup::normalizer(const ElementSet& a, const ElementSet& in) const {
  auto ga = generators_of(a);
  ElementSet r(size());
  for (Index g : in.members()) {
    bool ok = true;
    for (Index x : ga) {
      if (!a.test(conj(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) r.set(g);
  }
  return r;
}

ElementSet SmallGroup::omega1(const ElementSet& h) const {
  std::vector<Index> inv;
  for (Index x : h.members()) {
    if (orders_[x] == 2) inv.push_back(x);
  }
  return generate(inv);
}

ElementSet SmallGroup::o_p(const ElementSet& h, std::uint64_t p) const {
  ElementSet n = trivial();
  for (Index x : h.members()) {
    if (n.test(x) || !is_power_of(orders_[x], p)) continue;
    ElementSet c = normal_closure(closure({x}), h);
    if (!is_power_of(c.count(), p)) continue;
    n = join(n, c);
  }
  return n;
}

ElementSet SmallGroup::o_upper_p(const ElementSet& h, std::uint64_t p) const {
  std::vector<Index> elems;
  for (Index x : h.members()) {
    if (orders_[x] % p != 0) elems.push_back(x);
  }
  return generate(elems);
}

bool SmallGroup::is_abelian(const ElementSet& h) const {
  auto g = generators_of(h);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (mul(g[i], g[j]) != mul(g[j], g[i])) return false;
    }
  }
  return true;
}

std::uint64_t SmallGroup::exponent(const ElementSet& h) const {
  std::uint64_t e = 1;
  for (Index x : h.members()) e = std::lcm(e, orders_[x]);
  return e;
}

std::size_t SmallGroup::involution_count(const ElementSet& h) const {
  std::size_t c = 0;
  for (Index x : h.members()) c += orders_[x] == 2;
  return c;
}

bool SmallGroup::is_elementary_abelian(const ElementSet& h) const {
  if (h.count() < 2 || !is_abelian(h)) return false;
  auto e = exponent(h);
  return prime_divisors(e).size() == 1 && prime_divisors(e)[0] == e;
}

bool SmallGroup::is_extraspecial(const ElementSet& h) const {
  const auto n = h.count();
  auto ps = prime_divisors(n);
  if (ps.size() != 1 || n <= ps[0]) return false;
  const auto p = ps[0];
  ElementSet z = center(h);
  if (z.count() != p) return false;
  if (!(derived(h) == z)) return false;
  // Frattini equals G'G^p; with G' = Z it suffices that every p-th power lies in Z.
  for (Index x : h.members()) {
    Index y = 0;
    for (std::uint64_t k = 0; k < p; ++k) y = mul(y, x);
    if (!z.test(y)) return false;
  }
  return true;
}

bool SmallGroup::is_homocyclic_4x4(const ElementSet& h) const {
  return h.count() == 16 && is_abelian(h) && exponent(h) == 4 && involution_count(h) == 3;
}

std::vector<std::vector<SmallGroup::Index>> SmallGroup::conjugation_orbits(const ElementSet& x,
                                                                           const ElementSet& acting) const {
  auto gens = generators_of(acting);
  ElementSet seen(size());
  std::vector<std::vector<Index>> out;
  for (Index start : x.members()) {
    if (seen.test(start)) continue;
    std::vector<Index> orb{start};
    seen.set(start);
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (Index g : gens) {
        Index y = conj(orb[i], g);
        if (!seen.test(y)) {
          seen.set(y);
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<ElementSet> SmallGroup::subgroups(const ElementSet& h, std::size_t max_order,
                                              const ElementSet* start) const {
  std::vector<Index> cyclic_gens;
  std::unordered_set<ElementSet, ElementSetHash> cyclic_seen;
  for (Index x : h.members()) {
    if (x == 0) continue;
    ElementSet c = closure({x});
    if (c.count() > max_order) continue;
    if (cyclic_seen.insert(c).second) cyclic_gens.push_back(x);
  }
  ElementSet base = start ? *start : trivial();
  std::vector<ElementSet> out{base};
  std::unordered_set<ElementSet, ElementSetHash> seen{base};
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto gens = generators_of(out[i]);
    for (Index x : cyclic_gens) {
      if (out[i].test(x)) continue;
      auto g2 = gens;
      g2.push_back(x);
      ElementSet k = closure(g2);
      if (k.count() > max_order) continue;
      if (seen.insert(k).second) out.push_back(std::move(k));
    }
  }
  return out;
}

std::vector<SmallGroup::ChiefStep> SmallGroup::chief_series(const ElementSet& q, const ElementSet& h) const {
  std::vector<ChiefStep> steps;
  ElementSet n = trivial();
  auto hg = generators_of(h);
  while (!(n == q)) {
    std::optional<ElementSet> best;
    for (Index x : q.members()) {
      if (n.test(x)) continue;
      auto gens = generators_of(n);
      gens.push_back(x);
      ElementSet m = normal_closure(closure(gens), h);
      if (!best || m.count() < best->count()) best = std::move(m);
    }
    bool noncentral = false;
    for (Index m : generators_of(*best)) {
      for (Index g : hg) {
        if (!n.test(comm(m, g))) noncentral = true;
      }
    }
    steps.push_back({best->count() / n.count(), noncentral});
    n = std::move(*best);
  }
  return steps;
}

}  // namespace semisym
