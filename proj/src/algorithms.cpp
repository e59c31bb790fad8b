#include "semisym/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "semisym/small_group.hpp"

namespace semisym {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::vector<Point>> orbits(std::size_t degree, const std::vector<Permutation>& gens) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < degree; ++s) {
    if (seen[s]) continue;
    std::vector<Point> orb{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i) {
      for (const auto& g : gens) {
        Point y = g[orb[i]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const GeneratedGroup& g) { return orbits(g.degree(), g.generators()); }

bool is_transitive(const GeneratedGroup& g) { return g.degree() > 0 && orbits(g).size() == 1; }

Permutation p_part_of(const Permutation& x, std::uint64_t p) {
  auto o = x.order();
  return x.pow(static_cast<std::int64_t>(o / p_part(o, p)));
}

Permutation p_prime_part_of(const Permutation& x, std::uint64_t p) {
  return x.pow(static_cast<std::int64_t>(p_part(x.order(), p)));
}

GeneratedGroup conjugate_group(const GeneratedGroup& h, const Permutation& x) {
  std::vector<Permutation> gens;
  for (const auto& g : h.generators()) gens.push_back(conjugate(g, x));
  return GeneratedGroup(h.degree(), std::move(gens), h.rng_seed());
}

bool normalizes(const Permutation& x, const GeneratedGroup& h) {
  for (const auto& g : h.generators()) {
    if (!h.contains(conjugate(g, x))) return false;
  }
  return true;
}

GeneratedGroup join(const GeneratedGroup& a, const std::vector<Permutation>& extra) {
  auto gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return GeneratedGroup(a.degree(), std::move(gens), a.rng_seed());
}

GeneratedGroup join(const GeneratedGroup& a, const GeneratedGroup& b) { return join(a, b.generators()); }

GeneratedGroup group_from_elements(std::size_t degree, const std::vector<Permutation>& elements,
                                   std::uint64_t rng_seed) {
  std::vector<Permutation> gens;
  GeneratedGroup h(degree, {}, rng_seed);
  for (const auto& x : elements) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = GeneratedGroup(degree, gens, rng_seed);
  }
  return h;
}

GeneratedGroup sylow_subgroup(const GeneratedGroup& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  GeneratedGroup s(g.degree(), {}, g.rng_seed());
  auto grow = [&](const Permutation& x) {
    if (x.is_identity() || s.contains(x) || !normalizes(x, s)) return;
    s = join(s, {x});
  };
  if (g.order() <= 10000) {
    auto elems = g.elements();
    while (s.order() < target) {
      for (const auto& x : elems) {
        if (s.order() == target) break;
        if (is_power_of(x.order(), p)) grow(x);
      }
    }
  } else {
    std::mt19937_64 rng(g.rng_seed() * 0x9e3779b97f4a7c15ULL + p);
    constexpr std::uint64_t kBudget = 20'000'000;
    for (std::uint64_t t = 0; s.order() < target; ++t) {
      if (t == kBudget) throw std::runtime_error("Sylow search exceeded its trial budget");
      grow(p_part_of(g.random_element(rng), p));
    }
  }
  return s;
}

GeneratedGroup intersect(const GeneratedGroup& a, const GeneratedGroup& b, std::uint64_t bound) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in intersection");
  const GeneratedGroup* small = &a;
  const GeneratedGroup* other = &b;
  if (b.order() < a.order()) std::swap(small, other);
  if (small->order() > bound) throw BoundExceeded("both groups exceed the enumeration bound");
  if (small->is_subgroup_of(*other)) return *small;
  std::vector<Permutation> common;
  small->for_each_element([&](const Permutation& x) {
    if (other->contains(x)) common.push_back(x);
    return true;
  });
  return group_from_elements(a.degree(), common, a.rng_seed());
}

GeneratedGroup core_in(const GeneratedGroup& k, const std::vector<GeneratedGroup>& hs, std::uint64_t bound) {
  GeneratedGroup cur = k;
  bool changed = true;
  while (changed && !cur.is_trivial()) {
    changed = false;
    for (const auto& h : hs) {
      for (const auto& t : h.generators()) {
        if (normalizes(t, cur)) continue;
        cur = intersect(cur, conjugate_group(cur, t), bound);
        changed = true;
      }
    }
  }
  return cur;
}

GeneratedGroup p_core(const GeneratedGroup& g, std::uint64_t p) {
  return core_in(sylow_subgroup(g, p), {g});
}

GeneratedGroup normal_closure(const GeneratedGroup& g, const std::vector<Permutation>& elems) {
  std::vector<Permutation> gens;
  for (const auto& e : elems) {
    if (!e.is_identity()) gens.push_back(e);
  }
  GeneratedGroup n(g.degree(), gens, g.rng_seed());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = conjugate(gens[i], x);
      if (!n.contains(c)) {
        gens.push_back(c);
        n = GeneratedGroup(g.degree(), gens, g.rng_seed());
      }
    }
  }
  return n;
}

GeneratedGroup normal_closure(const GeneratedGroup& g, const GeneratedGroup& s) {
  return normal_closure(g, s.generators());
}

GeneratedGroup o_upper_p(const GeneratedGroup& g, std::uint64_t p) {
  std::vector<Permutation> parts;
  for (const auto& x : g.generators()) parts.push_back(p_prime_part_of(x, p));
  GeneratedGroup n = normal_closure(g, parts);
  if (is_power_of(g.order() / n.order(), p)) return n;
  g.for_each_element([&](const Permutation& x) {
    Permutation y = p_prime_part_of(x, p);
    if (!n.contains(y)) {
      auto gens = n.generators();
      gens.push_back(y);
      n = normal_closure(g, gens);
    }
    return !is_power_of(g.order() / n.order(), p);
  });
  return n;
}

GeneratedGroup centralizer(const GeneratedGroup& g, const std::vector<Permutation>& elems, std::uint64_t bound) {
  if (g.order() > bound) throw BoundExceeded("centralizer needs element enumeration");
  std::vector<Permutation> keep;
  g.for_each_element([&](const Permutation& x) {
    for (const auto& e : elems) {
      if (x * e != e * x) return true;
    }
    keep.push_back(x);
    return true;
  });
  return group_from_elements(g.degree(), keep, g.rng_seed());
}

GeneratedGroup center(const GeneratedGroup& g, std::uint64_t bound) { return centralizer(g, g.generators(), bound); }

GeneratedGroup derived_subgroup(const GeneratedGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) comms.push_back(commutator(gs[i], gs[j]));
  }
  return normal_closure(g, comms);
}

GeneratedGroup omega1(const GeneratedGroup& g, std::uint64_t bound) {
  if (!is_power_of(g.order(), 2)) throw std::invalid_argument("omega1 needs a 2-group");
  if (g.order() > bound) throw BoundExceeded("omega1 needs element enumeration");
  std::vector<Permutation> inv;
  g.for_each_element([&](const Permutation& x) {
    if (x.order() == 2) inv.push_back(x);
    return true;
  });
  return group_from_elements(g.degree(), inv, g.rng_seed());
}

bool is_normal_in(const GeneratedGroup& n, const GeneratedGroup& g) {
  for (const auto& x : g.generators()) {
    if (!normalizes(x, n)) return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<Point> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), Point{0}); }
  Point find(Point x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    up[b] = a;
    return true;
  }
};

// Finest block system in which a and b share a block.
BlockSystem minimal_blocks(std::size_t degree, const std::vector<Permutation>& gens, Point a, Point b) {
  UnionFind uf(degree);
  uf.unite(a, b);
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& s : gens) {
      Point u = uf.find(s[x]);
      Point v = uf.find(s[y]);
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  std::vector<std::vector<Point>> blocks;
  std::vector<std::int64_t> slot(degree, -1);
  for (Point x = 0; x < degree; ++x) {
    Point r = uf.find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(blocks.size());
      blocks.emplace_back();
    }
    blocks[slot[r]].push_back(x);
  }
  return BlockSystem{std::move(blocks)};
}

std::vector<BlockSystem> block_systems_impl(std::size_t degree, const std::vector<Permutation>& gens) {
  if (degree == 0 || orbits(degree, gens).size() != 1) {
    throw std::invalid_argument("block systems need a transitive action");
  }
  std::vector<BlockSystem> found;
  for (Point b = 1; b < degree; ++b) {
    BlockSystem sys = minimal_blocks(degree, gens, 0, b);
    if (sys.block_count() == 1) continue;
    if (std::find(found.begin(), found.end(), sys) == found.end()) found.push_back(std::move(sys));
  }
  // Keep systems whose block through 0 contains no smaller found block.
  std::vector<BlockSystem> minimal;
  for (const auto& s : found) {
    const auto& mine = s.blocks[0];
    bool is_min = true;
    for (const auto& t : found) {
      const auto& other = t.blocks[0];
      if (other.size() < mine.size() && std::includes(mine.begin(), mine.end(), other.begin(), other.end())) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(s);
  }
  return minimal;
}

}  // namespace

std::vector<BlockSystem> block_systems(const GeneratedGroup& g) {
  return block_systems_impl(g.degree(), g.generators());
}

bool is_primitive(const GeneratedGroup& g) { return block_systems(g).empty(); }

bool is_primitive(std::size_t degree, const std::vector<Permutation>& gens) {
  return block_systems_impl(degree, gens).empty();
}

ChiefFactorReport eta_count(const GeneratedGroup& g) {
  SmallGroup t(g);
  auto h = t.whole();
  auto q = t.o_p(h, 2);
  ChiefFactorReport r;
  for (const auto& step : t.chief_series(q, h)) {
    r.factor_orders.push_back(step.order);
    r.noncentral.push_back(step.noncentral);
    r.eta += step.noncentral ? 1 : 0;
  }
  return r;
}

StructureDescriptor structure_probe(const GeneratedGroup& g, std::uint64_t bound) {
  if (g.order() > bound) throw BoundExceeded("structure probe needs element enumeration");
  StructureDescriptor d;
  d.order = g.order();
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size() && d.abelian; ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i] * gs[j] != gs[j] * gs[i]) {
        d.abelian = false;
        break;
      }
    }
  }
  g.for_each_element([&](const Permutation& x) {
    auto o = x.order();
    d.order_profile[o] += 1;
    d.exponent = std::lcm(d.exponent, o);
    return true;
  });
  d.involutions = d.order_profile.count(2) ? d.order_profile[2] : 0;
  auto z = center(g, bound);
  d.center_order = z.order();
  auto ps = prime_divisors(d.exponent);
  d.elementary_abelian = d.abelian && d.order > 1 && ps.size() == 1 && ps[0] == d.exponent;
  auto ops = prime_divisors(d.order);
  if (ops.size() == 1 && !d.abelian && d.center_order == ops[0]) {
    const auto p = ops[0];
    auto der = derived_subgroup(g);
    bool ok = der.same_group(z);
    if (ok) {
      g.for_each_element([&](const Permutation& x) {
        if (!z.contains(x.pow(static_cast<std::int64_t>(p)))) ok = false;
        return ok;
      });
    }
    d.extraspecial = ok;
  }
  GeneratedGroup cur = g;
  d.derived_length = 0;
  while (!cur.is_trivial()) {
    GeneratedGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) {
      d.derived_length = -1;
      break;
    }
    cur = std::move(next);
    ++d.derived_length;
  }
  return d;
}

}  // namespace semisym
