#include "semisym/coset_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "semisym/algorithms.hpp"

namespace semisym {

namespace {

std::uint64_t index_in(const GeneratedGroup& g, const GeneratedGroup& h) {
  if (h.order() == 0 || g.order() % h.order() != 0) throw std::invalid_argument("subgroup order does not divide");
  return g.order() / h.order();
}

// Canonical representatives in sorted order and their index map.
void number_reps(std::vector<Permutation>& reps, std::unordered_map<Permutation, std::uint32_t, PermutationHash>& idx) {
  std::sort(reps.begin(), reps.end());
  idx.clear();
  for (std::size_t i = 0; i < reps.size(); ++i) idx.emplace(reps[i], static_cast<std::uint32_t>(i));
}

}  // namespace

CosetGraph CosetGraph::build(const GeneratedGroup& parent, const GeneratedGroup& g1, const GeneratedGroup& g2,
                             const GeneratedGroup& g12, std::size_t vertex_cap) {
  if (!g12.is_subgroup_of(g1) || !g12.is_subgroup_of(g2)) {
    throw std::invalid_argument("g12 must lie in both members");
  }
  if (!g1.is_subgroup_of(parent) || !g2.is_subgroup_of(parent)) {
    throw std::invalid_argument("members must lie in the parent");
  }
  const auto n1 = index_in(parent, g1), n2 = index_in(parent, g2), ne = index_in(parent, g12);
  if (n1 + n2 > vertex_cap) {
    throw BoundExceeded("coset graph would have " + std::to_string(n1 + n2) + " vertices, cap " +
                        std::to_string(vertex_cap));
  }
  CosetGraph cg;
  cg.parent_ = parent;
  cg.g1_ = g1;
  cg.g2_ = g2;
  cg.g12_ = g12;
  cg.h1_ = g1.with_full_base();
  cg.h2_ = g2.with_full_base();
  const GeneratedGroup h12 = g12.with_full_base();

  // Orbit of the edge G12 under the parent's generators.
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> seen;
  std::vector<Permutation> edge_reps;
  const Permutation id(parent.degree());
  edge_reps.push_back(h12.min_in_coset(id));
  seen.emplace(edge_reps[0], 0);
  for (std::size_t i = 0; i < edge_reps.size(); ++i) {
    for (const auto& x : parent.generators()) {
      Permutation c = h12.min_in_coset(edge_reps[i] * x);
      if (seen.emplace(c, static_cast<std::uint32_t>(edge_reps.size())).second) edge_reps.push_back(std::move(c));
    }
  }
  if (edge_reps.size() != ne) throw std::logic_error("edge orbit size differs from [G:G12]");

  std::vector<std::pair<Permutation, Permutation>> ends;
  ends.reserve(edge_reps.size());
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> tmp1, tmp2;
  for (const auto& r : edge_reps) {
    Permutation a = cg.h1_.min_in_coset(r), b = cg.h2_.min_in_coset(r);
    if (tmp1.emplace(a, 0).second) cg.left_reps_.push_back(a);
    if (tmp2.emplace(b, 0).second) cg.right_reps_.push_back(b);
    ends.emplace_back(std::move(a), std::move(b));
  }
  if (cg.left_reps_.size() != n1 || cg.right_reps_.size() != n2) {
    throw std::logic_error("part sizes differ from the member indices");
  }
  number_reps(cg.left_reps_, cg.left_index_);
  number_reps(cg.right_reps_, cg.right_index_);
  const auto left = static_cast<std::uint32_t>(n1);
  for (const auto& [a, b] : ends) cg.edges_.emplace_back(cg.left_index_.at(a), left + cg.right_index_.at(b));
  std::sort(cg.edges_.begin(), cg.edges_.end());
  for (const auto& x : parent.generators()) cg.action_images_.push_back(cg.vertex_image(x));
  return cg;
}

CosetGraph CosetGraph::build(const Amalgam& a, std::size_t vertex_cap) {
  return build(a.parent, a.g1, a.g2, a.g12, vertex_cap);
}

std::vector<std::vector<std::uint32_t>> CosetGraph::adjacency() const {
  std::vector<std::vector<std::uint32_t>> adj(vertex_count());
  for (const auto& [u, v] : edges_) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Permutation CosetGraph::vertex_image(const Permutation& x) const {
  std::vector<Point> img(vertex_count());
  const auto n1 = static_cast<Point>(left_size());
  for (std::size_t i = 0; i < left_reps_.size(); ++i) img[i] = left_index_.at(h1_.min_in_coset(left_reps_[i] * x));
  for (std::size_t i = 0; i < right_reps_.size(); ++i) {
    img[n1 + i] = n1 + right_index_.at(h2_.min_in_coset(right_reps_[i] * x));
  }
  return Permutation::unchecked(std::move(img));
}

GeneratedGroup CosetGraph::vertex_action() const {
  return GeneratedGroup(vertex_count(), action_images_, parent_.rng_seed());
}

GeneratedGroup action_kernel(const CosetGraph& cg) {
  GeneratedGroup k = core_in(intersect(cg.g1(), cg.g2()), {cg.parent()});
  if (cg.vertex_action().order() * k.order() != cg.parent().order()) {
    throw std::logic_error("kernel order disagrees with the vertex action");
  }
  return k;
}

CosetGraph quotient(const CosetGraph& cg, const GeneratedGroup& r, std::size_t vertex_cap) {
  if (!is_normal_in(r, cg.parent())) throw std::invalid_argument("quotient needs a normal subgroup");
  return CosetGraph::build(cg.parent(), join(cg.g1(), r), join(cg.g2(), r), join(cg.g12(), r), vertex_cap);
}

bool is_semiregular(const CosetGraph& cg, const GeneratedGroup& r) {
  const bool algebraic = intersect(r, cg.g1()).is_trivial() && intersect(r, cg.g2()).is_trivial();
  std::vector<Permutation> imgs;
  for (const auto& x : r.generators()) imgs.push_back(cg.vertex_image(x));
  bool orbits_regular = true;
  for (const auto& o : orbits(cg.vertex_count(), imgs)) {
    if (o.size() != r.order()) orbits_regular = false;
  }
  if (is_normal_in(r, cg.parent()) && algebraic != orbits_regular) {
    throw std::logic_error("semiregularity tests disagree");
  }
  return orbits_regular;
}

GeneratedGroup odd_radical(const GeneratedGroup& g) {
  // R grows by the preimage of O_p(G/R), which is the core of R*P for P a Sylow p-subgroup.
  GeneratedGroup r = GeneratedGroup::trivial(g.degree());
  std::vector<std::uint64_t> primes;
  for (auto p : prime_divisors(g.order())) {
    if (p != 2) primes.push_back(p);
  }
  std::vector<GeneratedGroup> sylows;
  for (auto p : primes) sylows.push_back(sylow_subgroup(g, p));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : sylows) {
      GeneratedGroup n = core_in(join(r, s), {g});
      if (n.order() > r.order()) {
        r = std::move(n);
        grew = true;
      }
    }
  }
  return r;
}

RegularNormalResult max_regular_normal(const CosetGraph& cg, std::uint64_t scan_bound) {
  RegularNormalResult res;
  const auto& g = cg.parent();
  GeneratedGroup o = odd_radical(g);
  res.odd_radical_order = o.order();
  res.subgroup = GeneratedGroup::trivial(g.degree());
  if (o.is_trivial()) return res;
  if (o.order() > scan_bound) {
    throw BoundExceeded("odd radical of order " + std::to_string(o.order()) + " exceeds the scan bound");
  }
  auto regular = [&](const GeneratedGroup& n) {
    return intersect(n, cg.g1()).is_trivial() && intersect(n, cg.g2()).is_trivial();
  };
  // Every semiregular normal subgroup is generated by the normal closures of its elements.
  std::vector<GeneratedGroup> found;
  std::unordered_map<Permutation, bool, PermutationHash> done;
  GeneratedGroup product = res.subgroup;
  for (const auto& x : o.elements(scan_bound)) {
    if (x.is_identity() || done.count(x) || product.contains(x)) continue;
    const auto ord = x.order();
    for (std::uint64_t k = 1; k < ord; ++k) {
      if (std::gcd(k, ord) == 1) done.emplace(x.pow(static_cast<std::int64_t>(k)), true);
    }
    ++res.candidates_scanned;
    GeneratedGroup n = normal_closure(g, {x});
    if (!regular(n)) continue;
    found.push_back(n);
    product = join(product, n);
  }
  if (regular(product)) {
    res.subgroup = product;
    return res;
  }
  res.unique = false;
  GeneratedGroup greedy = GeneratedGroup::trivial(g.degree());
  for (const auto& n : found) {
    GeneratedGroup t = join(greedy, n);
    if (regular(t)) greedy = std::move(t);
  }
  res.subgroup = greedy;
  return res;
}

nlohmann::json graph_to_json(const CosetGraph& cg) {
  nlohmann::json j;
  j["parts"] = {cg.left_size(), cg.right_size()};
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : cg.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

std::string graph_to_dot(const CosetGraph& cg, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n  node [shape=circle, style=filled];\n";
  for (std::size_t v = 0; v < cg.vertex_count(); ++v) {
    os << "  " << v << " [fillcolor=" << (v < cg.left_size() ? "white" : "gray") << "];\n";
  }
  for (const auto& [u, v] : cg.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace semisym
