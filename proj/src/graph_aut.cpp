#include "semisym/graph_aut.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "semisym/algorithms.hpp"
#include "semisym/forge.hpp"

namespace semisym {

Graph::Graph(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) : adj_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph has a loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("graph has a repeated edge");
  }
  for (const auto& [u, v] : edges) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
  edges_ = std::move(edges);
}

Graph Graph::from_coset_graph(const CosetGraph& cg) { return Graph(cg.vertex_count(), cg.edges()); }

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("edges")) throw std::invalid_argument("malformed graph file: need edges");
  std::size_t n = 0;
  if (j.contains("parts")) {
    for (const auto& p : j["parts"]) n += p.get<std::size_t>();
  } else if (j.contains("vertices")) {
    n = j["vertices"].get<std::size_t>();
  } else {
    throw std::invalid_argument("malformed graph file: need parts or vertices");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("malformed graph file: edge must be a pair");
    edges.emplace_back(e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>());
  }
  return Graph(n, std::move(edges));
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < n; ++i) e.emplace_back(i, static_cast<std::uint32_t>((i + 1) % n));
  return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < b; ++j) e.emplace_back(i, static_cast<std::uint32_t>(a + j));
  }
  return Graph(a + b, std::move(e));
}

bool Graph::adjacent(std::uint32_t u, std::uint32_t v) const {
  const auto& row = adj_.at(u);
  return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_regular(std::size_t degree) const {
  return std::all_of(adj_.begin(), adj_.end(), [&](const auto& row) { return row.size() == degree; });
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto v : adj_[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == adj_.size();
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> colour(adj_.size(), -1);
  for (std::uint32_t s = 0; s < adj_.size(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::uint32_t> stack{s};
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : adj_[u]) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != vertex_count()) return false;
  for (const auto& [u, v] : edges_) {
    if (!adjacent(p[u], p[v])) return false;
  }
  return true;
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertex_count();
  auto e = nlohmann::json::array();
  for (const auto& [u, v] : edges_) e.push_back({u, v});
  j["edges"] = std::move(e);
  return j;
}

namespace {

// Ordered partition as a colour per vertex; colours are 0..cells-1 and every
// colour class is a cell.
struct Node {
  std::vector<std::uint32_t> colour;
  std::uint32_t cells = 0;
  std::uint64_t trace = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 31;
  x *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (x ^ (x >> 29));
}

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), n_(g.vertex_count()), sig_(n_), order_(n_) {}

  // Splits cells by the multiset of neighbour colours until stable. Cell order
  // is decided by the signatures, so it commutes with automorphisms.
  void refine(Node& node) {
    for (;;) {
      for (std::uint32_t v = 0; v < n_; ++v) {
        auto& s = sig_[v];
        s.clear();
        s.push_back(node.colour[v]);
        for (auto w : g_.neighbours(v)) s.push_back(node.colour[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(order_.begin(), order_.end(), 0);
      std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return sig_[a] < sig_[b]; });
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig_[order_[i]] != sig_[order_[i - 1]]) {
          ++c;
          for (auto x : sig_[order_[i - 1]]) node.trace = mix(node.trace, x);
        }
        node.colour[order_[i]] = c;
      }
      const std::uint32_t cells = n_ == 0 ? 0 : c + 1;
      node.trace = mix(node.trace, cells);
      if (cells == node.cells) return;
      node.cells = cells;
    }
  }

  Node individualize(const Node& parent, std::uint32_t v) {
    Node child = parent;
    const auto c = parent.colour[v];
    for (std::uint32_t u = 0; u < n_; ++u) {
      if (parent.colour[u] > c || (parent.colour[u] == c && u != v)) ++child.colour[u];
    }
    child.cells = parent.cells + 1;
    child.trace = mix(parent.trace, 0x51ed27);
    refine(child);
    return child;
  }

  // Least colour with more than one vertex, with its members in increasing order.
  std::vector<std::uint32_t> target_cell(const Node& node) const {
    std::vector<std::uint32_t> size(node.cells, 0);
    for (auto c : node.colour) ++size[c];
    std::uint32_t pick = 0;
    while (pick < node.cells && size[pick] == 1) ++pick;
    std::vector<std::uint32_t> cell;
    if (pick == node.cells) return cell;
    for (std::uint32_t u = 0; u < n_; ++u) {
      if (node.colour[u] == pick) cell.push_back(u);
    }
    return cell;
  }

  bool discrete(const Node& node) const { return node.cells == n_; }

 private:
  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> sig_;
  std::vector<std::uint32_t> order_;
};

struct Search {
  const Graph& g;
  Refiner refiner;
  std::vector<Node> path;  // first path, path[d] before individualizing base[d]
  std::vector<std::uint32_t> first_leaf_inverse;
  std::uint64_t nodes = 0;

  // Map sending the first leaf to this leaf.
  Permutation leaf_map(const Node& leaf) const {
    std::vector<Point> img(g.vertex_count());
    std::vector<std::uint32_t> at(g.vertex_count());
    for (std::uint32_t u = 0; u < leaf.colour.size(); ++u) at[leaf.colour[u]] = u;
    for (std::uint32_t c = 0; c < at.size(); ++c) img[first_leaf_inverse[c]] = at[c];
    return Permutation::unchecked(std::move(img));
  }

  std::optional<Permutation> descend(const Node& node, std::size_t depth) {
    ++nodes;
    if (refiner.discrete(node)) {
      Permutation p = leaf_map(node);
      if (g.is_automorphism(p)) return p;
      return std::nullopt;
    }
    for (auto x : refiner.target_cell(node)) {
      Node child = refiner.individualize(node, x);
      if (child.trace != path[depth + 1].trace || child.cells != path[depth + 1].cells) continue;
      if (auto r = descend(child, depth + 1)) return r;
    }
    return std::nullopt;
  }
};

std::vector<std::uint32_t> orbit_labels(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::uint32_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  for (const auto& o : orbits(n, gens)) {
    const auto m = *std::min_element(o.begin(), o.end());
    for (auto x : o) label[x] = m;
  }
  return label;
}

}  // namespace

GraphGroup automorphism_group(const Graph& g, std::size_t vertex_cap) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (n > vertex_cap) {
    throw BoundExceeded("graph has " + std::to_string(n) + " vertices, cap " + std::to_string(vertex_cap));
  }
  Search s{g, Refiner(g), {}, {}, 0};
  Node root;
  root.colour.assign(n, 0);
  root.cells = 1;
  s.refiner.refine(root);
  s.path.push_back(root);
  std::vector<std::uint32_t> base;
  std::vector<std::vector<std::uint32_t>> cells;
  while (!s.refiner.discrete(s.path.back())) {
    auto cell = s.refiner.target_cell(s.path.back());
    base.push_back(cell.front());
    cells.push_back(cell);
    s.path.push_back(s.refiner.individualize(s.path.back(), cell.front()));
  }
  s.first_leaf_inverse.assign(n, 0);
  for (std::uint32_t u = 0; u < n; ++u) s.first_leaf_inverse[s.path.back().colour[u]] = u;

  // Level d generators fix base[0..d-1]; levels are completed bottom up.
  const std::size_t k = base.size();
  std::vector<std::vector<Permutation>> found(k);
  std::vector<Permutation> known;  // generators from levels >= d
  for (std::size_t d = k; d-- > 0;) {
    auto label = orbit_labels(n, known);
    std::vector<std::uint32_t> failed;
    for (auto w : cells[d]) {
      if (label[w] == label[base[d]]) continue;
      if (std::any_of(failed.begin(), failed.end(), [&](auto f) { return label[f] == label[w]; })) continue;
      Node child = s.refiner.individualize(s.path[d], w);
      std::optional<Permutation> hit;
      if (child.trace == s.path[d + 1].trace && child.cells == s.path[d + 1].cells) hit = s.descend(child, d + 1);
      if (!hit) {
        // No automorphism fixing the prefix maps base[d] into this orbit.
        failed.push_back(w);
        continue;
      }
      found[d].push_back(*hit);
      known.push_back(*hit);
      label = orbit_labels(n, known);
    }
  }
  std::vector<Point> base_points(base.begin(), base.end());
  std::vector<std::vector<Permutation>> levels(k);
  std::vector<Permutation> acc;
  for (std::size_t d = k; d-- > 0;) {
    acc.insert(acc.end(), found[d].begin(), found[d].end());
    levels[d] = acc;
  }
  GraphGroup out;
  out.graph = g;
  out.search_nodes = s.nodes;
  out.group = GeneratedGroup::from_strong_generators(n, known, base_points, levels);
  return out;
}

std::size_t edge_orbit_count(const Graph& g, const std::vector<Permutation>& gens) {
  const auto& edges = g.edges();
  const std::uint64_t n = g.vertex_count();
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  for (std::uint32_t i = 0; i < edges.size(); ++i) index.emplace(edges[i].first * n + edges[i].second, i);
  std::vector<std::uint32_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = edges.size();
  for (const auto& p : gens) {
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      auto u = p[edges[i].first], v = p[edges[i].second];
      if (u > v) std::swap(u, v);
      auto it = index.find(u * n + v);
      if (it == index.end()) throw std::invalid_argument("permutation does not preserve adjacency");
      auto a = find(i), b = find(it->second);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  return count;
}

bool is_edge_transitive(const Graph& g, const GeneratedGroup& grp) {
  return !g.edges().empty() && edge_orbit_count(g, grp.generators()) == 1;
}

bool is_vertex_transitive(const Graph& g, const GeneratedGroup& grp) {
  for (const auto& p : grp.generators()) {
    if (!g.is_automorphism(p)) throw std::invalid_argument("permutation does not preserve adjacency");
  }
  return orbits(g.vertex_count(), grp.generators()).size() == 1;
}

std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::Symmetric: return "symmetric";
    case Symmetry::Semisymmetric: return "semisymmetric";
    case Symmetry::Neither: return "neither";
  }
  return "?";
}

namespace {

void require_connected_cubic(const Graph& g) {
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  if (!g.is_regular(3)) throw std::invalid_argument("graph is not cubic");
}

// Generators of the stabilizer of vertex 0.
std::vector<Permutation> stabilizer_of_zero(const GeneratedGroup& aut) {
  GeneratedGroup s = aut.with_base({0});
  if (s.chain_length() < 2) return {};
  return s.level(1).generators;
}

}  // namespace

SymmetryReport classify_symmetry(const Graph& g) {
  require_connected_cubic(g);
  return classify_symmetry(g, automorphism_group(g).group);
}

SymmetryReport classify_symmetry(const Graph& g, const GeneratedGroup& aut) {
  require_connected_cubic(g);
  SymmetryReport r;
  r.aut_order = aut.order();
  r.vertex_transitive = is_vertex_transitive(g, aut);
  r.edge_transitive = is_edge_transitive(g, aut);
  if (r.vertex_transitive) {
    const auto stab = stabilizer_of_zero(aut);
    const auto label = orbit_labels(g.vertex_count(), stab);
    const auto& nb = g.neighbours(0);
    r.arc_transitive = std::all_of(nb.begin(), nb.end(), [&](auto v) { return label[v] == label[nb[0]]; });
  }
  if (r.vertex_transitive && r.arc_transitive) {
    r.verdict = Symmetry::Symmetric;
  } else if (r.edge_transitive && !r.vertex_transitive) {
    r.verdict = Symmetry::Semisymmetric;
  }
  return r;
}

std::pair<bool, bool> is_biprimitive(const Graph& g) { return is_biprimitive(g, automorphism_group(g).group); }

std::pair<bool, bool> is_biprimitive(const Graph& g, const GeneratedGroup& aut) {
  auto colour = g.bipartition();
  if (!colour) throw std::invalid_argument("graph is not bipartite");
  if (!g.is_connected()) throw std::invalid_argument("graph is not connected");
  auto swaps = [&](const Permutation& p) { return (*colour)[p[0]] != (*colour)[0]; };
  // Schreier generators of the part-preserving subgroup, transversal {1, t}.
  std::vector<Permutation> keep;
  std::optional<Permutation> t;
  for (const auto& p : aut.generators()) {
    if (swaps(p) && !t) t = p;
  }
  for (const auto& p : aut.generators()) {
    if (!swaps(p)) {
      keep.push_back(p);
      if (t) keep.push_back(*t * p * t->inverse());
    } else {
      keep.push_back(p * t->inverse());
      keep.push_back(*t * p);
    }
  }
  auto primitive_on = [&](int part) {
    std::vector<std::uint32_t> local(g.vertex_count(), 0);
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      if ((*colour)[v] == part) {
        local[v] = static_cast<std::uint32_t>(members.size());
        members.push_back(v);
      }
    }
    std::vector<Permutation> restricted;
    for (const auto& p : keep) {
      std::vector<Point> img(members.size());
      for (std::size_t i = 0; i < members.size(); ++i) img[i] = local[p[members[i]]];
      restricted.emplace_back(std::move(img));
    }
    if (members.size() <= 2) return orbits(members.size(), restricted).size() == 1;
    if (orbits(members.size(), restricted).size() != 1) return false;
    return is_primitive(members.size(), restricted);
  };
  return {primitive_on(0), primitive_on(1)};
}

TutteReport tutte_stabilizer_check(const Graph& g) {
  return tutte_stabilizer_check(g, automorphism_group(g).group);
}

TutteReport tutte_stabilizer_check(const Graph& g, const GeneratedGroup& aut) {
  if (classify_symmetry(g, aut).verdict != Symmetry::Symmetric) {
    throw std::invalid_argument("graph is not symmetric");
  }
  GeneratedGroup stab(g.vertex_count(), stabilizer_of_zero(aut));
  TutteReport r;
  r.stabilizer_order = stab.order();
  r.divides_48 = 48 % r.stabilizer_order == 0;
  if (r.divides_48) {
    static const std::vector<std::pair<std::string, StructureDescriptor>> refs = [] {
      const auto z2 = make_standard(StandardKind::Cyclic, 2);
      const auto s3 = make_standard(StandardKind::Symmetric, 3);
      const auto s4 = make_standard(StandardKind::Symmetric, 4);
      return std::vector<std::pair<std::string, StructureDescriptor>>{
          {"3", structure_probe(make_standard(StandardKind::Cyclic, 3))},
          {"Sym(3)", structure_probe(s3)},
          {"Sym(3)x2", structure_probe(direct_product(s3, z2))},
          {"Sym(4)", structure_probe(s4)},
          {"Sym(4)x2", structure_probe(direct_product(s4, z2))}};
    }();
    const auto d = structure_probe(stab);
    for (const auto& [name, ref] : refs) {
      if (ref.order == d.order && ref.abelian == d.abelian && ref.center_order == d.center_order &&
          ref.order_profile == d.order_profile) {
        r.matched_type = name;
      }
    }
  }
  r.passed = r.divides_48 && !r.matched_type.empty();
  return r;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (!a.is_connected() || !b.is_connected()) throw std::invalid_argument("isomorphism test needs connected graphs");
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
  const auto n = static_cast<std::uint32_t>(a.vertex_count());
  auto edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + n, v + n);
  Graph u(2 * n, std::move(edges));
  const auto aut = automorphism_group(u).group;
  return std::any_of(aut.generators().begin(), aut.generators().end(), [&](const auto& p) { return p[0] >= n; });
}

}  // namespace semisym
