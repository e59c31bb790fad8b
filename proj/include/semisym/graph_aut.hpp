#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semisym/coset_graph.hpp"
#include "semisym/group.hpp"

namespace semisym {

constexpr std::size_t kGraphVertexCap = 50000;

// Simple undirected graph on 0..n-1.
class Graph {
 public:
  Graph() = default;
  // Rejects loops, repeated edges and out-of-range endpoints.
  Graph(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);
  static Graph from_coset_graph(const CosetGraph& cg);
  static Graph from_json(const nlohmann::json& j);
  static Graph cycle(std::size_t n);
  static Graph complete_bipartite(std::size_t a, std::size_t b);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const noexcept { return edges_; }
  const std::vector<std::uint32_t>& neighbours(std::uint32_t v) const { return adj_.at(v); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const;
  bool is_regular(std::size_t degree) const;
  bool is_connected() const;
  // Colour 0/1 per vertex, vertex 0 coloured 0; nullopt if not bipartite.
  std::optional<std::vector<int>> bipartition() const;
  bool is_automorphism(const Permutation& p) const;
  nlohmann::json to_json() const;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;  // u < v, sorted
  std::vector<std::vector<std::uint32_t>> adj_;                  // sorted rows
};

struct GraphGroup {
  Graph graph;
  GeneratedGroup group;
  std::uint64_t search_nodes = 0;
};

// Individualization-refinement search; the result's chain comes straight from
// the search's base and level generators.
GraphGroup automorphism_group(const Graph& g, std::size_t vertex_cap = kGraphVertexCap);

std::size_t edge_orbit_count(const Graph& g, const std::vector<Permutation>& gens);
bool is_edge_transitive(const Graph& g, const GeneratedGroup& grp);
bool is_vertex_transitive(const Graph& g, const GeneratedGroup& grp);

enum class Symmetry { Symmetric, Semisymmetric, Neither };
std::string to_string(Symmetry s);

struct SymmetryReport {
  Symmetry verdict = Symmetry::Neither;
  std::uint64_t aut_order = 0;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
};
// Connected cubic graphs only.
SymmetryReport classify_symmetry(const Graph& g);
SymmetryReport classify_symmetry(const Graph& g, const GeneratedGroup& aut);

// Primitivity of the part-preserving subgroup of Aut on the part containing
// vertex 0 and on the other part.
std::pair<bool, bool> is_biprimitive(const Graph& g);
std::pair<bool, bool> is_biprimitive(const Graph& g, const GeneratedGroup& aut);

struct TutteReport {
  std::uint64_t stabilizer_order = 0;
  bool divides_48 = false;
  std::string matched_type;  // "3", "Sym(3)", "Sym(3)x2", "Sym(4)", "Sym(4)x2" or empty
  bool passed = false;
};
// Symmetric connected cubic graphs only.
TutteReport tutte_stabilizer_check(const Graph& g);
TutteReport tutte_stabilizer_check(const Graph& g, const GeneratedGroup& aut);

// Connected graphs: isomorphic iff Aut of the disjoint union swaps the components.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace semisym
