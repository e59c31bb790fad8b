#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semisym/amalgam.hpp"
#include "semisym/group.hpp"

namespace semisym {

constexpr std::size_t kVertexCap = 100000;

// Bipartite graph on the right cosets of g1 (vertices 0..n1-1) and of g2
// (vertices n1..n1+n2-1); the cosets of g12 are the edges. Each vertex is
// numbered by the rank of its least coset element.
class CosetGraph {
 public:
  // Members need not have index 3; quotients use this with g12 = G12*R.
  static CosetGraph build(const GeneratedGroup& parent, const GeneratedGroup& g1, const GeneratedGroup& g2,
                          const GeneratedGroup& g12, std::size_t vertex_cap = kVertexCap);
  static CosetGraph build(const Amalgam& a, std::size_t vertex_cap = kVertexCap);

  std::size_t left_size() const noexcept { return left_reps_.size(); }
  std::size_t right_size() const noexcept { return right_reps_.size(); }
  std::size_t vertex_count() const noexcept { return left_size() + right_size(); }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const noexcept { return edges_; }
  const std::vector<Permutation>& left_reps() const noexcept { return left_reps_; }
  const std::vector<Permutation>& right_reps() const noexcept { return right_reps_; }
  // Neighbours of each vertex, sorted.
  std::vector<std::vector<std::uint32_t>> adjacency() const;

  const GeneratedGroup& parent() const noexcept { return parent_; }
  const GeneratedGroup& g1() const noexcept { return g1_; }
  const GeneratedGroup& g2() const noexcept { return g2_; }
  const GeneratedGroup& g12() const noexcept { return g12_; }

  // Vertex permutation induced by an element of the parent.
  Permutation vertex_image(const Permutation& x) const;
  // Images of the parent's generators.
  const std::vector<Permutation>& action_images() const noexcept { return action_images_; }
  GeneratedGroup vertex_action() const;

  // One vertex per part: g1*R or g2*R is the whole parent.
  bool degenerate() const noexcept { return left_size() == 1 || right_size() == 1; }

 private:
  GeneratedGroup parent_, g1_, g2_, g12_;
  GeneratedGroup h1_, h2_;  // full-base copies for canonical representatives
  std::vector<Permutation> left_reps_, right_reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> left_index_, right_index_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<Permutation> action_images_;
};

// Largest normal subgroup of the parent inside g12, cross-checked against the
// order of the vertex action.
GeneratedGroup action_kernel(const CosetGraph& cg);

// Coset graph of (g1*R, g2*R, g12*R); r must be normal in the parent.
CosetGraph quotient(const CosetGraph& cg, const GeneratedGroup& r, std::size_t vertex_cap = kVertexCap);

// r normal: r meets g1 and g2 trivially, and every r-orbit on vertices has size |r|.
bool is_semiregular(const CosetGraph& cg, const GeneratedGroup& r);

// Largest normal subgroup of odd order.
GeneratedGroup odd_radical(const GeneratedGroup& g);

struct RegularNormalResult {
  GeneratedGroup subgroup;
  // False when the semiregular normal subgroups found do not multiply to a
  // semiregular one and a maximal one was chosen in scan order.
  bool unique = true;
  std::uint64_t odd_radical_order = 1;
  std::size_t candidates_scanned = 0;
};
RegularNormalResult max_regular_normal(const CosetGraph& cg, std::uint64_t scan_bound = 10000);

// {"parts": [n1, n2], "edges": [[u, v], ...]}, vertices 0-based with the left part first.
nlohmann::json graph_to_json(const CosetGraph& cg);
std::string graph_to_dot(const CosetGraph& cg, const std::string& name = "coset_graph");

}  // namespace semisym
