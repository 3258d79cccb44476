// Small simple graphs and exact vertex-connectivity routines.
//
// Connectivity conventions (k = required level):
//   k = 0  W nonempty and no vertex of W is isolated
//   k = 1  W nonempty and connected (K_1 counts as connected)
//   k >= 2 |W| > k and no vertex cut of size < k
#pragma once

#include "manycolour/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace manycolour {

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::uint32_t n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n) {}

  std::uint32_t n() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  const std::vector<Vertex>& neighbours(Vertex v) const { return nbrs_[v]; }
  std::size_t degree(Vertex v) const { return nbrs_[v].size(); }
  std::size_t edge_count() const { return edges_; }

  /// Ignores loops and repeated edges.
  void add_edge(Vertex u, Vertex v);

  /// Induced subgraph; vertex i of the result is vertices[i].
  SimpleGraph induced(const VertexSet& vertices) const;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::size_t edges_ = 0;
};

/// Union graph of the colours in S, on all n vertices.
SimpleGraph union_graph(const EdgeColouring& c, ColourSet s);

/// Connected components as sorted vertex sets, ordered by smallest vertex.
std::vector<VertexSet> connected_components(const SimpleGraph& g);

/// Maximum number of internally vertex-disjoint s-t paths, stopping early at cap.
/// s and t must be distinct and non-adjacent.
std::uint32_t local_vertex_connectivity(const SimpleGraph& g, Vertex s, Vertex t, std::uint32_t cap);

/// A vertex cut of size < k if one exists (Even's pair scheme over the first k
/// vertices); nullopt when the graph is k-connected. Requires n > k.
std::optional<VertexSet> find_small_vertex_cut(const SimpleGraph& g, std::uint32_t k);

/// Whole-graph k-connectivity under the conventions above.
bool is_k_connected(const SimpleGraph& g, std::uint32_t k);

/// Every maximal k-connected vertex set (k >= 2) via k-core pruning and
/// recursive splitting on small cuts. Every k-connected subgraph lies inside
/// one returned set, so the largest one is exact.
std::vector<VertexSet> maximal_k_connected_sets(const SimpleGraph& g, std::uint32_t k);

/// Largest vertex set inducing a k-connected subgraph; ties go to the
/// lexicographically smallest set. Empty when none exists.
VertexSet largest_k_connected_subgraph(const SimpleGraph& g, std::uint32_t k);

}  // namespace manycolour
