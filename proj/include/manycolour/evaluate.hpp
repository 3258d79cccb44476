// Exact evaluation of one colouring: components and touched vertices under a
// colour set, k-connectivity of a vertex set, and the max-over-s-subsets
// scores val_f, val_g and val_f_k.
//
// The subset maximisation runs as an OpenMP loop over subset ranks; the
// single-threaded versions in `reference` are kept as the test baseline.
#pragma once

#include "manycolour/core.hpp"
#include "manycolour/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace manycolour {

struct ComponentDecomposition {
  std::vector<std::uint32_t> labels;  // labels[v] = component id, ids ordered by smallest vertex
  std::vector<std::uint32_t> sizes;   // sizes[id]

  std::uint32_t largest() const;
};

/// Disjoint-set union over every pair whose colour lies in S.
ComponentDecomposition union_graph_components(const EdgeColouring& c, ColourSet s);

/// Vertices incident to at least one edge with colour in S.
VertexSet touched_vertices(const EdgeColouring& c, ColourSet s);

/// Whether the union graph of S induced on W is k-connected.
bool is_k_connected(const EdgeColouring& c, ColourSet s, std::span<const Vertex> w, std::uint32_t k);

struct Score {
  std::uint32_t value = 0;
  ColourSet colours;   // lexicographically smallest maximiser
  VertexSet witness;   // a vertex set attaining value under `colours`
  bool exact = true;
};

struct EvalOptions {
  /// Permit more than 10^8 colour subsets.
  bool allow_large = false;
};

inline constexpr std::uint64_t kSubsetGuard = 100'000'000;

/// max over |S| = s of the largest component of the union graph of S.
Score val_f(const EdgeColouring& c, std::uint32_t s, EvalOptions opts = {});
/// max over |S| = s of |touched_vertices(c, S)|.
Score val_g(const EdgeColouring& c, std::uint32_t s, EvalOptions opts = {});
/// max over |S| = s of the largest k-connected vertex set in the union graph of S.
Score val_f_k(const EdgeColouring& c, std::uint32_t s, std::uint32_t k, EvalOptions opts = {});

/// True when (value_a, colours_a) beats (value_b, colours_b): larger value,
/// then lexicographically smaller colour set.
bool better_score(std::uint32_t value_a, ColourSet a, std::uint32_t value_b, ColourSet b);

namespace reference {
Score val_f(const EdgeColouring& c, std::uint32_t s, EvalOptions opts = {});
Score val_g(const EdgeColouring& c, std::uint32_t s, EvalOptions opts = {});
Score val_f_k(const EdgeColouring& c, std::uint32_t s, std::uint32_t k, EvalOptions opts = {});
}  // namespace reference

}  // namespace manycolour
