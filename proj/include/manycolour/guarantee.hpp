// Constructive lower-bound algorithms. Each takes an arbitrary colouring and
// returns a witness together with the exact bound it is asserted to meet.
#pragma once

#include "manycolour/core.hpp"
#include "manycolour/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace manycolour {

/// min{ 1 + s(n-1)/d, (1 - C(r-d-1,s)/C(r,s)) n }.
Rational lower_g_bound(std::uint32_t n, std::uint32_t r, std::uint32_t s, std::uint32_t d);

/// Valid d for best_colour_set_d: s <= d < r - s (empty when r <= 2s).
std::vector<std::uint32_t> valid_lower_g_degrees(std::uint32_t r, std::uint32_t s);

/// Case 1: a vertex sees at most d colours; take its s most frequent colours.
/// Case 2: every vertex sees more than d colours; take an s-set maximising
/// the touched vertices. Witness = all touched vertices, k = 0.
GuaranteeReport best_colour_set_d(const EdgeColouring& c, std::uint32_t s, std::uint32_t d);

/// n - n * prod_{i=1..s} (1 - i/(r-i+1)).
Rational augment_bound(std::uint32_t n, std::uint32_t r, std::uint32_t s);

/// Grows one component colour by colour; k = 1. Requires 1 <= s <= r/2.
GuaranteeReport greedy_augment(const EdgeColouring& c, std::uint32_t s);

struct DisjointExtraction {
  std::uint32_t j = 0;
  /// The sets whose size lies in [2^{j-1} n/(4r), 2^j n/(4r)].
  std::vector<VertexSet> chosen;
  /// Every set removed by the peeling, in removal order.
  std::vector<VertexSet> peeled;
  /// |chosen| >= ceil(r / (4^j log2 r)).
  bool certified = false;
};

/// Repeatedly removes a largest k-connected subgraph while one has more than
/// n/(2r) + 1 vertices, then picks the smallest dyadic size class j >= 2 that
/// is large enough. Requires r * |E(G)| >= C(n,2) and r >= 2.
DisjointExtraction extract_disjoint_kconnected(const SimpleGraph& g, std::uint32_t r, std::uint32_t k);

struct MatchingResult {
  Colour colour = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // k edges (a, b), a in A, b in B
};

/// Pairs sorted A with sorted B by rank and returns k edges of the most
/// frequent colour (lowest id on ties). Requires disjoint A, B with
/// |A| = |B| > r(k-1).
MatchingResult monochromatic_matching(const EdgeColouring& c, const VertexSet& a, const VertexSet& b,
                                      std::uint32_t k);

struct ContractionOptions {
  /// Reject n <= 16 r^2 (k-1) + 1 instead of reporting an uncertified witness.
  bool require_preconditions = true;
};

/// log2 log2 r - log2(4 + 3 log2 log2 r) >= s.
bool contraction_theorem_range(std::uint32_t r, std::uint32_t s);

/// Majority-colour extraction, contraction to super-vertices joined by
/// monochromatic k-matchings, repeated for up to s rounds. Status:
///   theorem        claimed 2^{s-2} n/r (inside the theorem range)
///   fallback       claimed 1 + (n-1)/r for k = 1, n/(2r) + 1 for k >= 2
///   not_certified  claimed 0 (n too small for k)
GuaranteeReport iterated_contraction(const EdgeColouring& c, std::uint32_t s, std::uint32_t k,
                                     ContractionOptions opts = {});

}  // namespace manycolour
