// Checkers and samplers for multi-hypergraphs on the colour set: intersecting
// test, exact cover number, minimum edge count inside m-subsets, the uniform
// and exclusion random samplers, and the double-counting edge bound.
#pragma once

#include "manycolour/core.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace manycolour {

struct IntersectionCheck {
  bool intersecting = true;
  /// Indices (i < j) of the first disjoint edge pair in index order.
  std::optional<std::pair<std::size_t, std::size_t>> disjoint_pair;
};

/// Every two edges, duplicate copies included, share a vertex.
IntersectionCheck is_intersecting(const Hypergraph& h);

struct GuardOptions {
  bool allow_large = false;
};

/// Minimum number of vertices meeting every edge. Exact branch and bound;
/// refuses r > 40 with more than 10^4 edges unless allow_large.
std::uint32_t cover_number(const Hypergraph& h, GuardOptions opts = {});

struct SubsetMinimum {
  std::uint64_t t = 0;  // edges (with multiplicity) inside the worst subset
  ColourSet worst;      // first minimiser in increasing-bitmask order
};

inline constexpr std::uint64_t kHyperSubsetGuard = 100'000'000;

/// Minimum over all m-subsets W of the number of edges contained in W.
SubsetMinimum min_edges_in_subsets(const Hypergraph& h, std::uint32_t m, GuardOptions opts = {});

struct UniformSampleOptions {
  std::optional<std::uint32_t> u;  // default 8s
  std::optional<std::uint64_t> m;  // default floor(e^{u^2/(2r)})
};

struct UniformSample {
  Hypergraph hypergraph;
  std::uint32_t u = 0;
  std::uint64_t m = 0;
  bool intersecting = false;
  /// Every (r-s)-subset contains an edge, i.e. cover number > s.
  bool cover_exceeds_s = false;

  bool success() const { return intersecting && cover_exceeds_s; }
};

/// m independent uniform u-subsets of 0..r-1, then both checks run exactly.
UniformSample uniform_intersecting_sample(std::uint32_t r, std::uint32_t s, std::uint64_t seed,
                                          UniformSampleOptions opts = {});

/// Each x-subset X fires with probability p = 1/C(r-x,x); X becomes an edge
/// when it fired and no fired x-subset is disjoint from it. Edges are listed
/// in increasing-bitmask order. Requires r > 2x and C(r,x) <= 10^6.
Hypergraph exclusion_sample(std::uint32_t r, std::uint32_t x, std::uint64_t seed);

/// exclusion_sample for seeds first_seed, first_seed+1, ..., in that order.
std::vector<Hypergraph> exclusion_sample_batch(std::uint32_t r, std::uint32_t x, std::uint64_t first_seed,
                                               std::uint32_t count);
std::vector<UniformSample> uniform_sample_batch(std::uint32_t r, std::uint32_t s, std::uint64_t first_seed,
                                                std::uint32_t count, UniformSampleOptions opts = {});

/// C(r,s)/C(r-u,s): fewest edges a u-uniform H can have when every
/// (r-s)-subset contains an edge. Requires 1 <= u <= r - s.
Rational double_count_lower_bound(std::uint32_t r, std::uint32_t s, std::uint32_t u);

namespace reference {
SubsetMinimum min_edges_in_subsets(const Hypergraph& h, std::uint32_t m, GuardOptions opts = {});
std::vector<Hypergraph> exclusion_sample_batch(std::uint32_t r, std::uint32_t x, std::uint64_t first_seed,
                                               std::uint32_t count);
}  // namespace reference

}  // namespace manycolour
