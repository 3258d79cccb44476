// Generators for the upper-bound colourings and the certificate hypergraphs.
#pragma once

#include "manycolour/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace manycolour {

/// Near-equal partition of n vertices into m parts; the first n mod m parts
/// get ceil(n/m). Vertices are assigned to parts in consecutive runs.
struct BlowupSpec {
  EdgeColouring base;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> part_sizes;

  static BlowupSpec make(EdgeColouring base, std::uint32_t n);
  /// Part index of every blown-up vertex.
  std::vector<std::uint32_t> part_of() const;
};

std::vector<std::uint32_t> near_equal_parts(std::uint32_t n, std::uint32_t m);

/// Cross edges copy the base edge colour; an edge inside part i takes the
/// smallest colour on a base edge at vertex i.
EdgeColouring blow_up(const BlowupSpec& spec);

/// Z_2^d difference colouring of K_{2^d} (colour of xy is the id of x XOR y,
/// nonzero vector v -> id v-1), blown up to n vertices. r = 2^d - 1.
EdgeColouring cube_colouring(std::uint32_t d, std::uint32_t n);

/// Points and lines of PG(2,p) for prime p: p^2+p+1 vertices, as many edges.
Hypergraph projective_plane_hypergraph(std::uint32_t p);

/// Parts A_e, one per edge, sizes near-equal; a pair in A_e x A_f gets the
/// smallest colour of e ∩ f. Throws DomainError naming a disjoint edge pair.
EdgeColouring hypergraph_colouring(const Hypergraph& h, std::uint32_t n);

/// All C(r,u) u-subsets in lexicographic order.
Hypergraph complete_uniform_hypergraph(std::uint32_t r, std::uint32_t u);

struct CatalogueEntry {
  std::string name;
  std::string description;
  /// Subset size m and the minimum number of edges every m-subset contains,
  /// re-verified whenever the entry is loaded.
  std::uint32_t subset_size = 0;
  std::uint64_t min_edges = 0;
};

const std::vector<CatalogueEntry>& catalogue_entries();
/// Throws DomainError for unknown names or if re-verification fails.
Hypergraph certificate_catalogue(const std::string& name);

struct RandomBaseResult {
  EdgeColouring colouring;
  EdgeColouring base;
  std::uint32_t base_value = 0;  // val_f(base, s)
  std::uint32_t threshold = 0;   // ceil((s+1) log2 r)
  std::uint32_t draws = 0;
};

/// Uniform random r-colouring of K_m, m = floor(r/(6s)), resampled until
/// val_f(base, s) < ceil((s+1) log2 r), then blown up to n vertices.
RandomBaseResult random_base_blowup(std::uint32_t r, std::uint32_t s, std::uint32_t n, std::uint64_t seed,
                                    std::uint32_t max_draws = 1000);

}  // namespace manycolour
