// Test-side helpers: seeded random inputs and brute-force oracles that share
// no code with the library algorithms they check.
#pragma once

#include "manycolour/core.hpp"
#include "manycolour/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace testkit {

using namespace manycolour;

inline EdgeColouring random_colouring(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, 0xC0105);
  std::vector<std::uint8_t> colours(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (auto& col : colours) col = static_cast<std::uint8_t>(rng.below(r));
  return EdgeColouring(n, r, std::move(colours));
}

/// Adjacency as bitmasks, for graphs on at most 32 vertices.
struct BitGraph {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> adj;

  explicit BitGraph(std::uint32_t n_) : n(n_), adj(n_, 0) {}
  void add(std::uint32_t u, std::uint32_t v) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
};

inline BitGraph colour_graph(const EdgeColouring& c, ColourSet s) {
  BitGraph g(c.n());
  for (std::uint32_t u = 0; u < c.n(); ++u)
    for (std::uint32_t v = u + 1; v < c.n(); ++v)
      if (s.contains(c.colour(u, v))) g.add(u, v);
  return g;
}

/// Connected within the vertex mask `alive` (nonempty mask required).
inline bool connected_within(const BitGraph& g, std::uint32_t alive) {
  if (alive == 0) return false;
  std::uint32_t seen = alive & (~alive + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::uint32_t v = 0; v < g.n; ++v)
      if ((seen >> v) & 1U) {
        const std::uint32_t add = g.adj[v] & alive & ~seen;
        if (add) {
          seen |= add;
          grew = true;
        }
      }
  }
  return seen == alive;
}

/// k-connectivity of G[W] by enumerating every vertex cut of size < k.
inline bool k_connected_brute(const BitGraph& g, std::uint32_t w, std::uint32_t k) {
  const auto size = static_cast<std::uint32_t>(__builtin_popcount(w));
  if (size == 0) return false;
  if (k == 0) {
    for (std::uint32_t v = 0; v < g.n; ++v)
      if (((w >> v) & 1U) && (g.adj[v] & w) == 0) return false;
    return true;
  }
  if (k == 1) return connected_within(g, w);
  if (size <= k) return false;
  // Every subset C of W with |C| < k must leave W \ C connected.
  for (std::uint32_t cut = w;; cut = (cut - 1) & w) {
    if (static_cast<std::uint32_t>(__builtin_popcount(cut)) < k && !connected_within(g, w & ~cut)) return false;
    if (cut == 0) break;
  }
  return true;
}

/// Largest k-connected vertex subset (lexicographically smallest on ties), as a sorted list.
inline std::vector<std::uint32_t> largest_k_connected_brute(const BitGraph& g, std::uint32_t k) {
  std::vector<std::uint32_t> best;
  for (std::uint32_t w = 1; w < (1U << g.n); ++w) {
    if (!k_connected_brute(g, w, k)) continue;
    std::vector<std::uint32_t> set;
    for (std::uint32_t v = 0; v < g.n; ++v)
      if ((w >> v) & 1U) set.push_back(v);
    if (set.size() > best.size() || (set.size() == best.size() && set < best)) best = set;
  }
  return best;
}

/// All colour subsets of the given size, each as an ascending list.
inline std::vector<std::vector<Colour>> all_subsets(std::uint32_t r, std::uint32_t s) {
  std::vector<std::vector<Colour>> out;
  for (std::uint64_t m = 0; m < (1ULL << r); ++m)
    if (static_cast<std::uint32_t>(__builtin_popcountll(m)) == s) {
      std::vector<Colour> v;
      for (Colour c = 0; c < r; ++c)
        if ((m >> c) & 1ULL) v.push_back(c);
      out.push_back(v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline ColourSet to_set(const std::vector<Colour>& v) {
  ColourSet s;
  for (auto c : v) s.insert(c);
  return s;
}

/// Largest component size by repeated flood fill.
inline std::uint32_t largest_component_brute(const EdgeColouring& c, ColourSet s) {
  const BitGraph g = colour_graph(c, s);
  std::uint32_t best = 0;
  std::vector<int> label(c.n(), -1);
  for (std::uint32_t root = 0; root < c.n(); ++root) {
    if (label[root] >= 0) continue;
    std::vector<std::uint32_t> stack{root};
    label[root] = static_cast<int>(root);
    std::uint32_t size = 0;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      ++size;
      for (std::uint32_t w = 0; w < c.n(); ++w)
        if (w != v && s.contains(c.colour(v, w)) && label[w] < 0) {
          label[w] = static_cast<int>(root);
          stack.push_back(w);
        }
    }
    best = std::max(best, size);
  }
  return best;
}

inline std::uint32_t touched_brute(const EdgeColouring& c, ColourSet s) {
  std::uint32_t count = 0;
  for (std::uint32_t v = 0; v < c.n(); ++v) {
    bool hit = false;
    for (std::uint32_t w = 0; w < c.n() && !hit; ++w) hit = w != v && s.contains(c.colour(v, w));
    count += hit;
  }
  return count;
}

/// Dimension over GF(2) of the span of the given nonzero vectors.
inline std::uint32_t span_dimension(std::vector<std::uint32_t> vectors) {
  std::uint32_t rank = 0;
  for (std::uint32_t bit = 32; bit-- > 0;) {
    auto pivot = std::find_if(vectors.begin(), vectors.end(), [&](auto v) { return (v >> bit) & 1U; });
    if (pivot == vectors.end()) continue;
    const auto p = *pivot;
    vectors.erase(pivot);
    for (auto& v : vectors)
      if ((v >> bit) & 1U) v ^= p;
    ++rank;
  }
  return rank;
}

}  // namespace testkit
