#include "manycolour/hypergraph.hpp"

#include "manycolour/rng.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace manycolour {

IntersectionCheck is_intersecting(const Hypergraph& h) {
  const auto& e = h.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j)
      if (!e[i].intersects(e[j])) return IntersectionCheck{false, std::make_pair(i, j)};
  return {};
}

namespace {

// Distinct edges with no proper subset among them: a set hitting these hits all.
std::vector<std::uint64_t> minimal_edges(const Hypergraph& h) {
  std::vector<std::uint64_t> masks;
  for (const auto& e : h.edges()) masks.push_back(e.bits());
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> out;
  for (auto m : masks)
    if (std::none_of(out.begin(), out.end(), [&](std::uint64_t kept) { return (kept & ~m) == 0; }))
      out.push_back(m);
  return out;
}

class CoverSearch {
 public:
  bool coverable(const std::vector<std::uint64_t>& edges, std::uint32_t budget) {
    if (edges.empty()) return true;
    if (budget == 0) return false;
    if (packing_bound(edges) > budget) return false;
    auto it = failed_.find(edges);
    if (it != failed_.end() && it->second >= budget) return false;
    // Edges are kept sorted by size, so edges.front() is a smallest one.
    for (std::uint64_t rest = edges.front(); rest != 0; rest &= rest - 1) {
      const std::uint64_t v = rest & (~rest + 1);
      std::vector<std::uint64_t> next;
      for (auto e : edges)
        if (!(e & v)) next.push_back(e);
      if (coverable(next, budget - 1)) return true;
    }
    auto& slot = failed_[edges];
    slot = std::max(slot, budget);
    return false;
  }

  // Greedy set of pairwise disjoint edges; each needs its own cover vertex.
  static std::uint32_t packing_bound(const std::vector<std::uint64_t>& edges) {
    std::uint64_t used = 0;
    std::uint32_t count = 0;
    for (auto e : edges)
      if (!(e & used)) {
        used |= e;
        ++count;
      }
    return count;
  }

 private:
  std::map<std::vector<std::uint64_t>, std::uint32_t> failed_;
};

void check_subset_args(const Hypergraph& h, std::uint32_t m, GuardOptions opts) {
  if (m > h.r()) throw DomainError("subset size m must satisfy 0 <= m <= r");
  if (!opts.allow_large && binomial(h.r(), m) > kHyperSubsetGuard)
    throw DomainError("C(r,m) exceeds 10^8 subsets; pass allow_large to override");
}

struct WeightedEdges {
  std::vector<std::uint64_t> masks;
  std::vector<std::uint64_t> counts;

  explicit WeightedEdges(const Hypergraph& h) {
    std::map<std::uint64_t, std::uint64_t> tally;
    for (const auto& e : h.edges()) ++tally[e.bits()];
    for (const auto& [mask, count] : tally) {
      masks.push_back(mask);
      counts.push_back(count);
    }
  }

  std::uint64_t inside(std::uint64_t w) const {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if ((masks[i] & ~w) == 0) total += counts[i];
    return total;
  }
};

SubsetMinimum empty_subset_minimum() { return SubsetMinimum{0, ColourSet()}; }

}  // namespace

std::uint32_t cover_number(const Hypergraph& h, GuardOptions opts) {
  if (h.edge_count() == 0) throw DomainError("cover number needs at least one edge");
  if (!opts.allow_large && h.r() > 40 && h.edge_count() > 10'000)
    throw DomainError("cover number guard: r > 40 and more than 10^4 edges; pass allow_large to override");
  const auto edges = minimal_edges(h);
  CoverSearch search;
  for (std::uint32_t budget = CoverSearch::packing_bound(edges);; ++budget)
    if (search.coverable(edges, budget)) return budget;
}

SubsetMinimum min_edges_in_subsets(const Hypergraph& h, std::uint32_t m, GuardOptions opts) {
  check_subset_args(h, m, opts);
  if (m == 0) return empty_subset_minimum();
  const WeightedEdges edges(h);
  const std::uint64_t total = binomial(h.r(), m);
  SubsetMinimum best{~0ULL, ColourSet()};
  std::uint64_t best_rank = ~0ULL;
#pragma omp parallel
  {
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = total * tid / threads;
    const std::uint64_t end = total * (tid + 1) / threads;
    std::uint64_t local_t = ~0ULL, local_mask = 0, local_rank = ~0ULL;
    if (begin < end) {
      std::uint64_t mask = unrank_subset(begin, h.r(), m);
      for (std::uint64_t i = begin; i < end; ++i) {
        const auto t = edges.inside(mask);
        if (t < local_t) {
          local_t = t;
          local_mask = mask;
          local_rank = i;
        }
        if (i + 1 < end) mask = next_subset(mask);
      }
    }
#pragma omp critical(manycolour_hyper_merge)
    {
      if (local_rank != ~0ULL && (local_t < best.t || (local_t == best.t && local_rank < best_rank))) {
        best = SubsetMinimum{local_t, ColourSet(local_mask)};
        best_rank = local_rank;
      }
    }
  }
  return best;
}

namespace reference {

SubsetMinimum min_edges_in_subsets(const Hypergraph& h, std::uint32_t m, GuardOptions opts) {
  check_subset_args(h, m, opts);
  if (m == 0) return empty_subset_minimum();
  const WeightedEdges edges(h);
  const std::uint64_t total = binomial(h.r(), m);
  SubsetMinimum best{~0ULL, ColourSet()};
  std::uint64_t mask = unrank_subset(0, h.r(), m);
  for (std::uint64_t i = 0; i < total; ++i) {
    const auto t = edges.inside(mask);
    if (t < best.t) best = SubsetMinimum{t, ColourSet(mask)};
    if (i + 1 < total) mask = next_subset(mask);
  }
  return best;
}

}  // namespace reference

UniformSample uniform_intersecting_sample(std::uint32_t r, std::uint32_t s, std::uint64_t seed,
                                          UniformSampleOptions opts) {
  if (r < 2 || r > kMaxColours) throw DomainError("uniform sampler needs 2 <= r <= 64");
  if (s < 1 || s >= r) throw DomainError("uniform sampler needs 1 <= s < r");
  UniformSample out;
  out.u = opts.u.value_or(8 * s);
  if (out.u < 1 || out.u > r)
    throw DomainError("uniformity u = " + std::to_string(out.u) + " must satisfy 1 <= u <= r");
  if (opts.m) {
    out.m = *opts.m;
  } else {
    const long double expected = std::exp(static_cast<long double>(out.u) * out.u / (2.0L * r));
    if (expected > 1e7L) throw DomainError("default edge count e^{u^2/(2r)} exceeds 10^7; pass m explicitly");
    out.m = static_cast<std::uint64_t>(std::floor(expected));
  }
  if (out.m < 1) throw DomainError("edge count m must be at least 1");

  SplitMix64 rng = SplitMix64::stream(seed, 0);
  std::vector<Colour> pool(r);
  std::vector<ColourSet> edges;
  edges.reserve(out.m);
  for (std::uint64_t e = 0; e < out.m; ++e) {
    for (Colour i = 0; i < r; ++i) pool[i] = i;
    ColourSet edge;
    for (std::uint32_t i = 0; i < out.u; ++i) {
      const auto j = i + static_cast<std::uint32_t>(rng.below(r - i));
      std::swap(pool[i], pool[j]);
      edge.insert(pool[i]);
    }
    edges.push_back(edge);
  }
  out.hypergraph = Hypergraph(r, std::move(edges));
  out.intersecting = is_intersecting(out.hypergraph).intersecting;
  out.cover_exceeds_s = cover_number(out.hypergraph) > s;
  return out;
}

Hypergraph exclusion_sample(std::uint32_t r, std::uint32_t x, std::uint64_t seed) {
  if (x < 1 || r > kMaxColours) throw DomainError("exclusion sampler needs x >= 1 and r <= 64");
  if (r < 2 * x) throw DomainError("exclusion sampler needs r - x >= x so that p = 1/C(r-x,x) <= 1");
  if (r == 2 * x)
    throw DomainError("r = 2x gives p = 1: every x-set fires, every one has a fired complement, so no edge survives");
  const std::uint64_t total = binomial(r, x);
  if (total > 1'000'000) throw DomainError("C(r,x) exceeds the 10^6 enumeration guard");
  const std::uint64_t inverse_p = binomial(r - x, x);

  SplitMix64 rng = SplitMix64::stream(seed, 0);
  std::vector<std::uint64_t> fired;
  std::uint64_t mask = unrank_subset(0, r, x);
  for (std::uint64_t i = 0; i < total; ++i) {
    if (rng.below(inverse_p) == 0) fired.push_back(mask);
    if (i + 1 < total) mask = next_subset(mask);
  }
  std::vector<ColourSet> edges;
  for (auto a : fired)
    if (std::all_of(fired.begin(), fired.end(), [&](std::uint64_t b) { return (a & b) != 0; }))
      edges.emplace_back(a);
  return Hypergraph(r, std::move(edges));
}

std::vector<Hypergraph> exclusion_sample_batch(std::uint32_t r, std::uint32_t x, std::uint64_t first_seed,
                                               std::uint32_t count) {
  exclusion_sample(r, x, first_seed);  // validate once, outside the parallel region
  std::vector<Hypergraph> out(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i)
    out[i] = exclusion_sample(r, x, first_seed + static_cast<std::uint64_t>(i));
  return out;
}

std::vector<UniformSample> uniform_sample_batch(std::uint32_t r, std::uint32_t s, std::uint64_t first_seed,
                                                std::uint32_t count, UniformSampleOptions opts) {
  if (count == 0) return {};
  std::vector<UniformSample> out(count);
  out[0] = uniform_intersecting_sample(r, s, first_seed, opts);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(count); ++i)
    out[i] = uniform_intersecting_sample(r, s, first_seed + static_cast<std::uint64_t>(i), opts);
  return out;
}

namespace reference {

std::vector<Hypergraph> exclusion_sample_batch(std::uint32_t r, std::uint32_t x, std::uint64_t first_seed,
                                               std::uint32_t count) {
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) out.push_back(exclusion_sample(r, x, first_seed + i));
  return out;
}

}  // namespace reference

Rational double_count_lower_bound(std::uint32_t r, std::uint32_t s, std::uint32_t u) {
  if (u < 1 || s > r || u > r - s) throw DomainError("double-count bound needs 1 <= u <= r - s");
  const auto num = binomial(r, s);
  const auto den = binomial(r - u, s);
  if (num > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("C(r,s) exceeds the rational range");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace manycolour
