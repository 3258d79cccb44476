#include "manycolour/construct.hpp"

#include "manycolour/evaluate.hpp"
#include "manycolour/hypergraph.hpp"
#include "manycolour/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace manycolour {

std::vector<std::uint32_t> near_equal_parts(std::uint32_t n, std::uint32_t m) {
  if (m == 0) throw DomainError("cannot partition into zero parts");
  std::vector<std::uint32_t> sizes(m, n / m);
  for (std::uint32_t i = 0; i < n % m; ++i) ++sizes[i];
  return sizes;
}

BlowupSpec BlowupSpec::make(EdgeColouring base, std::uint32_t n) {
  if (n < base.n()) throw DomainError("blow-up target n must be at least the base size");
  BlowupSpec spec;
  spec.part_sizes = near_equal_parts(n, base.n());
  spec.n = n;
  spec.base = std::move(base);
  return spec;
}

std::vector<std::uint32_t> BlowupSpec::part_of() const {
  std::vector<std::uint32_t> out;
  out.reserve(n);
  for (std::uint32_t part = 0; part < part_sizes.size(); ++part) out.insert(out.end(), part_sizes[part], part);
  return out;
}

EdgeColouring blow_up(const BlowupSpec& spec) {
  const EdgeColouring& base = spec.base;
  std::vector<Colour> internal(base.n(), 0);
  for (Vertex i = 0; i < base.n(); ++i) {
    Colour smallest = base.r();
    for (Vertex j = 0; j < base.n(); ++j)
      if (j != i) smallest = std::min(smallest, base.colour(i, j));
    internal[i] = smallest == base.r() ? 0 : smallest;  // single-vertex base: colour 0
  }
  const auto part = spec.part_of();
  EdgeColouring out(spec.n, base.r());
  for_each_pair(spec.n, [&](Vertex u, Vertex v, std::size_t) {
    const auto pu = part[u], pv = part[v];
    out.set(u, v, pu == pv ? internal[pu] : base.colour(pu, pv));
  });
  return out;
}

EdgeColouring cube_colouring(std::uint32_t d, std::uint32_t n) {
  if (d < 1 || d > 6) throw DomainError("cube colouring needs 1 <= d <= 6 (r = 2^d - 1 <= 63)");
  const std::uint32_t points = 1U << d;
  if (n < points) throw DomainError("cube colouring needs n >= 2^d = " + std::to_string(points));
  EdgeColouring base(points, points - 1);
  for_each_pair(points, [&](Vertex x, Vertex y, std::size_t) { base.set(x, y, (x ^ y) - 1); });
  return blow_up(BlowupSpec::make(std::move(base), n));
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

Hypergraph projective_plane_hypergraph(std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("projective plane order must be prime (prime powers are unsupported), got " +
                                      std::to_string(p));
  const std::uint32_t count = p * p + p + 1;
  if (count > kMaxColours) throw DomainError("PG(2," + std::to_string(p) + ") has more than 64 points");
  // Normalised homogeneous coordinates: first nonzero entry equals 1.
  std::vector<std::array<std::uint32_t, 3>> points;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c) {
        const std::uint32_t lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) points.push_back({a, b, c});
      }
  std::vector<ColourSet> lines;
  for (const auto& line : points) {
    ColourSet edge;
    for (std::uint32_t i = 0; i < points.size(); ++i) {
      const auto& pt = points[i];
      if ((line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2]) % p == 0) edge.insert(i);
    }
    lines.push_back(edge);
  }
  return Hypergraph(count, std::move(lines));
}

EdgeColouring hypergraph_colouring(const Hypergraph& h, std::uint32_t n) {
  const auto m = static_cast<std::uint32_t>(h.edge_count());
  if (m == 0) throw DomainError("hypergraph has no edges");
  if (n < m) throw DomainError("need n >= |E(H)| = " + std::to_string(m));
  const auto check = is_intersecting(h);
  if (!check.intersecting) {
    const auto [i, j] = *check.disjoint_pair;
    throw DomainError("hypergraph is not intersecting: edges " + std::to_string(i) + " and " + std::to_string(j) +
                      " are disjoint");
  }
  const auto sizes = near_equal_parts(n, m);
  std::vector<std::uint32_t> part;
  for (std::uint32_t e = 0; e < m; ++e) part.insert(part.end(), sizes[e], e);
  const auto& edges = h.edges();
  EdgeColouring out(n, h.r());
  for_each_pair(n, [&](Vertex u, Vertex v, std::size_t) { out.set(u, v, (edges[part[u]] & edges[part[v]]).min()); });
  return out;
}

Hypergraph complete_uniform_hypergraph(std::uint32_t r, std::uint32_t u) {
  if (u < 1 || u > r) throw DomainError("complete uniform hypergraph needs 1 <= u <= r");
  if (binomial(r, u) > 10'000'000) throw DomainError("C(r,u) is too large to materialise");
  std::vector<ColourSet> edges;
  std::vector<std::uint32_t> idx(u);
  std::iota(idx.begin(), idx.end(), 0U);
  for (;;) {
    edges.push_back(ColourSet::from_vector(idx));
    // Advance to the next combination in lexicographic order.
    std::int64_t i = static_cast<std::int64_t>(u) - 1;
    while (i >= 0 && idx[i] == r - u + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < u; ++j) idx[j] = idx[j - 1] + 1;
  }
  return Hypergraph(r, std::move(edges));
}

namespace {

// 1-indexed digit strings as printed in the literature, e.g. "145".
Hypergraph from_digit_strings(std::uint32_t r, std::initializer_list<const char*> edges) {
  std::vector<ColourSet> out;
  for (const char* e : edges) {
    ColourSet set;
    for (const char* ch = e; *ch; ++ch) set.insert(static_cast<Colour>(*ch - '1'));
    out.push_back(set);
  }
  return Hypergraph(r, std::move(out));
}

Hypergraph fano_minus_vertex() {
  const Hypergraph fano = projective_plane_hypergraph(2);
  std::vector<ColourSet> edges;
  for (const auto& e : fano.edges())
    if (!e.contains(6)) edges.push_back(e);
  return Hypergraph(6, std::move(edges));
}

Hypergraph build_entry(const std::string& name) {
  if (name == "fano") return projective_plane_hypergraph(2);
  if (name == "fano_minus_vertex") return fano_minus_vertex();
  if (name == "g519") return from_digit_strings(5, {"145", "145", "145", "234", "234", "235", "235", "12", "13"});
  if (name == "g6210")
    return from_digit_strings(6, {"123", "124", "346", "345", "256", "135", "245", "236", "146", "156"});
  if (name == "complete_5_3") return complete_uniform_hypergraph(5, 3);
  if (name == "complete_7_4") return complete_uniform_hypergraph(7, 4);
  throw DomainError("unknown catalogue entry '" + name + "'");
}

}  // namespace

const std::vector<CatalogueEntry>& catalogue_entries() {
  static const std::vector<CatalogueEntry> entries = {
      {"g519", "5 vertices, edges 145x3 234x2 235x2 12 13; certifies g(n,5,1) <= 5n/9", 4, 4},
      {"fano_minus_vertex", "Fano plane without one point; certifies g(n,6,1) <= n/2", 5, 2},
      {"g6210", "6 vertices, 10 triples; certifies g(n,6,2) <= 4n/5", 4, 2},
      {"fano", "PG(2,2); certifies g(n,7,1) <= 3n/7 and g(n,7,2) <= 5n/7", 6, 4},
      {"complete_5_3", "all triples of 5 points; certifies g(n,5,2) <= ceil(9n/10)", 3, 1},
      {"complete_7_4", "all 4-sets of 7 points; certifies g(n,7,3) <= ceil(34n/35)", 4, 1},
  };
  return entries;
}

Hypergraph certificate_catalogue(const std::string& name) {
  const auto& entries = catalogue_entries();
  const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw DomainError("unknown catalogue entry '" + name + "'");
  Hypergraph h = build_entry(name);
  if (!is_intersecting(h).intersecting) throw std::logic_error("catalogue entry '" + name + "' is not intersecting");
  const auto worst = min_edges_in_subsets(h, it->subset_size);
  if (worst.t < it->min_edges)
    throw std::logic_error("catalogue entry '" + name + "' fails its subset edge-count certificate");
  return h;
}

RandomBaseResult random_base_blowup(std::uint32_t r, std::uint32_t s, std::uint32_t n, std::uint64_t seed,
                                    std::uint32_t max_draws) {
  if (r > kMaxColours) throw DomainError("at most 64 colours are supported");
  if (s < 2 || s > r) throw DomainError("random base blow-up needs 2 <= s <= r");
  const std::uint32_t m = r / (6 * s);
  if (m < 2)
    throw DomainError("base size m = floor(r/(6s)) = " + std::to_string(m) + " must be at least 2");
  if (n < m) throw DomainError("random base blow-up needs n >= m = " + std::to_string(m));
  const auto threshold =
      static_cast<std::uint32_t>(std::ceil(static_cast<long double>(s + 1) * std::log2(static_cast<long double>(r))));

  SplitMix64 rng = SplitMix64::stream(seed, 0);
  RandomBaseResult out;
  std::uint32_t best_value = ~0U;
  for (std::uint32_t draw = 1; draw <= max_draws; ++draw) {
    EdgeColouring base(m, r);
    for_each_pair(m, [&](Vertex u, Vertex v, std::size_t) { base.set(u, v, static_cast<Colour>(rng.below(r))); });
    const std::uint32_t value = reference::val_f(base, std::min(s, r)).value;
    best_value = std::min(best_value, value);
    if (value < threshold) {
      out.base = base;
      out.base_value = value;
      out.threshold = threshold;
      out.draws = draw;
      out.colouring = blow_up(BlowupSpec::make(std::move(base), n));
      return out;
    }
  }
  throw DomainError("no base colouring below threshold " + std::to_string(threshold) + " after " +
                    std::to_string(max_draws) + " draws; best draw had val_f = " + std::to_string(best_value));
}

}  // namespace manycolour
