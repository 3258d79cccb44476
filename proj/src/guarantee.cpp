#include "manycolour/guarantee.hpp"

#include "manycolour/evaluate.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace manycolour {

namespace {

using BigRational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact when numerator and denominator fit in 64 bits; otherwise rounded
// down to a multiple of 2^-20, which keeps the value a valid lower bound.
Rational to_machine(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  const BigInt limit = std::numeric_limits<std::int64_t>::max();
  if (abs(num) <= limit && den <= limit) return Rational(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
  const std::int64_t scale = std::int64_t{1} << 20;
  BigInt scaled = num * scale / den;
  if (num < 0 && scaled * den != num * scale) scaled -= 1;
  if (abs(scaled) > limit) throw DomainError("bound exceeds the exact rational range");
  return Rational(scaled.convert_to<std::int64_t>(), scale);
}

BigRational big_binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  BigInt out = 1;
  for (std::uint32_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return BigRational(out);
}

VertexSet sorted_copy(VertexSet v) {
  std::sort(v.begin(), v.end());
  return v;
}

VertexSet component_of(const EdgeColouring& c, ColourSet s, Vertex v) {
  const auto dec = union_graph_components(c, s);
  VertexSet out;
  for (Vertex w = 0; w < c.n(); ++w)
    if (dec.labels[w] == dec.labels[v]) out.push_back(w);
  return out;
}

void verify_witness(const EdgeColouring& c, const GuaranteeReport& rep, const char* who) {
  if (rep.witness_vertices.empty()) return;
  if (!is_k_connected(c, rep.colours, rep.witness_vertices, rep.k))
    throw std::logic_error(std::string(who) + ": witness failed re-verification");
}

// Touched-vertex counts from per-colour incidence bitsets.
class TouchedCounter {
 public:
  explicit TouchedCounter(const EdgeColouring& c) : words_((c.n() + 63) / 64), rows_(c.r() * words_, 0) {
    const auto raw = c.raw();
    for_each_pair(c.n(), [&](Vertex u, Vertex v, std::size_t rank) {
      std::uint64_t* row = &rows_[raw[rank] * words_];
      row[u / 64] |= 1ULL << (u % 64);
      row[v / 64] |= 1ULL << (v % 64);
    });
  }

  std::uint32_t operator()(ColourSet s) const {
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = 0;
      for (Colour col : s.to_vector()) acc |= rows_[col * words_ + w];
      total += static_cast<std::uint32_t>(std::popcount(acc));
    }
    return total;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

ColourSet greedy_touched_set(const EdgeColouring& c, std::uint32_t s) {
  const TouchedCounter touched(c);
  ColourSet chosen;
  for (std::uint32_t step = 0; step < s; ++step) {
    Colour best = 0;
    std::int64_t best_value = -1;
    for (Colour col = 0; col < c.r(); ++col) {
      if (chosen.contains(col)) continue;
      ColourSet trial = chosen;
      trial.insert(col);
      const std::int64_t value = touched(trial);
      if (value > best_value) {
        best_value = value;
        best = col;
      }
    }
    chosen.insert(best);
  }
  // Single-swap local search until no swap strictly improves.
  std::uint32_t current = touched(chosen);
  for (bool improved = true; improved;) {
    improved = false;
    for (Colour out : chosen.to_vector()) {
      for (Colour in = 0; in < c.r() && !improved; ++in) {
        if (chosen.contains(in)) continue;
        ColourSet trial = chosen;
        trial.erase(out);
        trial.insert(in);
        const auto value = touched(trial);
        if (value > current) {
          chosen = trial;
          current = value;
          improved = true;
        }
      }
      if (improved) break;
    }
  }
  return chosen;
}

}  // namespace

std::vector<std::uint32_t> valid_lower_g_degrees(std::uint32_t r, std::uint32_t s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t d = s; d + s < r; ++d) out.push_back(d);
  return out;
}

Rational lower_g_bound(std::uint32_t n, std::uint32_t r, std::uint32_t s, std::uint32_t d) {
  if (s < 1 || d < s || d + s >= r) throw DomainError("need s <= d < r - s");
  const BigRational star = 1 + BigRational(BigInt(s) * (n - 1), BigInt(d));
  const BigRational random = (1 - big_binomial(r - d - 1, s) / big_binomial(r, s)) * n;
  return to_machine(std::min(star, random));
}

GuaranteeReport best_colour_set_d(const EdgeColouring& c, std::uint32_t s, std::uint32_t d) {
  const std::uint32_t n = c.n(), r = c.r();
  if (n < 2) throw DomainError("best_colour_set_d needs n >= 2");
  if (s < 1 || d < s || d + s >= r)
    throw DomainError("best_colour_set_d needs 1 <= s <= d < r - s (s=" + std::to_string(s) +
                      ", d=" + std::to_string(d) + ", r=" + std::to_string(r) + ")");
  GuaranteeReport rep;
  rep.k = 0;
  rep.claimed_bound = lower_g_bound(n, r, s, d);
  rep.status = BoundStatus::kTheorem;

  // Case 1: a vertex seeing at most d colours.
  std::vector<std::uint32_t> freq(r);
  for (Vertex v = 0; v < n; ++v) {
    std::fill(freq.begin(), freq.end(), 0U);
    for (Vertex w = 0; w < n; ++w)
      if (w != v) ++freq[c.colour(v, w)];
    const auto seen = static_cast<std::uint32_t>(std::count_if(freq.begin(), freq.end(), [](auto f) { return f > 0; }));
    if (seen > d) continue;
    std::vector<Colour> order(r);
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](Colour a, Colour b) { return freq[a] > freq[b]; });
    ColourSet chosen;
    for (std::uint32_t i = 0; i < s; ++i) chosen.insert(order[i]);
    rep.colours = chosen;
    rep.witness_vertices = touched_vertices(c, chosen);
    rep.achieved = static_cast<std::uint32_t>(rep.witness_vertices.size());
    verify_witness(c, rep, "best_colour_set_d");
    return rep;
  }

  // Case 2: every vertex sees more than d colours.
  ColourSet chosen;
  if (binomial(r, s) <= 1'000'000) {
    chosen = val_g(c, s).colours;
  } else {
    chosen = greedy_touched_set(c, s);
    if (static_cast<std::int64_t>(touched_vertices(c, chosen).size()) < ceil(rep.claimed_bound))
      chosen = val_g(c, s, EvalOptions{true}).colours;
  }
  rep.colours = chosen;
  rep.witness_vertices = touched_vertices(c, chosen);
  rep.achieved = static_cast<std::uint32_t>(rep.witness_vertices.size());
  verify_witness(c, rep, "best_colour_set_d");
  return rep;
}

Rational augment_bound(std::uint32_t n, std::uint32_t r, std::uint32_t s) {
  if (s < 1 || 2 * s > r) throw DomainError("augment bound needs 1 <= s <= r/2");
  BigRational product = 1;
  for (std::uint32_t i = 1; i <= s; ++i) product *= BigRational(BigInt(r - 2 * i + 1), BigInt(r - i + 1));
  return to_machine(BigRational(n) - BigRational(n) * product);
}

GuaranteeReport greedy_augment(const EdgeColouring& c, std::uint32_t s) {
  const std::uint32_t n = c.n(), r = c.r();
  if (s < 1 || 2 * s > r)
    throw DomainError("greedy_augment needs 1 <= s <= floor(r/2) (s=" + std::to_string(s) + ", r=" +
                      std::to_string(r) + ")");
  if (n < 1) throw DomainError("greedy_augment needs n >= 1");

  // s = 1: the largest monochromatic component (lowest colour on ties).
  ColourSet colours;
  VertexSet witness;
  for (Colour col = 0; col < r; ++col) {
    const auto dec = union_graph_components(c, ColourSet{col});
    std::uint32_t best_id = 0;
    for (std::uint32_t id = 1; id < dec.sizes.size(); ++id)
      if (dec.sizes[id] > dec.sizes[best_id]) best_id = id;
    if (dec.sizes[best_id] > witness.size()) {
      witness.clear();
      for (Vertex v = 0; v < n; ++v)
        if (dec.labels[v] == best_id) witness.push_back(v);
      colours = ColourSet{col};
    }
  }

  for (std::uint32_t i = 2; i <= s; ++i) {
    // A vertex sending at most i-1 colours into the witness joins it via its star.
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<std::uint8_t> inside(n, 0);
      for (Vertex w : witness) inside[w] = 1;
      for (Vertex v = 0; v < n && !changed; ++v) {
        if (inside[v]) continue;
        ColourSet star;
        for (Vertex w : witness) star.insert(c.colour(v, w));
        if (star.size() > i - 1) continue;
        for (Colour col = 0; star.size() < i - 1; ++col)
          if (!star.contains(col)) star.insert(col);
        colours = star;
        witness = component_of(c, colours, v);
        changed = true;
      }
    }
    // Pad to i-1 colours, then add the colour giving the largest component.
    for (Colour col = 0; colours.size() < i - 1; ++col)
      if (!colours.contains(col)) colours.insert(col);
    witness = component_of(c, colours, witness.front());
    ColourSet best_set;
    VertexSet best_component;
    for (Colour col = 0; col < r; ++col) {
      if (colours.contains(col)) continue;
      ColourSet trial = colours;
      trial.insert(col);
      auto comp = component_of(c, trial, witness.front());
      if (comp.size() > best_component.size()) {
        best_component = std::move(comp);
        best_set = trial;
      }
    }
    colours = best_set;
    witness = std::move(best_component);
  }

  GuaranteeReport rep;
  rep.colours = colours;
  rep.witness_vertices = witness;
  rep.achieved = static_cast<std::uint32_t>(witness.size());
  rep.k = 1;
  rep.claimed_bound = augment_bound(n, r, s);
  rep.status = BoundStatus::kTheorem;
  verify_witness(c, rep, "greedy_augment");
  return rep;
}

DisjointExtraction extract_disjoint_kconnected(const SimpleGraph& g, std::uint32_t r, std::uint32_t k) {
  const std::uint32_t n = g.n();
  if (r < 2) throw DomainError("extraction needs r >= 2");
  if (k < 1) throw DomainError("extraction needs k >= 1");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (static_cast<std::uint64_t>(r) * g.edge_count() < pairs)
    throw DomainError("edge-count precondition fails: " + std::to_string(g.edge_count()) + " edges < C(n,2)/r");

  DisjointExtraction out;
  VertexSet remaining(n);
  std::iota(remaining.begin(), remaining.end(), 0U);
  while (!remaining.empty()) {
    const auto local = largest_k_connected_subgraph(g.induced(remaining), k);
    // size > n/(2r) + 1
    if (2ULL * r * local.size() <= static_cast<std::uint64_t>(n) + 2ULL * r) break;
    VertexSet set;
    for (Vertex v : local) set.push_back(remaining[v]);
    std::sort(set.begin(), set.end());
    std::vector<std::uint8_t> taken(n, 0);
    for (Vertex v : set) taken[v] = 1;
    std::erase_if(remaining, [&](Vertex v) { return taken[v] != 0; });
    out.peeled.push_back(std::move(set));
  }

  const long double log_r = std::log2(static_cast<long double>(r));
  std::uint32_t fallback_j = 2;
  std::size_t fallback_count = 0;
  for (std::uint32_t j = 2; (1ULL << (j - 1)) <= 4ULL * r; ++j) {
    std::vector<VertexSet> cls;
    for (const auto& set : out.peeled) {
      const std::uint64_t scaled = 4ULL * r * set.size();
      if ((1ULL << (j - 1)) * n <= scaled && scaled <= (1ULL << j) * n) cls.push_back(set);
    }
    if (static_cast<long double>(cls.size()) * std::pow(4.0L, j) * log_r >= r) {
      out.j = j;
      out.chosen = std::move(cls);
      out.certified = true;
      return out;
    }
    if (cls.size() > fallback_count) {
      fallback_count = cls.size();
      fallback_j = j;
    }
  }
  out.j = fallback_j;
  for (const auto& set : out.peeled) {
    const std::uint64_t scaled = 4ULL * r * set.size();
    if ((1ULL << (fallback_j - 1)) * n <= scaled && scaled <= (1ULL << fallback_j) * n) out.chosen.push_back(set);
  }
  return out;
}

MatchingResult monochromatic_matching(const EdgeColouring& c, const VertexSet& a, const VertexSet& b,
                                      std::uint32_t k) {
  if (k < 1) throw DomainError("matching size k must be at least 1");
  if (a.size() != b.size()) throw DomainError("matching sides must have equal size");
  const std::uint64_t side = a.size();
  if (side <= static_cast<std::uint64_t>(c.r()) * (k - 1))
    throw DomainError("matching needs |A| = |B| > r(k-1) = " + std::to_string(static_cast<std::uint64_t>(c.r()) * (k - 1)));
  const VertexSet sa = sorted_copy(a), sb = sorted_copy(b);
  std::vector<Vertex> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(both));
  if (!both.empty()) throw DomainError("matching sides must be disjoint");
  if (sa.back() >= c.n() || sb.back() >= c.n()) throw DomainError("matching vertex out of range");

  std::vector<std::uint32_t> freq(c.r(), 0);
  for (std::size_t i = 0; i < side; ++i) ++freq[c.colour(sa[i], sb[i])];
  MatchingResult out;
  out.colour = static_cast<Colour>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  for (std::size_t i = 0; i < side && out.edges.size() < k; ++i)
    if (c.colour(sa[i], sb[i]) == out.colour) out.edges.emplace_back(sa[i], sb[i]);
  return out;
}

bool contraction_theorem_range(std::uint32_t r, std::uint32_t s) {
  if (r <= 2) return false;
  const long double ll = std::log2(std::log2(static_cast<long double>(r)));
  return static_cast<long double>(s) <= ll - std::log2(4.0L + 3.0L * ll);
}

namespace {

struct Candidate {
  VertexSet set;
  ColourSet colours;
};

void offer(Candidate& best, VertexSet set, ColourSet colours) {
  if (set.size() > best.set.size() || (set.size() == best.set.size() && !set.empty() && lex_less(set, best.set))) {
    best.set = std::move(set);
    best.colours = colours;
  }
}

Colour majority_colour(const std::vector<std::int32_t>& colour_of_pair, std::uint32_t r, bool& any) {
  std::vector<std::uint64_t> freq(r, 0);
  any = false;
  for (auto col : colour_of_pair)
    if (col >= 0) {
      ++freq[static_cast<std::size_t>(col)];
      any = true;
    }
  return static_cast<Colour>(std::max_element(freq.begin(), freq.end()) - freq.begin());
}

}  // namespace

GuaranteeReport iterated_contraction(const EdgeColouring& c, std::uint32_t s, std::uint32_t k,
                                     ContractionOptions opts) {
  const std::uint32_t n = c.n(), r = c.r();
  if (s < 1) throw DomainError("iterated_contraction needs s >= 1");
  if (k < 1) throw DomainError("iterated_contraction needs k >= 1");
  if (r < 2) throw DomainError("iterated_contraction needs r >= 2");
  if (n < 2) throw DomainError("iterated_contraction needs n >= 2");
  const bool large_n = k == 1 || static_cast<std::uint64_t>(n) > 16ULL * r * r * (k - 1) + 1;
  if (!large_n && opts.require_preconditions)
    throw DomainError("n too small for k: need n > 16 r^2 (k-1) + 1 = " +
                      std::to_string(16ULL * r * r * (k - 1) + 1));

  // Round 1: majority colour of K_n.
  std::vector<std::int32_t> pair_colour(c.raw().begin(), c.raw().end());
  bool any = false;
  const Colour first = majority_colour(pair_colour, r, any);
  ColourSet used{first};
  const auto ext = extract_disjoint_kconnected(union_graph(c, used), r, k);
  bool certified = ext.certified;
  Candidate best;
  for (const auto& set : ext.peeled) offer(best, set, used);
  // Single-colour candidates: for r = 2 one colour always spans K_n.
  for (Colour col = 0; col < r; ++col)
    if (col != first) offer(best, largest_k_connected_subgraph(union_graph(c, ColourSet{col}), k), ColourSet{col});
  std::vector<VertexSet> groups = ext.chosen;

  for (std::uint32_t round = 2; round <= s && groups.size() >= 2; ++round) {
    const auto m = static_cast<std::uint32_t>(groups.size());
    std::vector<std::int32_t> super(static_cast<std::size_t>(m) * (m - 1) / 2, -1);
    for_each_pair(m, [&](Vertex a, Vertex b, std::size_t rank) {
      const std::size_t side = std::min(groups[a].size(), groups[b].size());
      if (side <= static_cast<std::uint64_t>(r) * (k - 1)) {
        certified = false;
        return;
      }
      const VertexSet ua(groups[a].begin(), groups[a].begin() + static_cast<std::ptrdiff_t>(side));
      const VertexSet ub(groups[b].begin(), groups[b].begin() + static_cast<std::ptrdiff_t>(side));
      super[rank] = static_cast<std::int32_t>(monochromatic_matching(c, ua, ub, k).colour);
    });
    const Colour next = majority_colour(super, r, any);
    if (!any) break;
    SimpleGraph h(m);
    for_each_pair(m, [&](Vertex a, Vertex b, std::size_t rank) {
      if (super[rank] == static_cast<std::int32_t>(next)) h.add_edge(a, b);
    });
    DisjointExtraction step;
    try {
      step = extract_disjoint_kconnected(h, r, 1);
    } catch (const DomainError&) {
      certified = false;
      break;
    }
    certified = certified && step.certified;
    ColourSet grown = used;
    grown.insert(next);
    auto expand = [&](const VertexSet& super_set) {
      VertexSet out;
      for (Vertex g : super_set) out.insert(out.end(), groups[g].begin(), groups[g].end());
      std::sort(out.begin(), out.end());
      return out;
    };
    for (const auto& set : step.peeled) offer(best, expand(set), grown);
    std::vector<VertexSet> next_groups;
    for (const auto& set : step.chosen) next_groups.push_back(expand(set));
    groups = std::move(next_groups);
    used = grown;
  }

  GuaranteeReport rep;
  rep.k = k;
  if (best.set.empty()) {
    // No k-connected set in the majority colour: exact search over s-sets.
    const auto score = val_f_k(c, std::min(s, r), k);
    rep.colours = score.colours;
    rep.witness_vertices = score.witness;
  } else {
    rep.colours = best.colours;
    rep.witness_vertices = best.set;
  }
  rep.achieved = static_cast<std::uint32_t>(rep.witness_vertices.size());

  if (large_n && certified && contraction_theorem_range(r, s)) {
    rep.status = BoundStatus::kTheorem;
    rep.claimed_bound = Rational(std::int64_t{n}, std::int64_t{r}) * Rational(std::int64_t{1} << s, 4);
  } else if (!large_n) {
    rep.status = BoundStatus::kNotCertified;
    rep.claimed_bound = Rational(0);
  } else {
    rep.status = BoundStatus::kFallback;
    rep.claimed_bound = k == 1 ? Rational(1) + Rational(std::int64_t{n} - 1, std::int64_t{r})
                               : Rational(std::int64_t{n}, 2 * std::int64_t{r}) + 1;
  }
  verify_witness(c, rep, "iterated_contraction");
  return rep;
}

}  // namespace manycolour
