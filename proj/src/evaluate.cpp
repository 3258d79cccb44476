#include "manycolour/evaluate.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace manycolour {

std::uint32_t ComponentDecomposition::largest() const {
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::uint32_t n) : parent_(n) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // the smaller id stays root
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_s(const EdgeColouring& c, std::uint32_t s, EvalOptions opts) {
  if (s < 1 || s > c.r())
    throw DomainError("s must satisfy 1 <= s <= r (s=" + std::to_string(s) + ", r=" + std::to_string(c.r()) + ")");
  if (!opts.allow_large && binomial(c.r(), s) > kSubsetGuard)
    throw DomainError("C(r,s) exceeds 10^8 colour subsets; pass allow_large to override");
}

// Largest union-graph component under S, with caller-owned scratch.
class ComponentScorer {
 public:
  explicit ComponentScorer(const EdgeColouring& c) : c_(&c), dsu_(c.n()), count_(c.n()) {}

  std::uint32_t operator()(std::uint64_t mask) {
    dsu_.reset();
    const auto raw = c_->raw();
    for_each_pair(c_->n(), [&](Vertex u, Vertex v, std::size_t rank) {
      if ((mask >> raw[rank]) & 1U) dsu_.unite(u, v);
    });
    std::fill(count_.begin(), count_.end(), 0U);
    std::uint32_t best = 0;
    for (Vertex v = 0; v < c_->n(); ++v) best = std::max(best, ++count_[dsu_.find(v)]);
    return best;
  }

 private:
  const EdgeColouring* c_;
  DisjointSets dsu_;
  std::vector<std::uint32_t> count_;
};

// |touched(S)| from per-colour incidence bitsets.
class TouchedScorer {
 public:
  explicit TouchedScorer(const EdgeColouring& c) : words_((c.n() + 63) / 64), incidence_(c.r() * words_, 0) {
    const auto raw = c.raw();
    for_each_pair(c.n(), [&](Vertex u, Vertex v, std::size_t rank) {
      std::uint64_t* row = &incidence_[raw[rank] * words_];
      row[u / 64] |= 1ULL << (u % 64);
      row[v / 64] |= 1ULL << (v % 64);
    });
  }

  std::uint32_t operator()(std::uint64_t mask) const {
    std::uint32_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t acc = 0;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) acc |= incidence_[std::countr_zero(m) * words_ + w];
      total += static_cast<std::uint32_t>(std::popcount(acc));
    }
    return total;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> incidence_;
};

class KConnectedScorer {
 public:
  KConnectedScorer(const EdgeColouring& c, std::uint32_t k) : c_(&c), k_(k) {}
  std::uint32_t operator()(std::uint64_t mask) const {
    return static_cast<std::uint32_t>(largest_k_connected_subgraph(union_graph(*c_, ColourSet(mask)), k_).size());
  }

 private:
  const EdgeColouring* c_;
  std::uint32_t k_;
};

struct Best {
  std::uint32_t value = 0;
  ColourSet colours;
  bool set = false;

  void offer(std::uint32_t v, ColourSet s) {
    if (!set || better_score(v, s, value, colours)) {
      value = v;
      colours = s;
      set = true;
    }
  }
};

template <class Scorer>
Best maximise_serial(std::uint32_t r, std::uint32_t s, Scorer scorer) {
  Best best;
  const std::uint64_t total = binomial(r, s);
  std::uint64_t mask = unrank_subset(0, r, s);
  for (std::uint64_t i = 0; i < total; ++i) {
    best.offer(scorer(mask), ColourSet(mask));
    if (i + 1 < total) mask = next_subset(mask);
  }
  return best;
}

template <class Scorer>
Best maximise_parallel(std::uint32_t r, std::uint32_t s, const Scorer& prototype) {
  Best best;
  const std::uint64_t total = binomial(r, s);
#pragma omp parallel
  {
    Scorer scorer = prototype;
    Best local;
    const auto threads = static_cast<std::uint64_t>(omp_get_num_threads());
    const auto tid = static_cast<std::uint64_t>(omp_get_thread_num());
    const std::uint64_t begin = total * tid / threads;
    const std::uint64_t end = total * (tid + 1) / threads;
    if (begin < end) {
      std::uint64_t mask = unrank_subset(begin, r, s);
      for (std::uint64_t i = begin; i < end; ++i) {
        local.offer(scorer(mask), ColourSet(mask));
        if (i + 1 < end) mask = next_subset(mask);
      }
    }
#pragma omp critical(manycolour_subset_merge)
    {
      if (local.set) best.offer(local.value, local.colours);
    }
  }
  return best;
}

VertexSet largest_component_vertices(const EdgeColouring& c, ColourSet s) {
  const auto dec = union_graph_components(c, s);
  std::uint32_t best_id = 0;
  for (std::uint32_t id = 1; id < dec.sizes.size(); ++id)
    if (dec.sizes[id] > dec.sizes[best_id]) best_id = id;
  VertexSet out;
  for (Vertex v = 0; v < c.n(); ++v)
    if (dec.labels[v] == best_id) out.push_back(v);
  return out;
}

Score finish_f(const EdgeColouring& c, const Best& best) {
  return Score{best.value, best.colours, largest_component_vertices(c, best.colours), true};
}

Score finish_g(const EdgeColouring& c, const Best& best) {
  return Score{best.value, best.colours, touched_vertices(c, best.colours), true};
}

Score finish_k(const EdgeColouring& c, const Best& best, std::uint32_t k) {
  return Score{best.value, best.colours, largest_k_connected_subgraph(union_graph(c, best.colours), k), true};
}

}  // namespace

bool better_score(std::uint32_t value_a, ColourSet a, std::uint32_t value_b, ColourSet b) {
  if (value_a != value_b) return value_a > value_b;
  return lex_less(a, b);
}

ComponentDecomposition union_graph_components(const EdgeColouring& c, ColourSet s) {
  DisjointSets dsu(c.n());
  const auto raw = c.raw();
  for_each_pair(c.n(), [&](Vertex u, Vertex v, std::size_t rank) {
    if (s.contains(raw[rank])) dsu.unite(u, v);
  });
  ComponentDecomposition out;
  out.labels.assign(c.n(), 0);
  std::vector<std::int64_t> id_of_root(c.n(), -1);
  for (Vertex v = 0; v < c.n(); ++v) {
    const auto root = dsu.find(v);
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<std::int64_t>(out.sizes.size());
      out.sizes.push_back(0);
    }
    out.labels[v] = static_cast<std::uint32_t>(id_of_root[root]);
    ++out.sizes[out.labels[v]];
  }
  return out;
}

VertexSet touched_vertices(const EdgeColouring& c, ColourSet s) {
  std::vector<std::uint8_t> hit(c.n(), 0);
  const auto raw = c.raw();
  for_each_pair(c.n(), [&](Vertex u, Vertex v, std::size_t rank) {
    if (s.contains(raw[rank])) hit[u] = hit[v] = 1;
  });
  VertexSet out;
  for (Vertex v = 0; v < c.n(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

bool is_k_connected(const EdgeColouring& c, ColourSet s, std::span<const Vertex> w, std::uint32_t k) {
  VertexSet sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= c.n()) return false;
  SimpleGraph g(static_cast<std::uint32_t>(sorted.size()));
  for (std::uint32_t i = 0; i < sorted.size(); ++i)
    for (std::uint32_t j = i + 1; j < sorted.size(); ++j)
      if (s.contains(c.colour(sorted[i], sorted[j]))) g.add_edge(i, j);
  return manycolour::is_k_connected(g, k);
}

Score val_f(const EdgeColouring& c, std::uint32_t s, EvalOptions opts) {
  check_s(c, s, opts);
  return finish_f(c, maximise_parallel(c.r(), s, ComponentScorer(c)));
}

Score val_g(const EdgeColouring& c, std::uint32_t s, EvalOptions opts) {
  check_s(c, s, opts);
  return finish_g(c, maximise_parallel(c.r(), s, TouchedScorer(c)));
}

Score val_f_k(const EdgeColouring& c, std::uint32_t s, std::uint32_t k, EvalOptions opts) {
  if (k == 1) return val_f(c, s, opts);
  if (k == 0) return val_g(c, s, opts);
  check_s(c, s, opts);
  return finish_k(c, maximise_parallel(c.r(), s, KConnectedScorer(c, k)), k);
}

namespace reference {

Score val_f(const EdgeColouring& c, std::uint32_t s, EvalOptions opts) {
  check_s(c, s, opts);
  return finish_f(c, maximise_serial(c.r(), s, ComponentScorer(c)));
}

Score val_g(const EdgeColouring& c, std::uint32_t s, EvalOptions opts) {
  check_s(c, s, opts);
  return finish_g(c, maximise_serial(c.r(), s, TouchedScorer(c)));
}

Score val_f_k(const EdgeColouring& c, std::uint32_t s, std::uint32_t k, EvalOptions opts) {
  if (k == 1) return reference::val_f(c, s, opts);
  if (k == 0) return reference::val_g(c, s, opts);
  check_s(c, s, opts);
  return finish_k(c, maximise_serial(c.r(), s, KConnectedScorer(c, k)), k);
}

}  // namespace reference

}  // namespace manycolour
