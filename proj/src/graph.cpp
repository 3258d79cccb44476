#include "manycolour/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace manycolour {

void SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) return;
  auto& cell = adj_[static_cast<std::size_t>(u) * n_ + v];
  if (cell) return;
  cell = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  nbrs_[u].push_back(v);
  nbrs_[v].push_back(u);
  ++edges_;
}

SimpleGraph SimpleGraph::induced(const VertexSet& vertices) const {
  const auto m = static_cast<std::uint32_t>(vertices.size());
  SimpleGraph out(m);
  for (std::uint32_t i = 0; i < m; ++i)
    for (std::uint32_t j = i + 1; j < m; ++j)
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

SimpleGraph union_graph(const EdgeColouring& c, ColourSet s) {
  SimpleGraph g(c.n());
  const auto raw = c.raw();
  for_each_pair(c.n(), [&](Vertex u, Vertex v, std::size_t rank) {
    if (s.contains(raw[rank])) g.add_edge(u, v);
  });
  return g;
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  std::vector<std::uint8_t> seen(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    stack.push_back(root);
    seen[root] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Split-vertex flow network: in(v) = 2v, out(v) = 2v+1, unit capacity on
// in(v) -> out(v), large capacity on out(u) -> in(v) for every edge uv.
class SplitNetwork {
 public:
  SplitNetwork(const SimpleGraph& g, Vertex s, Vertex t, std::uint32_t cap) : head_(2 * g.n(), -1) {
    const std::int32_t big = static_cast<std::int32_t>(cap) + 1;
    for (Vertex v = 0; v < g.n(); ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v : g.neighbours(u)) add_arc(2 * u + 1, 2 * v, big);
    source_ = 2 * s + 1;
    sink_ = 2 * t;
  }

  std::uint32_t max_flow(std::uint32_t cap) {
    std::uint32_t flow = 0;
    std::vector<std::int32_t> parent_arc(head_.size());
    while (flow < cap) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<std::uint32_t> queue{source_};
      parent_arc[source_] = -2;
      while (!queue.empty() && parent_arc[sink_] == -1) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto a = head_[x]; a != -1; a = next_[a]) {
          const auto y = to_[a];
          if (residual_[a] > 0 && parent_arc[y] == -1) {
            parent_arc[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (parent_arc[sink_] == -1) break;
      // Unit augmentation: every path crosses a unit in->out arc.
      for (auto y = sink_; y != source_;) {
        const auto a = parent_arc[y];
        residual_[a] -= 1;
        residual_[a ^ 1] += 1;
        y = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

  /// Nodes reachable from the source in the residual network.
  std::vector<std::uint8_t> source_side() const {
    std::vector<std::uint8_t> seen(head_.size(), 0);
    std::vector<std::uint32_t> stack{source_};
    seen[source_] = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto a = head_[x]; a != -1; a = next_[a])
        if (residual_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
    }
    return seen;
  }

 private:
  void add_arc(std::uint32_t x, std::uint32_t y, std::int32_t cap) {
    push(x, y, cap);
    push(y, x, 0);
  }
  void push(std::uint32_t x, std::uint32_t y, std::int32_t cap) {
    to_.push_back(y);
    residual_.push_back(cap);
    next_.push_back(head_[x]);
    head_[x] = static_cast<std::int32_t>(to_.size() - 1);
  }

  std::vector<std::int32_t> head_;
  std::vector<std::int32_t> next_;
  std::vector<std::uint32_t> to_;
  std::vector<std::int32_t> residual_;
  std::uint32_t source_ = 0;
  std::uint32_t sink_ = 0;
};

}  // namespace

std::uint32_t local_vertex_connectivity(const SimpleGraph& g, Vertex s, Vertex t, std::uint32_t cap) {
  SplitNetwork net(g, s, t, cap);
  return net.max_flow(cap);
}

std::optional<VertexSet> find_small_vertex_cut(const SimpleGraph& g, std::uint32_t k) {
  const std::uint32_t n = g.n();
  if (k == 0) return std::nullopt;
  // Any cut C with |C| < k misses one of the first k vertices; the smallest
  // such vertex v_i has a non-neighbour v_j (j > i) on the far side of C.
  for (Vertex i = 0; i < std::min(k, n); ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      SplitNetwork net(g, i, j, k);
      if (net.max_flow(k) >= k) continue;
      const auto side = net.source_side();
      VertexSet cut;
      for (Vertex v = 0; v < n; ++v)
        if (side[2 * v] && !side[2 * v + 1]) cut.push_back(v);
      return cut;
    }
  }
  return std::nullopt;
}

bool is_k_connected(const SimpleGraph& g, std::uint32_t k) {
  const std::uint32_t n = g.n();
  if (n == 0) return false;
  if (k == 0) {
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == 0) return false;
    return true;
  }
  if (k == 1) return connected_components(g).size() == 1;
  if (n <= k) return false;
  if (connected_components(g).size() != 1) return false;
  return !find_small_vertex_cut(g, k).has_value();
}

namespace {

// Vertices of `g` surviving repeated deletion of vertices with degree < k.
VertexSet k_core(const SimpleGraph& g, std::uint32_t k) {
  std::vector<std::size_t> deg(g.n());
  std::vector<std::uint8_t> removed(g.n(), 0);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    for (Vertex w : g.neighbours(v))
      if (!removed[w] && --deg[w] < k) {
        removed[w] = 1;
        queue.push_back(w);
      }
  }
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!removed[v]) out.push_back(v);
  return out;
}

VertexSet map_back(const VertexSet& local, const VertexSet& labels) {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(labels[v]);
  std::sort(out.begin(), out.end());
  return out;
}

// `piece` lists original vertex ids; results are appended as original ids.
void split_recursive(const SimpleGraph& whole, const VertexSet& piece, std::uint32_t k,
                     std::vector<VertexSet>& out) {
  const SimpleGraph local = whole.induced(piece);
  const VertexSet core_local = k_core(local, k);
  if (core_local.size() <= k) return;
  const VertexSet core = map_back(core_local, piece);
  const SimpleGraph core_graph = whole.induced(core);
  for (const auto& comp_local : connected_components(core_graph)) {
    if (comp_local.size() <= k) continue;
    const VertexSet comp = map_back(comp_local, core);
    const SimpleGraph comp_graph = whole.induced(comp);
    auto cut_local = find_small_vertex_cut(comp_graph, k);
    if (!cut_local) {
      out.push_back(comp);
      continue;
    }
    // Every k-connected subgraph survives removal of fewer than k vertices, so
    // it sits inside (one side) + cut.
    std::vector<std::uint8_t> in_cut(comp.size(), 0);
    for (Vertex v : *cut_local) in_cut[v] = 1;
    VertexSet rest_local;
    for (Vertex v = 0; v < comp.size(); ++v)
      if (!in_cut[v]) rest_local.push_back(v);
    const SimpleGraph rest_graph = comp_graph.induced(rest_local);
    for (const auto& side_local : connected_components(rest_graph)) {
      VertexSet next;
      for (Vertex v : side_local) next.push_back(comp[rest_local[v]]);
      for (Vertex v : *cut_local) next.push_back(comp[v]);
      std::sort(next.begin(), next.end());
      split_recursive(whole, next, k, out);
    }
  }
}

}  // namespace

std::vector<VertexSet> maximal_k_connected_sets(const SimpleGraph& g, std::uint32_t k) {
  std::vector<VertexSet> found;
  VertexSet all(g.n());
  std::iota(all.begin(), all.end(), 0U);
  if (k < 2) {
    // Levels 0 and 1 are handled by components; keep the interface total.
    for (auto& comp : connected_components(g))
      if (k == 0 ? comp.size() >= 2 : true) found.push_back(std::move(comp));
    return found;
  }
  split_recursive(g, all, k, found);
  std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return lex_less(a, b);
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<VertexSet> maximal;
  for (auto& candidate : found) {
    const bool contained = std::any_of(maximal.begin(), maximal.end(), [&](const VertexSet& big) {
      return std::includes(big.begin(), big.end(), candidate.begin(), candidate.end());
    });
    if (!contained) maximal.push_back(std::move(candidate));
  }
  return maximal;
}

VertexSet largest_k_connected_subgraph(const SimpleGraph& g, std::uint32_t k) {
  if (k == 0) {
    VertexSet out;
    for (Vertex v = 0; v < g.n(); ++v)
      if (g.degree(v) > 0) out.push_back(v);
    return out;
  }
  if (k == 1) {
    VertexSet best;
    for (auto& comp : connected_components(g))
      if (comp.size() > best.size()) best = std::move(comp);
    return best;
  }
  auto sets = maximal_k_connected_sets(g, k);
  return sets.empty() ? VertexSet{} : sets.front();
}

}  // namespace manycolour
