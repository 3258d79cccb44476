#include "manycolour/oracle.hpp"

#include "manycolour/evaluate.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>

namespace manycolour {

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr std::uint32_t kMaxOracleVertices = 32;
constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void check_oracle_args(std::uint32_t n, std::uint32_t r, std::uint32_t s, const OracleOptions& opts) {
  if (n < 1 || n > kMaxOracleVertices) throw DomainError("oracle needs 1 <= n <= 32");
  if (r < 1 || r > kMaxColours) throw DomainError("oracle needs 1 <= r <= 64");
  if (s < 1 || s > r) throw DomainError("oracle needs 1 <= s <= r");
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t leaves = 1;
  for (std::uint64_t i = 1; i < pairs && leaves <= kOracleGuard; ++i) leaves *= r;
  if (!opts.allow_large && leaves > kOracleGuard)
    throw DomainError("r^(C(n,2)-1) exceeds the 10^9 enumeration budget; pass allow_large to override");
}

bool vertex_canonical(const EdgeColouring& c) {
  const std::uint32_t n = c.n();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0U);
  const auto base = c.raw();
  EdgeColouring relabelled(n, c.r());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for_each_pair(n, [&](Vertex u, Vertex v, std::size_t) { relabelled.set(perm[u], perm[v], c.colour(u, v)); });
    const auto image = canonical_colour_form(relabelled);
    const auto raw = image.raw();
    if (std::lexicographical_compare(raw.begin(), raw.end(), base.begin(), base.end())) return false;
  }
  return true;
}

struct ShardResult {
  std::uint32_t value = kNone;
  std::vector<std::uint8_t> colours;
};

class Search {
 public:
  Search(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, const OracleOptions& opts,
         std::atomic<std::uint32_t>& incumbent)
      : n_(n), r_(r), kind_(kind), opts_(opts), incumbent_(incumbent), colours_(n * (n - 1) / 2, kUnset),
        adj_(static_cast<std::size_t>(r) * n, 0) {
    for_each_pair(n, [&](Vertex u, Vertex v, std::size_t) { pairs_.emplace_back(u, v); });
    const std::uint64_t total = binomial(r, s);
    std::uint64_t mask = unrank_subset(0, r, s);
    for (std::uint64_t i = 0; i < total; ++i) {
      std::vector<Colour> members;
      for (std::uint64_t m = mask; m; m &= m - 1) members.push_back(static_cast<Colour>(std::countr_zero(m)));
      subsets_.push_back(std::move(members));
      if (i + 1 < total) mask = next_subset(mask);
    }
  }

  std::size_t pair_count() const { return pairs_.size(); }

  void assign(std::size_t rank, std::uint8_t col) {
    colours_[rank] = col;
    const auto [u, v] = pairs_[rank];
    adj_[col * n_ + u] ^= 1U << v;
    adj_[col * n_ + v] ^= 1U << u;
  }

  void unassign(std::size_t rank) {
    const auto col = colours_[rank];
    const auto [u, v] = pairs_[rank];
    adj_[col * n_ + u] ^= 1U << v;
    adj_[col * n_ + v] ^= 1U << u;
    colours_[rank] = kUnset;
  }

  /// Score of the partial colouring: max over s-sets of the component or touched size.
  std::uint32_t score() const {
    std::uint32_t best = 0;
    std::uint32_t merged[kMaxOracleVertices];
    for (const auto& members : subsets_) {
      for (Vertex v = 0; v < n_; ++v) {
        std::uint32_t row = 0;
        for (Colour col : members) row |= adj_[col * n_ + v];
        merged[v] = row;
      }
      best = std::max(best, kind_ == Kind::kG ? touched(merged) : largest_component(merged));
      if (best == n_) break;
    }
    return best;
  }

  void run(std::size_t depth, std::int32_t max_used, ShardResult& out) {
    const std::uint32_t bound = score();
    if (bound > incumbent_.load(std::memory_order_relaxed)) return;
    if (depth == pairs_.size()) {
      if (bound >= out.value) return;
      if (opts_.vertex_symmetry && !vertex_canonical(current())) return;
      out.value = bound;
      out.colours = colours_;
      std::uint32_t seen = incumbent_.load(std::memory_order_relaxed);
      while (bound < seen && !incumbent_.compare_exchange_weak(seen, bound, std::memory_order_relaxed)) {
      }
      return;
    }
    const auto top = static_cast<std::int32_t>(std::min<std::uint32_t>(static_cast<std::uint32_t>(max_used + 1), r_ - 1));
    for (std::int32_t col = 0; col <= top; ++col) {
      assign(depth, static_cast<std::uint8_t>(col));
      run(depth + 1, std::max(max_used, col), out);
      unassign(depth);
    }
  }

  EdgeColouring current() const { return EdgeColouring(n_, r_, colours_); }

 private:
  std::uint32_t touched(const std::uint32_t* merged) const {
    std::uint32_t count = 0;
    for (Vertex v = 0; v < n_; ++v) count += merged[v] != 0;
    return count;
  }

  std::uint32_t largest_component(const std::uint32_t* merged) const {
    std::uint32_t remaining = n_ == 32 ? ~0U : (1U << n_) - 1;
    std::uint32_t best = 0;
    while (remaining) {
      std::uint32_t comp = remaining & (~remaining + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        std::uint32_t grow = 0;
        for (std::uint32_t f = frontier; f; f &= f - 1) grow |= merged[std::countr_zero(f)];
        frontier = grow & ~comp;
        comp |= grow;
      }
      best = std::max(best, static_cast<std::uint32_t>(std::popcount(comp)));
      remaining &= ~comp;
    }
    return best;
  }

  std::uint32_t n_, r_;
  Kind kind_;
  OracleOptions opts_;
  std::atomic<std::uint32_t>& incumbent_;
  std::vector<std::uint8_t> colours_;
  std::vector<std::uint32_t> adj_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::vector<Colour>> subsets_;
};

struct Prefix {
  std::vector<std::uint8_t> colours;
  std::int32_t max_used = -1;
};

// Canonical prefixes of the first `depth` pairs in enumeration order.
void collect_prefixes(std::size_t depth, std::uint32_t r, Prefix& cur, std::vector<Prefix>& out) {
  if (cur.colours.size() == depth) {
    out.push_back(cur);
    return;
  }
  const auto top = static_cast<std::int32_t>(std::min<std::uint32_t>(static_cast<std::uint32_t>(cur.max_used + 1), r - 1));
  for (std::int32_t col = 0; col <= top; ++col) {
    const auto saved = cur.max_used;
    cur.colours.push_back(static_cast<std::uint8_t>(col));
    cur.max_used = std::max(saved, col);
    collect_prefixes(depth, r, cur, out);
    cur.colours.pop_back();
    cur.max_used = saved;
  }
}

ExactRecord make_record(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, const ShardResult& best) {
  if (best.value == kNone) throw std::logic_error("oracle search produced no colouring");
  ExactRecord rec;
  rec.n = n;
  rec.r = r;
  rec.s = s;
  rec.kind = kind;
  rec.value = best.value;
  rec.extremal_colouring = EdgeColouring(n, r, best.colours);
  return rec;
}

}  // namespace

ExactRecord exact_value(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, OracleOptions opts) {
  check_oracle_args(n, r, s, opts);
  std::atomic<std::uint32_t> incumbent{kNone};
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  // Deep enough for a few hundred shards.
  std::vector<Prefix> prefixes;
  std::size_t depth = 0;
  for (; depth <= pairs; ++depth) {
    prefixes.clear();
    Prefix root;
    collect_prefixes(depth, r, root, prefixes);
    if (prefixes.size() >= 256 || depth == pairs) break;
  }
  std::vector<ShardResult> results(prefixes.size());
#pragma omp parallel
  {
    Search search(n, r, s, kind, opts, incumbent);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(prefixes.size()); ++i) {
      const auto& prefix = prefixes[static_cast<std::size_t>(i)];
      for (std::size_t d = 0; d < prefix.colours.size(); ++d) search.assign(d, prefix.colours[d]);
      search.run(prefix.colours.size(), prefix.max_used, results[static_cast<std::size_t>(i)]);
      for (std::size_t d = prefix.colours.size(); d-- > 0;) search.unassign(d);
    }
  }
  ShardResult best;
  for (const auto& res : results)
    if (res.value < best.value) best = res;
  return make_record(n, r, s, kind, best);
}

namespace reference {

ExactRecord exact_value(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, OracleOptions opts) {
  check_oracle_args(n, r, s, opts);
  std::atomic<std::uint32_t> incumbent{kNone};
  Search search(n, r, s, kind, opts, incumbent);
  ShardResult best;
  search.run(0, -1, best);
  return make_record(n, r, s, kind, best);
}

}  // namespace reference

bool verify_record(const ExactRecord& record, VerifyMode mode, OracleOptions opts) {
  try {
    const auto& c = record.extremal_colouring;
    if (c.n() != record.n || c.r() != record.r || record.s < 1 || record.s > record.r) return false;
    if (c.n() < 1) return false;
    const auto score = record.kind == Kind::kF ? reference::val_f(c, record.s) : reference::val_g(c, record.s);
    if (score.value != record.value) return false;
    if (mode == VerifyMode::kCheap) return true;
    return exact_value(record.n, record.r, record.s, record.kind, opts).value == record.value;
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<CensusRow> census(std::uint32_t max_n, std::uint32_t max_r, OracleOptions opts) {
  std::vector<CensusRow> rows;
  for (std::uint32_t n = 1; n <= max_n; ++n)
    for (std::uint32_t r = 1; r <= max_r; ++r)
      for (std::uint32_t s = 1; s <= r; ++s)
        for (Kind kind : {Kind::kF, Kind::kG}) {
          try {
            rows.push_back(CensusRow{n, r, s, kind, exact_value(n, r, s, kind, opts).value});
          } catch (const DomainError&) {
            // outside the enumeration budget
          }
        }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "n,r,s,kind,value\n";
  for (const auto& row : rows)
    out << row.n << ',' << row.r << ',' << row.s << ',' << to_string(row.kind) << ',' << row.value << '\n';
  return out.str();
}

}  // namespace manycolour
