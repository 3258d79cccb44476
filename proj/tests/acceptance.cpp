// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "manycolour/construct.hpp"
#include "manycolour/evaluate.hpp"
#include "manycolour/guarantee.hpp"
#include "manycolour/hypergraph.hpp"
#include "manycolour/oracle.hpp"
#include "support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace manycolour;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) notes << "first failure: " << what;
      pass = false;
    }
  }
};

struct Cell {
  std::uint32_t n, r, s, value;
  const char* source;
  std::function<Hypergraph()> hypergraph;
};

std::vector<Cell> table() {
  return {
      {9, 5, 1, 5, "g519", [] { return certificate_catalogue("g519"); }},
      {4, 6, 1, 2, "fano_minus_vertex", [] { return certificate_catalogue("fano_minus_vertex"); }},
      {7, 7, 1, 3, "fano", [] { return certificate_catalogue("fano"); }},
      {10, 5, 2, 9, "complete_5_3", [] { return certificate_catalogue("complete_5_3"); }},
      {10, 6, 2, 8, "g6210", [] { return certificate_catalogue("g6210"); }},
      {7, 7, 2, 5, "fano", [] { return certificate_catalogue("fano"); }},
      {35, 7, 3, 34, "complete_7_4", [] { return certificate_catalogue("complete_7_4"); }},
  };
}

std::uint32_t mask_of(const VertexSet& w) {
  std::uint32_t mask = 0;
  for (auto v : w) mask |= 1U << v;
  return mask;
}

// Independent witness check for k <= 2.
bool witness_holds(const EdgeColouring& c, const GuaranteeReport& rep) {
  if (rep.witness_vertices.size() != rep.achieved) return false;
  if (rep.achieved == 0) return true;
  const auto g = testkit::colour_graph(c, rep.colours);
  const auto w = mask_of(rep.witness_vertices);
  if (rep.k == 0) {
    for (auto v : rep.witness_vertices)
      if (g.adj[v] == 0) return false;
    return true;
  }
  if (!testkit::connected_within(g, w)) return false;
  if (rep.k == 1) return true;
  if (rep.witness_vertices.size() <= rep.k) return false;
  for (auto v : rep.witness_vertices)
    if (!testkit::connected_within(g, w & ~(1U << v))) return false;
  return true;
}

bool meets(const GuaranteeReport& rep) { return static_cast<std::int64_t>(rep.achieved) >= ceil(rep.claimed_bound); }

Outcome criterion1() {
  Outcome o;
  double slowest = 0;
  for (const auto& cell : table()) {
    const auto start = Clock::now();
    const auto c = hypergraph_colouring(cell.hypergraph(), cell.n);
    const auto value = val_g(c, cell.s).value;
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    std::ostringstream what;
    what << "g(" << cell.n << "," << cell.r << "," << cell.s << ") from " << cell.source << " gave " << value
         << ", expected " << cell.value;
    o.require(value == cell.value, what.str());
    o.require(c.r() == cell.r, what.str() + " (colour count)");
    o.require(t < 1.0, what.str() + " (over 1 s)");
  }
  if (o.pass) o.notes << "7 cells exact, slowest " << slowest << " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& cell : table()) {
    std::ostringstream where;
    where << "g(" << cell.n << "," << cell.r << "," << cell.s << ")";
    const auto degrees = valid_lower_g_degrees(cell.r, cell.s);
    std::int64_t best_ceiling = 0;
    std::uint32_t best_d = 0;
    for (auto d : degrees) {
      const auto q = lower_g_bound(cell.n, cell.r, cell.s, d);
      if (ceil(q) > best_ceiling) best_ceiling = ceil(q), best_d = d;
    }
    o.require(best_ceiling == cell.value, where.str() + " best bound ceiling differs from construction value");

    std::vector<EdgeColouring> colourings{hypergraph_colouring(cell.hypergraph(), cell.n)};
    for (std::uint64_t seed = 0; seed < 1000; ++seed) colourings.push_back(testkit::random_colouring(cell.n, cell.r, seed));
    for (std::size_t i = 0; i < colourings.size(); ++i) {
      const auto& c = colourings[i];
      for (auto d : degrees) {
        const auto rep = best_colour_set_d(c, cell.s, d);
        ++checked;
        o.require(rep.claimed_bound == lower_g_bound(cell.n, cell.r, cell.s, d), where.str() + " claimed bound mismatch");
        o.require(meets(rep) && witness_holds(c, rep) && rep.achieved == testkit::touched_brute(c, rep.colours),
                  where.str() + " report fails re-verification");
      }
      const auto rep = best_colour_set_d(c, cell.s, best_d);
      o.require(rep.achieved >= cell.value, where.str() + " best d below value");
      if (i == 0) o.require(rep.achieved == cell.value, where.str() + " extremal colouring not matched exactly");
    }
  }
  if (o.pass) o.notes << checked << " reports over 7 cells x 1001 colourings";
  return o;
}

Outcome criterion3() {
  Outcome o;
  SplitMix64 rng(2024);
  std::size_t cosets = 0;
  for (std::uint32_t d : {2U, 3U}) {
    const std::uint32_t points = 1U << d, r = points - 1;
    for (std::uint32_t n : {points, 4 * points}) {
      const auto c = cube_colouring(d, n);
      for (std::uint32_t s = 1; s <= d; ++s) {
        const std::uint32_t limit = (1U << s) * ((n + r) / (r + 1));
        std::uint32_t worst = 0;
        for (const auto& subset : testkit::all_subsets(r, s))
          worst = std::max(worst, testkit::largest_component_brute(c, testkit::to_set(subset)));
        o.require(val_f(c, s).value == worst, "val_f disagrees with flood fill");
        o.require(worst <= limit, "d=" + std::to_string(d) + " n=" + std::to_string(n) + " s=" + std::to_string(s) +
                                      " exceeds 2^s ceil(n/(r+1))");
      }
    }
    const auto base = cube_colouring(d, points);
    for (int trial = 0; trial < 50; ++trial) {
      ColourSet set;
      const auto size = 1 + static_cast<std::uint32_t>(rng.below(d));
      while (set.size() < size) set.insert(static_cast<Colour>(rng.below(r)));
      std::vector<std::uint32_t> vectors;
      for (auto col : set.to_vector()) vectors.push_back(col + 1);
      const auto dim = testkit::span_dimension(vectors);
      // Components as vertex masks, by flood fill.
      const auto g = testkit::colour_graph(base, set);
      std::uint32_t seen = 0;
      std::uint32_t count = 0;
      for (std::uint32_t v = 0; v < points; ++v) {
        if ((seen >> v) & 1U) continue;
        std::uint32_t comp = 1U << v;
        for (bool grew = true; grew;) {
          grew = false;
          for (std::uint32_t w = 0; w < points; ++w)
            if (((comp >> w) & 1U) && (g.adj[w] & ~comp)) {
              comp |= g.adj[w];
              grew = true;
            }
        }
        seen |= comp;
        ++count;
        // The component of v is v + span(S).
        std::uint32_t coset = 0;
        for (std::uint32_t x = 0; x < points; ++x) {
          std::vector<std::uint32_t> with = vectors;
          with.push_back(x ^ v);
          if (x == v || testkit::span_dimension(with) == dim) coset |= 1U << x;
        }
        o.require(comp == coset, "component is not a coset of the span");
        o.require(static_cast<std::uint32_t>(__builtin_popcount(comp)) == (1U << dim), "component size");
      }
      o.require(count == (1U << (d - dim)), "component count");
      ++cosets;
    }
  }
  if (o.pass) o.notes << "bounds hold for d in {2,3}, " << cosets << " random colour sets are cosets";
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (std::uint32_t r : {5U, 7U}) {
    const std::uint32_t s = r / 2;
    const auto big_c = static_cast<std::uint32_t>(binomial(r, s));
    const auto h = complete_uniform_hypergraph(r, s + 1);
    for (std::uint32_t n : {big_c, 2 * big_c + 1}) {
      // ceil((1 - 1/C) n) computed in integers.
      const std::uint32_t expected = (n * (big_c - 1) + big_c - 1) / big_c;
      const auto c = hypergraph_colouring(h, n);
      std::uint32_t value = 0;
      for (const auto& subset : testkit::all_subsets(r, s)) value = std::max(value, testkit::touched_brute(c, testkit::to_set(subset)));
      o.require(value == expected, "r=" + std::to_string(r) + " n=" + std::to_string(n) + " gave " +
                                       std::to_string(value) + ", expected " + std::to_string(expected));
      o.require(val_g(c, s).value == value, "evaluate disagrees with direct count");
    }
  }
  if (o.pass) o.notes << "g(10,5,2)=9, g(21,5,2)=19, g(35,7,3)=34, g(71,7,3)=69";
  return o;
}

Outcome criterion5() {
  Outcome o;
  double slowest = 0;
  std::size_t cells = 0;
  for (std::uint32_t n = 2; n <= 5; ++n)
    for (std::uint32_t r = 1; r <= 4; ++r) {
      std::vector<std::uint32_t> f(r + 1), g(r + 1);
      for (std::uint32_t s = 1; s <= r; ++s) {
        std::ostringstream where;
        where << "(" << n << "," << r << "," << s << ")";
        for (Kind kind : {Kind::kF, Kind::kG}) {
          const auto start = Clock::now();
          const auto rec = exact_value(n, r, s, kind);
          const double t = seconds_since(start);
          slowest = std::max(slowest, t);
          ++cells;
          o.require(t < 300, where.str() + " over 5 min");
          o.require(verify_record(rec, VerifyMode::kCheap), where.str() + " record does not verify");
          (kind == Kind::kF ? f : g)[s] = rec.value;
        }
        o.require(f[s] <= g[s], where.str() + " f > g");
        if (s > 1) o.require(f[s - 1] <= f[s] && g[s - 1] <= g[s], where.str() + " not monotone in s");
        if (r == 2 && s == 1) o.require(f[s] == n, where.str() + " f(n,2,1) != n");
        if (2 * s >= r) o.require(g[s] == n, where.str() + " g != n for s >= r/2");

        // Constructions bound from above.
        for (std::uint32_t u = 1; u <= r; ++u) {
          if (2 * u <= r || binomial(r, u) > n) continue;
          const auto c = hypergraph_colouring(complete_uniform_hypergraph(r, u), n);
          o.require(f[s] <= val_f(c, s).value && g[s] <= val_g(c, s).value, where.str() + " above a construction");
        }
        if (r == 3 && n >= 4) {
          const auto c = cube_colouring(2, n);
          o.require(f[s] <= val_f(c, s).value && g[s] <= val_g(c, s).value, where.str() + " above the cube colouring");
        }

        // Guarantees bound from below, both as formulas and as runs on the extremal colourings.
        const auto fg = exact_value(n, r, s, Kind::kG).extremal_colouring;
        for (auto d : valid_lower_g_degrees(r, s)) {
          o.require(static_cast<std::int64_t>(g[s]) >= ceil(lower_g_bound(n, r, s, d)), where.str() + " below lower-g bound");
          const auto rep = best_colour_set_d(fg, s, d);
          o.require(meets(rep) && rep.achieved <= g[s], where.str() + " lower-g run inconsistent");
        }
        const auto ff = exact_value(n, r, s, Kind::kF).extremal_colouring;
        if (2 * s <= r) {
          o.require(static_cast<std::int64_t>(f[s]) >= ceil(augment_bound(n, r, s)), where.str() + " below augment bound");
          const auto rep = greedy_augment(ff, s);
          o.require(meets(rep) && rep.achieved <= f[s], where.str() + " augment run inconsistent");
        }
        if (r >= 2) {
          o.require(static_cast<std::int64_t>(f[s]) >= ceil(Rational(1) + Rational(n - 1, r)), where.str() + " below 1+(n-1)/r");
          const auto rep = iterated_contraction(ff, s, 1);
          o.require(meets(rep) && rep.achieved <= f[s], where.str() + " contraction run inconsistent");
        }
      }
    }
  if (o.pass) o.notes << cells << " oracle cells, slowest " << slowest << " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t reports = 0;
  for (std::uint32_t r = 3; r <= 8; ++r)
    for (std::uint32_t n : {8U, 16U, 24U})
      for (std::uint32_t s = 1; s <= r / 2; ++s)
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
          const auto c = testkit::random_colouring(n, r, seed);
          std::ostringstream where;
          where << "r=" << r << " n=" << n << " s=" << s << " seed=" << seed;

          const auto aug = greedy_augment(c, s);
          o.require(witness_holds(c, aug) && meets(aug) && aug.claimed_bound == augment_bound(n, r, s),
                    where.str() + " greedy_augment");
          for (auto d : valid_lower_g_degrees(r, s)) {
            const auto rep = best_colour_set_d(c, s, d);
            o.require(witness_holds(c, rep) && meets(rep) && rep.claimed_bound == lower_g_bound(n, r, s, d),
                      where.str() + " best_colour_set_d d=" + std::to_string(d));
            ++reports;
          }
          const auto k1 = iterated_contraction(c, s, 1);
          o.require(witness_holds(c, k1) && meets(k1) && k1.claimed_bound == Rational(1) + Rational(n - 1, r),
                    where.str() + " iterated_contraction k=1");
          ContractionOptions desk;
          desk.require_preconditions = false;
          const auto k2 = iterated_contraction(c, s, 2, desk);
          o.require(witness_holds(c, k2) && meets(k2), where.str() + " iterated_contraction k=2");
          if (k2.achieved == 0) o.require(val_f_k(c, s, 2).value == 0, where.str() + " k=2 empty witness");
          reports += 3;
        }
  if (o.pass) o.notes << reports << " reports verified in " << seconds_since(start) << " s";
  o.require(seconds_since(start) < 1800, "over 30 min");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  const std::uint32_t r = 16, x = 7;
  // p = 1/C(9,7) = 1/36; an x-set fires and none of its C(9,7) = 36 disjoint x-sets fires.
  const long double p = 1.0L / 36, survive = p * std::pow(1 - p, 36.0L);
  const long double mean_b = static_cast<long double>(binomial(16, 7)) * survive;
  const long double mean_bt = static_cast<long double>(binomial(10, 7)) * survive;
  const std::uint64_t t_mask = (1ULL << 10) - 1;
  const int seeds = 1000;
  long double sb = 0, sbb = 0, st = 0, stt = 0;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto h = exclusion_sample(r, x, static_cast<std::uint64_t>(seed));
    bool inter = true;
    for (std::size_t i = 0; i < h.edge_count() && inter; ++i)
      for (std::size_t j = i + 1; j < h.edge_count() && inter; ++j) inter = (h.edges()[i].bits() & h.edges()[j].bits()) != 0;
    o.require(inter, "seed " + std::to_string(seed) + " not intersecting");
    const long double b = h.edge_count();
    long double bt = 0;
    for (const auto& e : h.edges()) bt += (e.bits() & ~t_mask) == 0;
    sb += b, sbb += b * b, st += bt, stt += bt * bt;
  }
  const auto band = [&](long double sum, long double sq, long double expected, const char* name) {
    const long double mean = sum / seeds;
    const long double se = std::sqrt((sq / seeds - mean * mean) / (seeds - 1));
    std::ostringstream what;
    what << name << " mean " << static_cast<double>(mean) << " vs " << static_cast<double>(expected) << " (se "
         << static_cast<double>(se) << ")";
    o.require(std::fabs(static_cast<double>(mean - expected)) <= 3 * static_cast<double>(se), what.str());
    return what.str();
  };
  const auto b_note = band(sb, sbb, mean_b, "|E|");
  const auto t_note = band(st, stt, mean_bt, "edges in T");
  o.require(seconds_since(start) < 600, "over 10 min");
  if (o.pass) o.notes << "1000/1000 intersecting; " << b_note << "; " << t_note;
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto bound = double_count_lower_bound(7, 3, 4);
  o.require(bound == Rational(35), "double_count_lower_bound(7,3,4) != 35");
  o.require(complete_uniform_hypergraph(7, 4).edge_count() == 35, "complete 4-uniform edge count");
  std::size_t successes = 0, samples = 0;
  struct Setting {
    std::uint32_t r, s, u;
    std::uint64_t m;
  };
  for (const Setting& st : {Setting{7, 3, 4, 150}, Setting{20, 2, 8, 30}, Setting{12, 2, 6, 40}}) {
    UniformSampleOptions opts;
    opts.u = st.u;
    opts.m = st.m;
    const auto need = double_count_lower_bound(st.r, st.s, st.u);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto sample = uniform_intersecting_sample(st.r, st.s, seed, opts);
      const auto& h = sample.hypergraph;
      ++samples;
      bool inter = true;
      for (std::size_t i = 0; i < h.edge_count(); ++i)
        for (std::size_t j = i + 1; j < h.edge_count(); ++j) inter = inter && (h.edges()[i].bits() & h.edges()[j].bits());
      bool covered = true;
      for (const auto& subset : testkit::all_subsets(st.r, st.r - st.s)) {
        const auto w = testkit::to_set(subset).bits();
        bool any = false;
        for (const auto& e : h.edges()) any = any || (e.bits() & ~w) == 0;
        covered = covered && any;
      }
      o.require(sample.intersecting == inter && sample.cover_exceeds_s == covered, "sampler checks disagree");
      if (!sample.success()) continue;
      ++successes;
      std::vector<std::uint64_t> distinct;
      for (const auto& e : h.edges()) distinct.push_back(e.bits());
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      o.require(Rational(static_cast<std::int64_t>(distinct.size())) >= need, "successful sample below the bound");
    }
  }
  o.require(successes > 0, "no successful samples to check");
  if (o.pass) o.notes << "bound 35 tight; " << successes << "/" << samples << " successful samples all meet the bound";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"small-r exact table", criterion1},
      {"matching lower bounds", criterion2},
      {"cube colouring components", criterion3},
      {"complete hypergraph end of regime", criterion4},
      {"exact oracle cells", criterion5},
      {"guarantee suite", criterion6},
      {"exclusion sampler statistics", criterion7},
      {"double-count tightness", criterion8},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << "exception: " << e.what();
    }
    failures += !o.pass;
    std::printf("%s %zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.notes.str().c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
