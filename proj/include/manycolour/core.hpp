// Domain types shared by every module: edge colourings of K_n, colour sets,
// multi-hypergraphs on the colour set, guarantee reports and oracle records.
//
// Conventions:
//   - vertices are 0..n-1, colours are 0..r-1 with r <= 64
//   - the colour of pair {u,v}, u < v, lives at pair_rank(n,u,v) =
//     u*n - u*(u+1)/2 + (v-u-1) in a dense upper-triangular array
//   - vertex sets are sorted ascending std::vector<Vertex>
#pragma once

#include <boost/rational.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace manycolour {

using Vertex = std::uint32_t;
using Colour = std::uint32_t;
using VertexSet = std::vector<Vertex>;
using Rational = boost::rational<std::int64_t>;

inline constexpr std::uint32_t kMaxColours = 64;

/// Precondition, range or feasibility-guard violation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of the colours 0..63, iterated in ascending order.
class ColourSet {
 public:
  constexpr ColourSet() = default;
  constexpr explicit ColourSet(std::uint64_t bits) : bits_(bits) {}
  ColourSet(std::initializer_list<Colour> colours);

  static ColourSet full(std::uint32_t r);
  static ColourSet from_vector(std::span<const Colour> colours);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::uint32_t size() const { return static_cast<std::uint32_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Colour c) const { return c < 64 && ((bits_ >> c) & 1U); }
  constexpr bool intersects(ColourSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool is_subset_of(ColourSet o) const { return (bits_ & ~o.bits_) == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Colour min() const { return static_cast<Colour>(std::countr_zero(bits_)); }
  /// Largest member + 1 (0 for the empty set).
  constexpr std::uint32_t span() const { return 64U - static_cast<std::uint32_t>(std::countl_zero(bits_)); }

  void insert(Colour c);
  void erase(Colour c);
  std::vector<Colour> to_vector() const;

  constexpr ColourSet operator|(ColourSet o) const { return ColourSet(bits_ | o.bits_); }
  constexpr ColourSet operator&(ColourSet o) const { return ColourSet(bits_ & o.bits_); }
  constexpr bool operator==(const ColourSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists.
bool lex_less(ColourSet a, ColourSet b);

/// Lexicographic order on sorted vertex lists.
bool lex_less(const VertexSet& a, const VertexSet& b);

/// An r-edge-colouring of K_n.
class EdgeColouring {
 public:
  EdgeColouring() = default;
  /// Every pair coloured 0.
  EdgeColouring(std::uint32_t n, std::uint32_t r);
  /// Validates the size and that every entry is < r.
  EdgeColouring(std::uint32_t n, std::uint32_t r, std::vector<std::uint8_t> colours);

  std::uint32_t n() const { return n_; }
  std::uint32_t r() const { return r_; }
  std::size_t pair_count() const { return colours_.size(); }

  static constexpr std::size_t pair_rank(std::uint32_t n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
  }

  Colour colour(Vertex u, Vertex v) const { return colours_[pair_rank(n_, u, v)]; }
  void set(Vertex u, Vertex v, Colour c);
  std::span<const std::uint8_t> raw() const { return colours_; }

  /// Colours that actually occur.
  ColourSet used_colours() const;

  bool operator==(const EdgeColouring&) const = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t r_ = 0;
  std::vector<std::uint8_t> colours_;
};

/// Multi-hypergraph on the vertex set 0..r-1 (the colours). Edge order and
/// repeated edges are part of the value.
class Hypergraph {
 public:
  Hypergraph() = default;
  /// Rejects empty edges and edges reaching outside 0..r-1.
  Hypergraph(std::uint32_t r, std::vector<ColourSet> edges);

  std::uint32_t r() const { return r_; }
  const std::vector<ColourSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Common edge size, or 0 when sizes differ.
  std::uint32_t uniformity() const;
  /// Number of edges through each vertex.
  std::vector<std::uint32_t> degrees() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  std::uint32_t r_ = 0;
  std::vector<ColourSet> edges_;
};

enum class BoundStatus {
  kTheorem,       // claimed_bound is the published bound and its preconditions held
  kFallback,      // outside the theorem range; claimed_bound is the algorithm's own floor
  kNotCertified,  // preconditions failed; only the witness is reported
};

const char* to_string(BoundStatus status);
BoundStatus bound_status_from_string(const std::string& s);

/// Output of a constructive lower-bound algorithm.
struct GuaranteeReport {
  ColourSet colours;
  VertexSet witness_vertices;
  Rational claimed_bound{0};
  std::uint32_t achieved = 0;
  std::uint32_t k = 0;
  BoundStatus status = BoundStatus::kTheorem;

  /// achieved >= ceil(claimed_bound).
  bool meets_bound() const;
  bool operator==(const GuaranteeReport&) const = default;
};

enum class Kind { kF, kG };

const char* to_string(Kind kind);
Kind kind_from_string(const std::string& s);

/// Exact f(n,r,s) or g(n,r,s) together with a colouring attaining it.
struct ExactRecord {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  Kind kind = Kind::kF;
  std::uint32_t value = 0;
  EdgeColouring extremal_colouring;

  bool operator==(const ExactRecord&) const = default;
};

/// Relabels colours by order of first appearance along pair-rank order. The
/// result is a fixed representative of the colour-permutation orbit.
EdgeColouring canonical_colour_form(const EdgeColouring& c);

// ---- exact arithmetic helpers ----

/// C(n, k) exactly; throws DomainError if it does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

std::int64_t floor(const Rational& q);
std::int64_t ceil(const Rational& q);

/// The s-subset of 0..r-1 with the given rank in colex (increasing bitmask) order.
std::uint64_t unrank_subset(std::uint64_t rank, std::uint32_t r, std::uint32_t s);

/// Next bitmask with the same popcount (Gosper's hack).
constexpr std::uint64_t next_subset(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t rr = x + c;
  return (((rr ^ x) >> 2) / c) | rr;
}

/// Pair-rank-order iteration helper; calls f(u, v, rank).
template <class F>
void for_each_pair(std::uint32_t n, F&& f) {
  std::size_t rank = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) f(u, v, rank++);
}

}  // namespace manycolour
