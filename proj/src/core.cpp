#include "manycolour/core.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace manycolour {

ColourSet::ColourSet(std::initializer_list<Colour> colours) {
  for (Colour c : colours) insert(c);
}

ColourSet ColourSet::full(std::uint32_t r) {
  if (r > kMaxColours) throw DomainError("at most 64 colours are supported");
  return ColourSet(r == 64 ? ~0ULL : ((1ULL << r) - 1));
}

ColourSet ColourSet::from_vector(std::span<const Colour> colours) {
  ColourSet out;
  for (Colour c : colours) out.insert(c);
  return out;
}

void ColourSet::insert(Colour c) {
  if (c >= kMaxColours) throw DomainError("colour id " + std::to_string(c) + " exceeds the 64-colour limit");
  bits_ |= 1ULL << c;
}

void ColourSet::erase(Colour c) {
  if (c < kMaxColours) bits_ &= ~(1ULL << c);
}

std::vector<Colour> ColourSet::to_vector() const {
  std::vector<Colour> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Colour>(std::countr_zero(b)));
  return out;
}

bool lex_less(ColourSet a, ColourSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  // Below `low` the lists agree. Whichever set owns `low` continues with it; the
  // other continues with something larger, or has ended and is a proper prefix.
  if (a.bits() & low) {
    const bool b_continues = (b.bits() & ~(low | (low - 1))) != 0;
    return b_continues;
  }
  const bool a_continues = (a.bits() & ~(low | (low - 1))) != 0;
  return !a_continues;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

EdgeColouring::EdgeColouring(std::uint32_t n, std::uint32_t r) : EdgeColouring(n, r, {}) {}

EdgeColouring::EdgeColouring(std::uint32_t n, std::uint32_t r, std::vector<std::uint8_t> colours)
    : n_(n), r_(r), colours_(std::move(colours)) {
  if (n == 0) throw DomainError("colouring needs n >= 1");
  if (r == 0 || r > kMaxColours) throw DomainError("colour count r must be in 1..64");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (colours_.empty() && pairs != 0) colours_.assign(pairs, 0);
  if (colours_.size() != pairs)
    throw DomainError("expected " + std::to_string(pairs) + " pair colours, got " + std::to_string(colours_.size()));
  for (std::size_t i = 0; i < colours_.size(); ++i)
    if (colours_[i] >= r)
      throw DomainError("pair " + std::to_string(i) + " has colour " + std::to_string(colours_[i]) + " >= r");
}

void EdgeColouring::set(Vertex u, Vertex v, Colour c) {
  if (u == v || u >= n_ || v >= n_) throw DomainError("invalid vertex pair");
  if (c >= r_) throw DomainError("colour out of range");
  colours_[pair_rank(n_, u, v)] = static_cast<std::uint8_t>(c);
}

ColourSet EdgeColouring::used_colours() const {
  std::uint64_t bits = 0;
  for (auto c : colours_) bits |= 1ULL << c;
  return ColourSet(bits);
}

Hypergraph::Hypergraph(std::uint32_t r, std::vector<ColourSet> edges) : r_(r), edges_(std::move(edges)) {
  if (r == 0 || r > kMaxColours) throw DomainError("hypergraph vertex count must be in 1..64");
  const ColourSet all = ColourSet::full(r);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].empty()) throw DomainError("hypergraph edge " + std::to_string(i) + " is empty");
    if (!edges_[i].is_subset_of(all))
      throw DomainError("hypergraph edge " + std::to_string(i) + " reaches outside 0.." + std::to_string(r - 1));
  }
}

std::uint32_t Hypergraph::uniformity() const {
  if (edges_.empty()) return 0;
  const std::uint32_t u = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != u) return 0;
  return u;
}

std::vector<std::uint32_t> Hypergraph::degrees() const {
  std::vector<std::uint32_t> deg(r_, 0);
  for (const auto& e : edges_)
    for (Colour v : e.to_vector()) ++deg[v];
  return deg;
}

const char* to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::kTheorem: return "theorem";
    case BoundStatus::kFallback: return "fallback";
    case BoundStatus::kNotCertified: return "not_certified";
  }
  return "?";
}

BoundStatus bound_status_from_string(const std::string& s) {
  if (s == "theorem") return BoundStatus::kTheorem;
  if (s == "fallback") return BoundStatus::kFallback;
  if (s == "not_certified") return BoundStatus::kNotCertified;
  throw ParseError("unknown bound status '" + s + "'");
}

bool GuaranteeReport::meets_bound() const {
  return static_cast<std::int64_t>(achieved) >= ceil(claimed_bound);
}

const char* to_string(Kind kind) { return kind == Kind::kF ? "f" : "g"; }

Kind kind_from_string(const std::string& s) {
  if (s == "f") return Kind::kF;
  if (s == "g") return Kind::kG;
  throw ParseError("kind must be 'f' or 'g', got '" + s + "'");
}

EdgeColouring canonical_colour_form(const EdgeColouring& c) {
  std::array<int, kMaxColours> relabel;
  relabel.fill(-1);
  int next = 0;
  std::vector<std::uint8_t> out(c.raw().begin(), c.raw().end());
  for (auto& col : out) {
    if (relabel[col] < 0) relabel[col] = next++;
    col = static_cast<std::uint8_t>(relabel[col]);
  }
  return EdgeColouring(c.n(), c.r(), std::move(out));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n - k + i) / i stays integral at every step.
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max())
      throw DomainError("binomial C(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::int64_t floor(const Rational& q) {
  const auto num = q.numerator();
  const auto den = q.denominator();  // always > 0
  std::int64_t d = num / den;
  if (num % den != 0 && num < 0) --d;
  return d;
}

std::int64_t ceil(const Rational& q) {
  const auto num = q.numerator();
  const auto den = q.denominator();
  std::int64_t d = num / den;
  if (num % den != 0 && num > 0) ++d;
  return d;
}

std::uint64_t unrank_subset(std::uint64_t rank, std::uint32_t r, std::uint32_t s) {
  std::uint64_t mask = 0;
  std::uint32_t hi = r;
  for (std::uint32_t i = s; i >= 1; --i) {
    // Largest c < hi with C(c, i) <= rank.
    std::uint32_t c = hi - 1;
    while (binomial(c, i) > rank) --c;
    mask |= 1ULL << c;
    rank -= binomial(c, i);
    hi = c;
  }
  return mask;
}

}  // namespace manycolour
