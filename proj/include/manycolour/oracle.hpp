// Exact f(n,r,s) and g(n,r,s) by depth-first search over colour-canonical
// colourings of K_n with branch and bound.
//
// Colourings are enumerated pair by pair in pair-rank order; the first pair
// gets colour 0 and every later pair a colour at most one above the largest
// used so far, which meets every colour-permutation orbit exactly once. The
// bound at a node is the score of the partial colouring (unassigned pairs
// absent), which can only grow as pairs are added. Subtrees are pruned only
// when that bound strictly exceeds the incumbent, so the reported colouring
// is the first minimiser in enumeration order for any worker count.
#pragma once

#include "manycolour/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace manycolour {

struct OracleOptions {
  /// Permit r^(C(n,2)-1) > 10^9.
  bool allow_large = false;
  /// Only accept extremal colourings that are also minimal under vertex
  /// relabelling (lexicographically smallest colour-canonical form).
  bool vertex_symmetry = false;
};

inline constexpr std::uint64_t kOracleGuard = 1'000'000'000;

/// Subtrees sharded across OpenMP workers; incumbent shared atomically.
ExactRecord exact_value(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, OracleOptions opts = {});

enum class VerifyMode {
  kCheap,  // re-score the extremal colouring only
  kFull,   // also rerun the enumeration
};

/// False when the record is inconsistent or its value is not the minimum.
bool verify_record(const ExactRecord& record, VerifyMode mode = VerifyMode::kFull, OracleOptions opts = {});

struct CensusRow {
  std::uint32_t n = 0;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  Kind kind = Kind::kF;
  std::uint32_t value = 0;
};

/// Every cell 1 <= n <= max_n, 1 <= r <= max_r, 1 <= s <= r, both kinds,
/// that fits the enumeration guard.
std::vector<CensusRow> census(std::uint32_t max_n, std::uint32_t max_r, OracleOptions opts = {});
/// "n,r,s,kind,value" header plus one line per row.
std::string census_csv(const std::vector<CensusRow>& rows);

namespace reference {
/// Single-threaded search over the whole tree.
ExactRecord exact_value(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind, OracleOptions opts = {});
}  // namespace reference

}  // namespace manycolour
