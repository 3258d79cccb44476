// Command-line front end. Exit codes: 0 success, 1 domain error
// (precondition or guard), 2 I/O, parse or usage error.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace manycolour::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kDefaultRunLog = "manycolour_runs.jsonl";

/// Runs one command and appends its manifest line to $RUN_LOG (default
/// manycolour_runs.jsonl in the working directory).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace manycolour::cli
