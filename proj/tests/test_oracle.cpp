#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "manycolour/evaluate.hpp"
#include "manycolour/oracle.hpp"
#include "support.hpp"

#include <omp.h>

#include <sstream>

using namespace manycolour;

namespace {

// min over every r^C(n,2) colouring of max over s-subsets, with library-free scoring.
std::uint32_t full_enumeration(std::uint32_t n, std::uint32_t r, std::uint32_t s, Kind kind) {
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> digits(pairs, 0);
  const auto subsets = testkit::all_subsets(r, s);
  std::uint32_t best = n;
  for (;;) {
    const EdgeColouring c(n, r, digits);
    std::uint32_t value = 0;
    for (const auto& subset : subsets) {
      const auto set = testkit::to_set(subset);
      value = std::max(value, kind == Kind::kF ? testkit::largest_component_brute(c, set) : testkit::touched_brute(c, set));
    }
    best = std::min(best, value);
    std::size_t i = 0;
    while (i < pairs && ++digits[i] == r) digits[i++] = 0;
    if (i == pairs) break;
  }
  return best;
}

}  // namespace

TEST_CASE("oracle agrees with full enumeration on tiny cells") {
  for (std::uint32_t n = 1; n <= 5; ++n)
    for (std::uint32_t r = 1; r <= 3; ++r) {
      if (n == 5 && r == 3) continue;
      for (std::uint32_t s = 1; s <= r; ++s)
        for (Kind kind : {Kind::kF, Kind::kG}) {
          const auto rec = exact_value(n, r, s, kind);
          CAPTURE(n);
          CAPTURE(r);
          CAPTURE(s);
          REQUIRE(rec.value == full_enumeration(n, r, s, kind));
          const auto score = kind == Kind::kF ? val_f(rec.extremal_colouring, s) : val_g(rec.extremal_colouring, s);
          CHECK(score.value == rec.value);
        }
    }
}

TEST_CASE("known small values") {
  for (std::uint32_t n = 2; n <= 6; ++n) CHECK(exact_value(n, 2, 1, Kind::kF).value == n);
  CHECK(exact_value(6, 3, 1, Kind::kF).value == 4);
  CHECK(exact_value(4, 3, 1, Kind::kF).value == 2);
  CHECK(exact_value(4, 6, 1, Kind::kG).value == 2);
}

TEST_CASE("parallel search returns the serial record") {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    for (std::uint32_t n = 3; n <= 6; ++n)
      for (std::uint32_t r = 2; r <= 3; ++r)
        for (std::uint32_t s = 1; s < r; ++s)
          for (Kind kind : {Kind::kF, Kind::kG}) {
            if (n == 6 && r == 3 && kind == Kind::kG) continue;
            CHECK(exact_value(n, r, s, kind) == reference::exact_value(n, r, s, kind));
          }
  }
  omp_set_num_threads(1);
}

TEST_CASE("extremal colouring is colour-canonical") {
  const auto rec = exact_value(5, 3, 1, Kind::kF);
  CHECK(canonical_colour_form(rec.extremal_colouring) == rec.extremal_colouring);
}

TEST_CASE("vertex symmetry filter keeps values") {
  OracleOptions sym;
  sym.vertex_symmetry = true;
  for (std::uint32_t n = 3; n <= 5; ++n)
    for (std::uint32_t r = 2; r <= 3; ++r)
      for (std::uint32_t s = 1; s < r; ++s)
        for (Kind kind : {Kind::kF, Kind::kG}) {
          const auto plain = exact_value(n, r, s, kind);
          const auto filtered = exact_value(n, r, s, kind, sym);
          CHECK(filtered.value == plain.value);
          const auto score = kind == Kind::kF ? val_f(filtered.extremal_colouring, s) : val_g(filtered.extremal_colouring, s);
          CHECK(score.value == filtered.value);
        }
}

TEST_CASE("record verification") {
  const auto rec = exact_value(6, 3, 1, Kind::kF);
  CHECK(verify_record(rec, VerifyMode::kCheap));
  CHECK(verify_record(rec, VerifyMode::kFull));

  auto wrong_value = rec;
  wrong_value.value += 1;
  CHECK_FALSE(verify_record(wrong_value, VerifyMode::kCheap));

  // A colouring scoring above the minimum is consistent but not extremal.
  auto not_min = rec;
  not_min.extremal_colouring = EdgeColouring(6, 3);
  not_min.value = 6;
  CHECK(verify_record(not_min, VerifyMode::kCheap));
  CHECK_FALSE(verify_record(not_min, VerifyMode::kFull));

  auto mismatch = rec;
  mismatch.n = 5;
  CHECK_FALSE(verify_record(mismatch, VerifyMode::kCheap));
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(exact_value(8, 3, 1, Kind::kF), DomainError);
  CHECK_THROWS_AS(exact_value(4, 3, 4, Kind::kF), DomainError);
}

TEST_CASE("census rows and CSV") {
  const auto rows = census(4, 2);
  // n in 1..4, r in 1..2, s in 1..r, two kinds.
  CHECK(rows.size() == 4 * 3 * 2);
  for (const auto& row : rows) {
    // K_1 has no edges, so nothing is touched.
    if (row.s >= row.r) CHECK(row.value == (row.kind == Kind::kG && row.n == 1 ? 0 : row.n));
    CHECK(row.value == exact_value(row.n, row.r, row.s, row.kind).value);
  }
  const auto csv = census_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,r,s,kind,value");
  std::size_t count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == rows.size());
}
