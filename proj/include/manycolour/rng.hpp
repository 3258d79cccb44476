// Portable seeded randomness. Output depends only on (seed, stream) so runs
// reproduce bit-for-bit across platforms and standard libraries.
#pragma once

#include <cstdint>
#include <limits>

namespace manycolour {

/// SplitMix64 generator (Steele, Lea, Flood). Satisfies UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  constexpr explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  /// Independent stream `index` derived from a master seed.
  static constexpr SplitMix64 stream(std::uint64_t master, std::uint64_t index) {
    return SplitMix64(mix(master ^ mix(index + 0x632BE59BD9B4E019ULL)));
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  /// Uniform integer in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  constexpr std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = (*this)();
      if (x >= threshold) return x % bound;
    }
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace manycolour
