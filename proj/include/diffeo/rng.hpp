#pragma once

#include <cstdint>

#include "diffeo/rational.hpp"

namespace diffeo {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that seeded runs
// reproduce bit-for-bit across platforms and releases; std::uniform_int
// distributions are implementation-defined and deliberately avoided.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi] via rejection sampling (no modulo bias).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    Rational uniform_rational(std::int64_t lo, std::int64_t hi) { return Rational(uniform(lo, hi)); }

  private:
    std::uint64_t state_;
};

}  // namespace diffeo
