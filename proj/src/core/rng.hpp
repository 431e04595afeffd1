#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/rational.hpp"

namespace valkit {

// Deterministic random source. All draws are hand-rolled on top of the raw
// mt19937_64 stream because std::uniform_int_distribution is allowed to
// differ between standard library implementations, and reproducibility of
// seeded runs is part of the tool's contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_(); }

  // Uniform in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (gen_() & 1) != 0; }

  // Uniform double in [0, 1) with 53 random bits; used only by the Monte
  // Carlo estimator where floating point is the point.
  double unit_double() { return (gen_() >> 11) * 0x1.0p-53; }

  // Random rational p/q with p in [lo, hi] and q in [1, den_max].
  Rat rational(std::int64_t lo, std::int64_t hi, std::int64_t den_max) {
    return Rat(BigInt(range(lo, hi)), BigInt(range(1, den_max)));
  }

  // Derive an independent stream (seed mixed with a fixed odd constant so
  // sub-streams of consecutive indices do not overlap in practice).
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace valkit
