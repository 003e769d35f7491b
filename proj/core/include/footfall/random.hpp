#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace footfall {

// std::uniform_*_distribution output is implementation-defined, so seeded
// results would differ between standard libraries. Every draw in this library
// goes through the helpers below, built on the fully specified mt19937_64
// engine, which keeps corpora and trained weights byte-identical everywhere.

using Rng = std::mt19937_64;

/// Unbiased integer in [0, n) via rejection sampling. n must be > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() / n * n;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % n;
}

/// 53-bit uniform double in [0, 1).
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_range(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(rng);
}

}  // namespace footfall
