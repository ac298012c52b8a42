#pragma once

// Seeded draws with results fixed across standard libraries (the std
// distributions are implementation-defined, the engine is not).

#include <cstdint>
#include <random>
#include <vector>

namespace phantomkit {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) by rejection; n > 0.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

/// Fisher-Yates.
template <class T>
void shuffle_in_place(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[draw_below(rng, i)]);
}

/// Independent stream for (seed, index) via splitmix64.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return Rng(z ^ (z >> 31));
}

}  // namespace phantomkit
