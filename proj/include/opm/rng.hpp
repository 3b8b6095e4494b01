#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace opm {

/// SplitMix64 mix step; used to derive independent per-task seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform draw in [0, bound) by multiply-shift; a fixed algorithm so that
/// seeded runs are reproducible across standard libraries.
inline std::uint64_t bounded_u64(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

/// In-place Fisher-Yates shuffle with the deterministic draw above.
template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bounded_u64(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace opm
