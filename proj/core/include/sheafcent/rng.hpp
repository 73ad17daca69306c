// rng.hpp — deterministic, platform-independent randomness.
//
// Every distribution here is hand-mapped from raw mt19937_64 output because
// the standard leaves std::uniform_real_distribution and std::shuffle
// implementation-defined; identical seeds must yield identical streams on
// every platform and standard library.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sheafcent {

using RandomEngine = std::mt19937_64;

// SplitMix64 finalizer; bijective on 64-bit words.
constexpr std::uint64_t avalanche64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

// Decorrelated per-stream seed: streams i and j share no obvious structure
// even when master seeds are small consecutive integers.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) noexcept {
  return avalanche64(master + (stream + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(RandomEngine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_real(RandomEngine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform_unit(eng);
}

// Unbiased uniform integer in [0, bound); rejection sampling.
inline std::uint64_t uniform_below(RandomEngine& eng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = eng();
  } while (x > limit);
  return x % bound;
}

// In-place Fisher-Yates shuffle with the portable index draw above.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, RandomEngine& eng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(eng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace sheafcent
