#pragma once

#include <cstdint>
#include <random>

namespace iqls {

/// SplitMix64 scrambler; used to derive well-separated engine seeds from
/// (user seed, stream index) pairs.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL));
}

/// Uniform double in [0, 1) from the top 53 bits; avoids distribution
/// objects so the byte stream is pinned by the engine alone.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

}  // namespace iqls
