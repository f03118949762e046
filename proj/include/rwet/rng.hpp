#pragma once

#include <cstdint>
#include <random>

namespace rwet {

// All randomness in the toolkit flows through these helpers so that a fixed
// seed yields bit-identical runs on any platform. std::uniform_*_distribution
// is implementation-defined and deliberately avoided.

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent deterministic stream derived from (seed, stream_id).
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream_id) {
  std::uint64_t s = seed;
  std::uint64_t mixed = splitmix64(s) ^ (0x5851f42d4c957f2dULL * (stream_id + 1));
  return std::mt19937_64(mixed);
}

// Uniform double in [0, 1), 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n), n > 0.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  return rng() % n;
}

}  // namespace rwet
