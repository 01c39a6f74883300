#pragma once

// Deterministic random-number plumbing for the Monte Carlo engines.
//
// A run is split into chunks with independently seeded generators, combined in
// chunk order, so a given (seed, samples, chunks) triple always reproduces the
// same estimate bit for bit no matter how the chunks are scheduled.  Chunk
// seeds are derived by a splitmix64 finalising mix of seed + (chunk+1) * phi64,
// which decorrelates consecutive user seeds and consecutive chunk indices.

#include <cstdint>
#include <random>

namespace homvol {

// splitmix64 output stage: a bijective avalanche mix on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return mix64(seed + (chunk + 1) * 0x9E3779B97F4A7C15ULL);
}

inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  return std::mt19937_64(chunk_seed(seed, chunk));
}

// Uniform double in [0, 1) with 53 random bits: (top 53 bits) * 2^-53.
// Hand-rolled rather than std::uniform_real_distribution so the produced
// stream is identical across standard-library implementations.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

}  // namespace homvol
