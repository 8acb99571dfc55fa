#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace goalforge {

// splitmix64: cheap, well-mixed 64-bit hash used to derive independent
// seed streams from one master seed.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Folds a path of stream identifiers into a master seed. Same (seed, path)
// always yields the same value; distinct paths give unrelated streams.
inline std::uint64_t derive_seed(std::uint64_t master,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(master);
  for (std::uint64_t v : path) s = splitmix64(s ^ v);
  return s;
}

// Stream tags used by the training harness so that env resets, exploration,
// evaluation and replay sampling never share a generator.
enum SeedStream : std::uint64_t {
  kStreamReset = 0x01,
  kStreamExplore = 0x02,
  kStreamEval = 0x03,
  kStreamBuffer = 0x04,
  kStreamInit = 0x05,
  kStreamSearch = 0x06,
};

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace goalforge
