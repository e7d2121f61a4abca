#pragma once

#include <cstdint>

namespace okb {

// Deterministic 64-bit generator (splitmix64).  Used wherever the library
// needs seeded randomness so that every platform reproduces the same stream.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n); the modulo bias is irrelevant for test
  // sampling and keeps the stream trivially reproducible.
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

// FNV-1a, used to derive stable per-name sub-seeds.
inline std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ULL;
  return h;
}

}  // namespace okb
