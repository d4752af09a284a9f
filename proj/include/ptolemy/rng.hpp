#pragma once

// Deterministic, platform-independent pseudo-randomness (splitmix64).
// Verification campaigns derive an independent stream per sample from
// (seed, suite, field, index), so reports never depend on scheduling or
// thread count.

#include <cstdint>

namespace ptolemy {

struct Rng {
  std::uint64_t state{0};

  constexpr explicit Rng(std::uint64_t seed) noexcept : state(seed) {}

  constexpr std::uint64_t next() noexcept {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  // Uniform in {0, ..., n-1}; modulo bias is negligible for the small n used here.
  constexpr std::uint32_t below(std::uint32_t n) noexcept {
    return static_cast<std::uint32_t>(next() % n);
  }
};

// Order-sensitive absorption of one word into a stream id.
[[nodiscard]] constexpr std::uint64_t mix_stream(std::uint64_t h, std::uint64_t x) noexcept {
  std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

[[nodiscard]] constexpr Rng sample_stream(std::uint64_t seed, std::uint64_t domain,
                                          std::uint64_t field_tag, std::uint64_t index) noexcept {
  return Rng(mix_stream(mix_stream(mix_stream(seed, domain), field_tag), index));
}

}  // namespace ptolemy
