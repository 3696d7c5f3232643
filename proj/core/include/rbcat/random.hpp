#pragma once

#include <cstdint>
#include <initializer_list>

namespace rbcat {

// All randomness in the library derives from a 64-bit seed through SplitMix64.
// Seeds for sub-streams are formed by hashing (seed, tag...) so that results
// never depend on evaluation order.

constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> tags) noexcept {
  std::uint64_t state = seed;
  std::uint64_t out = splitmix64(state);
  for (auto t : tags) {
    state ^= t + 0x632BE59BD9B4E019ULL + (out << 6) + (out >> 2);
    out = splitmix64(state);
  }
  return out;
}

}  // namespace rbcat
