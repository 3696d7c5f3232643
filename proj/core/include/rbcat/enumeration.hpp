#pragma once

#include <bit>
#include <cstdint>
#include <utility>

#include "rbcat/bitstring.hpp"

namespace rbcat {

// Standard enumeration s_0 = λ, s_1 = "0", s_2 = "1", s_3 = "00", ...
//
// Characteristic sequences use 1-based positions: position p of χ_L holds the
// membership bit of s_{p-1}. Consequently the string whose bit follows a
// prefix of length m is s_m.

using Natural = std::uint64_t;

/// s_i. Strings up to 63 bits are representable.
BitString rank_to_string(Natural rank);

/// pos(x) = 2^|x| - 1 + (lexicographic index of x among strings of length |x|).
/// Throws ScaleGuard for |x| >= 64.
Natural string_to_rank(const BitString& x);

/// The string whose membership bit sits at 1-based position p of χ (p >= 1).
inline BitString string_at_position(Natural p) { return rank_to_string(p - 1); }
inline Natural position_of(const BitString& x) { return string_to_rank(x) + 1; }

/// Rank of the first string of length n, i.e. 2^n - 1.
constexpr Natural first_rank_of_length(unsigned n) noexcept {
  return (Natural{1} << n) - 1;
}

constexpr Natural monus(Natural a, Natural b) noexcept { return a > b ? a - b : 0; }

/// ⌈log₂(m + 1)⌉, the bit length of m. Used wherever "n = log |σ|" appears.
constexpr unsigned log_length(Natural m) noexcept {
  return static_cast<unsigned>(std::bit_width(m));
}

/// ⌈log₂(m + 2)⌉, total and >= 1 on all naturals.
constexpr unsigned ceil_log2_plus2(Natural m) noexcept {
  return static_cast<unsigned>(std::bit_width(m + 1));
}

/// Cantor pairing (i+j)(i+j+1)/2 + j. Throws ScaleGuard on 64-bit overflow.
Natural cantor_pair(Natural i, Natural j);
std::pair<Natural, Natural> cantor_unpair(Natural n);

}  // namespace rbcat
