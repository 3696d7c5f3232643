#include "rbcat/enumeration.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rbcat/errors.hpp"

namespace rbcat {

BitString rank_to_string(Natural rank) {
  if (rank == std::numeric_limits<Natural>::max()) {
    throw ScaleGuard("rank_to_string: rank too large");
  }
  // s_i has length ⌊log₂(i+1)⌋ and lexicographic index (i+1) - 2^len.
  const Natural shifted = rank + 1;
  const unsigned len = static_cast<unsigned>(std::bit_width(shifted)) - 1;
  const Natural index = shifted - (Natural{1} << len);
  BitString out = BitString::zeros(len);
  for (unsigned b = 0; b < len; ++b) {
    if ((index >> (len - 1 - b)) & 1U) out.set_bit(b + 1, true);
  }
  return out;
}

Natural string_to_rank(const BitString& x) {
  if (x.size() >= 64) {
    throw ScaleGuard("string_to_rank: strings of length " + std::to_string(x.size()) +
                     " exceed the 63-bit rank range");
  }
  Natural index = 0;
  for (auto b : x) index = (index << 1) | b;
  return first_rank_of_length(static_cast<unsigned>(x.size())) + index;
}

Natural cantor_pair(Natural i, Natural j) {
  const Natural s = i + j;
  if (s < i || s >= (Natural{1} << 32)) {
    throw ScaleGuard("cantor_pair: arguments too large");
  }
  return s * (s + 1) / 2 + j;
}

std::pair<Natural, Natural> cantor_unpair(Natural n) {
  // w = ⌊(√(8n+1) - 1) / 2⌋, corrected for floating-point error.
  auto w = static_cast<Natural>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  const Natural j = n - w * (w + 1) / 2;
  return {w - j, j};
}

}  // namespace rbcat
