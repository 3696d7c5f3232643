#pragma once

#include <utility>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/language.hpp"
#include "rbcat/strategy.hpp"

namespace rbcat {

// Block constructions whose result meets every h_i.

struct DiagCaps {
  /// Largest block index (global: string length) the language answers for.
  unsigned max_block = 20;
};

/// χ = B_0 B_1 B_2 ... with B_0 = "0", |B_i| = 2^i (the strings of length i)
/// and B_i = ext(h_i(B_0 ... B_{i-1})) padded with zeros. Membership is
/// computed per string, simulating only the blocks h actually reads.
/// Throws ExtensionOverflow if some ext is longer than its block.
Language diag_language_global(const IndexedConstructor& h, const DiagCaps& caps = {});

/// B_0 .. B_blocks concatenated, built block by block.
BitString diag_global_prefix(const IndexedConstructor& h, unsigned blocks);

/// (i(x), rpos(x)) for the block sizes f: i is the block containing position
/// rank + 1, rpos the 0-based offset in it.
std::pair<Natural, Natural> locate(const std::vector<Natural>& f, Natural rank);

struct LocalDiagLayout {
  /// f(0..i_max) from bound_extension_sizes.
  std::vector<Natural> f;
  /// ends[i] = f(0) + ... + f(i).
  std::vector<Natural> ends;
};

LocalDiagLayout local_diag_layout(const LocalConstructor& h, Natural i_max, const BoundCaps& caps = {});

/// Blocks of size f(i); bit k of block i is ext_bit(h_i, B_0 .. B_{i-1}, k)
/// with ⊥ read as 0. Each membership query evaluates a single extension bit
/// and recurses only into positions the strategy reads. Positions past block
/// i_max throw ScaleGuard.
Language diag_language_local(const LocalConstructor& h, const LocalDiagLayout& layout);

/// Whole blocks 0..i_max materialized in order. Throws ExtensionOverflow if an
/// extension is longer than f(i).
BitString diag_local_prefix(const LocalConstructor& h, const LocalDiagLayout& layout,
                            Natural cap = Natural{1} << 16);

}  // namespace rbcat
