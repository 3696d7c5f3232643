#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rbcat/circuits.hpp"
#include "rbcat/language.hpp"
#include "rbcat/strategy.hpp"

namespace rbcat {

// ---------------------------------------------------------------------------
// Simple strategies and families

/// ext(h(σ)) = 1 - L(s_|σ|): flips the next bit of χ_L.
Constructor singleton_avoider(const Language& lang);

/// L_t = {x : rank(x) ≡ 0 (mod t + 2)}; pairwise distinct languages.
Language singleton_family_language(Natural t);
/// h_t = singleton_avoider(L_t).
IndexedConstructor singleton_family();
LocalConstructor singleton_family_local();

/// h_t(τ) = τ 1^t.
IndexedConstructor ones_family();
LocalConstructor ones_family_local();
/// h_t(τ) = τ.
IndexedConstructor identity_family();

/// ext(h_i(σ)) = complement of σ[1..i+1], reading 0 past the end of σ.
LocalConstructor complement_prefix_family();
/// ext = "1" for every index and prefix.
LocalConstructor constant_one();
/// ext(h(σ)) = 1^|σ|; never reads σ.
LocalConstructor sparse_avoider();
/// Reads position 1 but declares an empty query set.
LocalConstructor query_violation_fixture();

/// Smallest T with m strings s_m..s_{2m-1} never all in a language of census
/// at most p(ℓ) per length, for every m >= T. Throws ScaleGuard if no T below
/// 2^20 works.
Natural sparse_threshold(const Polynomial& p);

// ---------------------------------------------------------------------------
// Circuit diagonalizers

struct SizeDiagCaps {
  unsigned max_z_length = 3;
  unsigned max_size = 5;
  Natural max_extension = 16;
  CircuitCaps circuits{};
};

/// One emitted bit of a circuit diagonalizer. `z` is the string whose
/// membership bit sits at `position`.
struct DiagStep {
  Natural position = 0;
  BitString z;
  unsigned inputs = 0;
  unsigned size = 0;
  Natural before = 0;
  Natural ones = 0;
  Natural zeros = 0;
  bool bit = false;
  Natural after = 0;
};

struct SizeDiagTrace {
  unsigned n = 0;
  BitString extension;
  std::vector<DiagStep> steps;
};

/// Extension of length min(2 n^(c+1), max_extension) with n = ⌈log₂(|σ|+1)⌉.
/// Bit i sits at the position of z = s_{|σ|+i-1} and equals 1 - majority of
/// the |z|-input circuits of size <= min(|z|^c, max_size) consistent with the
/// earlier bits of this extension on strings of the same length.
SizeDiagTrace size_diagonalizer_trace(unsigned c, const BitString& sigma, const SizeDiagCaps& caps = {});
Constructor size_diagonalizer(unsigned c, SizeDiagCaps caps = {});

/// s(w): the derandomization diagonalizer uses circuits of size < s(w).
using SizeSchedule = std::function<unsigned(unsigned width)>;
/// "3,4" gives s(1) = 3 and s(w) = 4 for w >= 2. Throws ConfigError.
SizeSchedule parse_schedule(const std::string& text);

struct DerandCaps {
  unsigned max_width = 2;
  unsigned max_size = 5;
  CircuitCaps circuits{};
};

struct DerandTrace {
  unsigned width = 0;
  unsigned size_bound = 0;
  BitString extension;
  /// Coding positions only.
  std::vector<DiagStep> steps;
};

/// Position of 0^(2^(b·|u|)) u in χ.
Natural coding_position(const BitString& u, unsigned b);

/// Level width w = max(1, ⌊⌊log₂ n⌋ / b⌋), raised until the first coding
/// position of the level lies past |σ|. The extension runs to the coding
/// position of 1^w: non-coding bits are 0, the bit at 0^(2^(bw)) u is
/// 1 - majority of w-input circuits of size < s(w) consistent with the
/// earlier coding bits.
DerandTrace derand_diagonalizer_trace(unsigned b, const SizeSchedule& s, const BitString& sigma,
                                      const DerandCaps& caps = {});
Constructor derand_diagonalizer(unsigned b, SizeSchedule s, DerandCaps caps = {});

// ---------------------------------------------------------------------------
// Σ⁰₂ avoider

/// X = {L : ∃x ∀y M(L, x, y) = 0}. `max_query(x, y)` bounds the χ positions
/// M reads.
struct Sigma2Predicate {
  std::string name;
  std::function<bool(const Language&, Natural x, Natural y)> fn;
  std::function<Natural(Natural x, Natural y)> max_query;
};

/// M(L, x, y) = [y >= x and s_y ∈ L]; X is the class of finite languages.
Sigma2Predicate finite_languages_predicate();

/// With L = σ followed by A's bits, the k-th extension bit is ⊥ once every
/// x < ⌈log₂(n+2)⌉ has a y < ⌈log₂(k+2)⌉ with M(L, x, y) ≠ 0 (n = ⌈log₂(|σ|+1)⌉),
/// otherwise A(s_{|σ|+k-1}). The first bit is never ⊥. Divergence raises
/// NonTermination when materialized.
LocalConstructor sigma2_avoider(Sigma2Predicate m, Language a);

// ---------------------------------------------------------------------------
// Generic-set builder

struct GenericLayout {
  BitString prefix;
  /// Length of χ after each block B_0, B_1, ..., B_2K.
  std::vector<Natural> block_ends;
};

/// B_0 = "1"; for i = 1..K, B_{2i-1} = ext(h_i(B_0..B_{2i-2})) (index i of the
/// i-th strategy) and B_{2i} = 0^(5·|B_0..B_{2i-1}|).
GenericLayout generic_blocks(const std::vector<LocalConstructor>& hs, Natural k,
                             Natural cap = Natural{1} << 16);
/// χ = generic_blocks(...).prefix followed by zeros.
Language generic_builder(const std::vector<LocalConstructor>& hs, Natural k,
                         Natural cap = Natural{1} << 16);
/// constant_one, sparse_avoider, complement_prefix_family.
std::vector<LocalConstructor> default_generic_strategies();

// ---------------------------------------------------------------------------
// Registry

using ParamMap = std::map<std::string, std::string>;

struct StrategySpec {
  std::string name;
  ParamMap params;
  std::variant<Constructor, IndexedConstructor, LocalConstructor> impl;
};

/// Parses "name" or "name:key=value;key=value".
std::pair<std::string, ParamMap> parse_spec(const std::string& text);

/// Names: singleton, singleton-family, sparse, ones, identity,
/// complement-prefix, constant-one, size-diag, derand-diag, sigma2.
/// Throws ConfigError on unknown names or bad parameters.
StrategySpec make_strategy(const std::string& name, const ParamMap& params);
std::vector<std::string> strategy_names();

/// Language specs: empty, full, parity, sparse (p, seed), explicit (bits),
/// file (path), singleton-family (t), generic (K). Throws ConfigError.
Language make_language(const std::string& name, const ParamMap& params);
Language language_from_spec(const std::string& text);
std::vector<std::string> language_names();

/// Indexed view of any registry strategy (plain constructors ignore i).
IndexedConstructor as_indexed(const StrategySpec& spec, Natural cap = Natural{1} << 16);

}  // namespace rbcat
