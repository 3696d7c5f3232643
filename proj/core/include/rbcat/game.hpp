#pragma once

#include <cstdint>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/strategy.hpp"

namespace rbcat {

struct HalfMove {
  Natural move_index = 0;
  /// 1 for Player I, 2 for Player II.
  int player = 1;
  /// Length of the state after this move.
  Natural state_length = 0;
  Natural extension_length = 0;
};

struct GameTranscript {
  std::vector<HalfMove> moves;
  BitString result_prefix;

  Natural move_count() const noexcept { return moves.size(); }
  /// State after `moves` half-moves (0 gives λ).
  BitString state(Natural moves_played) const;
  /// States after each completed round, i.e. (g∘f)^i(λ) for i = 1, 2, ...
  std::vector<BitString> round_states() const;
};

/// Alternates f and g from λ until `max_moves` half-moves have been played or
/// the state reaches `horizon` bits. Throws PlayerIIStalled when g does not
/// strictly extend.
GameTranscript run_game(const Constructor& f, const Constructor& g, Natural max_moves, Natural horizon);

/// Replays (g∘f)^i(λ) independently and checks each completed round is a
/// prefix of the result.
bool extends_all_rounds(const GameTranscript& t, const Constructor& f, const Constructor& g);

Constructor identity_adversary();
Constructor append_zero_adversary();
/// Appends 1 to 3 bits chosen by hashing (seed, σ).
Constructor random_adversary(std::uint64_t seed);
/// identity, append-0, seeded random.
std::vector<Constructor> standard_adversaries(std::uint64_t seed = 7);

/// h_k(σ) = g(σ 0^(k ∸ |σ|)); the extension starts with the padding bits and
/// g sees the padding as unlogged zeros.
IndexedConstructor winning_to_indexed(const Constructor& g);

/// Player II strategy: finds the least t <= n = ⌈log₂(|σ|+1)⌉ such that no
/// τ ⊑ σ with |τ| <= n has h_t(τ) ⊑ σ and plays h_t on σ. Without such t,
/// or when h_t adds nothing, it appends 0. At σ = λ it appends 0.
Constructor indexed_to_winning(const IndexedConstructor& h);

/// Local version: B = max{m >= 1 : f(m) <= n} with f = bound_uniform; bit 1
/// is 0; if some t <= B is unmet by every τ ⊑ σ with |τ| <= B, later bits are
/// ext(h_t(σ0), k-1), otherwise ⊥.
LocalConstructor indexed_to_winning_loc(const LocalConstructor& h, const BoundCaps& caps = {});

}  // namespace rbcat
