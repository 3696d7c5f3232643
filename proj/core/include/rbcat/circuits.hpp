#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/enumeration.hpp"

namespace rbcat {

enum class GateOp : std::uint8_t { Input, Not, And, Or, Oracle };

inline constexpr unsigned kMaxOracleArity = 6;

/// One gate. `in` holds wire references (indices of earlier gates); INPUT
/// stores its input index in in[0]. An ORACLE gate reads the string formed by
/// its wires in order and answers with that string's bit of the oracle prefix.
struct Gate {
  GateOp op = GateOp::Input;
  std::uint8_t arity = 0;
  std::array<std::uint8_t, kMaxOracleArity> in{};

  friend bool operator==(const Gate&, const Gate&) = default;
};

class OracleCircuit {
 public:
  OracleCircuit() = default;
  /// Validates the layout: gates 0..n-1 are INPUT(0)..INPUT(n-1), every other
  /// gate references strictly earlier gates, AND/OR operands are ordered,
  /// oracle wires are distinct. Throws MalformedCircuit otherwise.
  OracleCircuit(unsigned n_inputs, std::vector<Gate> gates, std::size_t output);

  /// Inverse of dump().
  static OracleCircuit parse(std::string_view text);

  unsigned n_inputs() const noexcept { return n_inputs_; }
  /// Number of non-INPUT gates.
  std::size_t size() const noexcept { return gates_.size() - n_inputs_; }
  std::size_t output() const noexcept { return output_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }

  /// `g0=IN(0) g1=IN(1) g2=AND(g0,g1) out=g2`
  std::string dump() const;

  friend bool operator==(const OracleCircuit&, const OracleCircuit&) = default;

 private:
  friend struct CircuitAccess;
  unsigned n_inputs_ = 0;
  std::vector<Gate> gates_;
  std::size_t output_ = 0;
};

/// Evaluates C on x. An ORACLE gate whose wires spell u answers
/// σ[rank(u) + 1], or 0 when that position lies past |σ|.
bool eval(const OracleCircuit& c, const BitString& x, const BitString& sigma);

/// Bit t+1 is the output on the t-th n-bit input in lexicographic order.
BitString truth_table(const OracleCircuit& c, const BitString& sigma);

/// All n-bit strings in lexicographic order.
std::vector<BitString> all_inputs(unsigned n);
/// Lexicographic index of u among strings of length |u|.
Natural input_index(const BitString& u);

struct CircuitCaps {
  unsigned max_inputs = 4;
  unsigned max_size = 5;
  /// Largest oracle arity; 0 means "number of inputs".
  unsigned max_arity = 0;
  /// Enumerations longer than this are refused.
  Natural max_circuits = 50'000'000;
  /// consistent_set / enumerate never return more circuits than this.
  Natural max_materialize = 1'000'000;
  unsigned workers = 1;
};

/// Number of circuits with n inputs and size <= s in the canonical
/// enumeration. Throws ScaleGuard when n or s exceed the caps (not when the
/// count exceeds max_circuits).
Natural circuit_count(unsigned n, unsigned s, const CircuitCaps& caps = {});

// Canonical order: by size, then lexicographically by the per-gate choice
// index with the first non-input gate most significant. Size-0 circuits output
// one of the inputs; larger circuits output their last gate.

/// Visits circuits with indices in [begin, end). The reference passed to `fn`
/// is reused between calls. Throws ScaleGuard if the full enumeration exceeds
/// caps.max_circuits.
void for_each_circuit_range(unsigned n, unsigned s, const CircuitCaps& caps, Natural begin,
                            Natural end, const std::function<void(const OracleCircuit&)>& fn);
void for_each_circuit(unsigned n, unsigned s, const CircuitCaps& caps,
                      const std::function<void(const OracleCircuit&)>& fn);
OracleCircuit circuit_at(unsigned n, unsigned s, Natural index, const CircuitCaps& caps = {});
/// Materialized enumeration, guarded by caps.max_materialize.
std::vector<OracleCircuit> enumerate(unsigned n, unsigned s, const CircuitCaps& caps = {});

struct Constraint {
  BitString u;
  bool z = false;
};

/// Pairs (u_j, z_j) with pairwise distinct u_j.
class ConstraintSet {
 public:
  /// Throws std::invalid_argument if u is already constrained.
  void add(BitString u, bool z);
  const std::vector<Constraint>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

 private:
  std::vector<Constraint> items_;
};

bool satisfies(const OracleCircuit& c, const ConstraintSet& z, const BitString& sigma);

/// Circuits from enumerate(n, s) with C(u_j) = z_j for every constraint.
std::vector<OracleCircuit> consistent_set(unsigned n, unsigned s, const BitString& sigma,
                                          const ConstraintSet& z, const CircuitCaps& caps = {});
Natural consistent_count(unsigned n, unsigned s, const BitString& sigma, const ConstraintSet& z,
                         const CircuitCaps& caps = {});

/// 1 iff at least half of the circuits output 1 on u. Throws EmptySet.
bool majority_vote(std::span<const OracleCircuit> set, const BitString& u, const BitString& sigma);

/// Count of enumerated circuits per truth table under a fixed oracle prefix.
/// Built with incremental evaluation; equivalent to evaluating every circuit.
struct TruthTableHistogram {
  unsigned n = 0;
  /// counts[t]: bit j of t is the output on input j.
  std::vector<Natural> counts;

  Natural total() const;
  Natural distinct_tables() const;
  Natural consistent(const ConstraintSet& z) const;
  /// (#consistent circuits outputting 1 on u, #outputting 0).
  std::pair<Natural, Natural> split(const ConstraintSet& z, const BitString& u) const;
};

TruthTableHistogram table_histogram(unsigned n, unsigned s, const BitString& sigma,
                                    const CircuitCaps& caps = {});

/// One diagonalization bit: the consistent set had `before` circuits, `ones`
/// and `zeros` of them answered 1/0 on u, the chosen bit is 1 - majority
/// (0 when the set is empty) and `after` circuits remain.
struct HalvingStep {
  BitString u;
  Natural before = 0;
  Natural ones = 0;
  Natural zeros = 0;
  bool bit = false;
  Natural after = 0;
};

/// Diagonalizes against the histogram on `inputs` in order, extending `z`.
std::vector<HalvingStep> diagonalize_tables(const TruthTableHistogram& h,
                                            std::span<const BitString> inputs,
                                            ConstraintSet& z);

/// Recomputes before/ones/zeros/after for a recorded run by evaluating every
/// enumerated circuit directly, with no truth tables involved.
std::vector<HalvingStep> replay_brute_force(unsigned n, unsigned s, const BitString& sigma,
                                            std::span<const HalvingStep> steps,
                                            const CircuitCaps& caps = {});

}  // namespace rbcat
