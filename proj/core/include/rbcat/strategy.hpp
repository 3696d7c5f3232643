#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/bounds.hpp"
#include "rbcat/enumeration.hpp"
#include "rbcat/language.hpp"

namespace rbcat {

/// Per-evaluation record of the input positions a strategy read.
struct QueryLog {
  std::uint64_t count = 0;
  std::vector<Natural> positions;
};

/// Read-only, possibly lazy view of a characteristic prefix σ as seen by a
/// strategy. The length is known without querying. Every read of a position
/// inside the underlying input is logged; positions in a zero padding region
/// (see padded_to) or past the end read as 0 and are not logged.
class PrefixView {
 public:
  using BitSource = std::function<bool(Natural)>;

  explicit PrefixView(const BitString& bits, QueryLog* log = nullptr);
  PrefixView(Natural length, BitSource source, QueryLog* log = nullptr);

  Natural size() const noexcept { return size_; }
  bool bit(Natural pos) const;

  /// σ 0^(length - |σ|): the same input seen through a longer view whose
  /// extra positions answer 0. No-op when length <= size().
  PrefixView padded_to(Natural length) const;
  PrefixView with_log(QueryLog* log) const;

  /// Reads (and logs) every bit.
  BitString materialize() const;

 private:
  const BitString* bits_ = nullptr;
  std::shared_ptr<const BitSource> source_;
  Natural domain_ = 0;
  Natural size_ = 0;
  QueryLog* log_ = nullptr;
};

/// Finite extension strategy h(σ) = σ·w, represented by its extension map.
class Constructor {
 public:
  using Fn = std::function<BitString(const PrefixView&)>;

  Constructor(std::string name, Fn fn);

  BitString extension(const PrefixView& sigma) const { return (*fn_)(sigma); }
  BitString extension(const BitString& sigma) const;
  BitString apply(const BitString& sigma) const { return sigma + extension(sigma); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
};

class IndexedConstructor {
 public:
  using Fn = std::function<BitString(Natural, const PrefixView&)>;

  IndexedConstructor(std::string name, Fn fn);

  BitString extension(Natural i, const PrefixView& sigma) const { return (*fn_)(i, sigma); }
  BitString extension(Natural i, const BitString& sigma) const;
  BitString apply(Natural i, const BitString& sigma) const { return sigma + extension(i, sigma); }
  /// h_i as a plain constructor.
  Constructor at(Natural i) const;
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::shared_ptr<const Fn> fn_;
};

/// Finite union of closed integer intervals of 1-based input positions.
class QuerySet {
 public:
  QuerySet() = default;
  static QuerySet range(Natural first, Natural last);

  void insert(Natural pos) { insert_range(pos, pos); }
  void insert_range(Natural first, Natural last);
  void unite(const QuerySet& other);

  bool contains(Natural pos) const noexcept;
  Natural size() const noexcept;
  bool empty() const noexcept { return intervals_.empty(); }
  const std::vector<std::pair<Natural, Natural>>& intervals() const noexcept { return intervals_; }
  std::string to_string() const;

 private:
  std::vector<std::pair<Natural, Natural>> intervals_;
};

/// A bit of ext(h_i(σ), k), or ⊥ (nullopt) past the end of the extension.
using ExtBit = std::optional<bool>;

/// Locally computable indexed strategy: individual extension bits plus a
/// declared query set G(n, i, k) covering every position read for any
/// i' <= i, k' <= k and any σ with ⌈log₂(|σ|+1)⌉ <= n.
class LocalConstructor {
 public:
  using BitFn = std::function<ExtBit(Natural i, const PrefixView& sigma, Natural k)>;
  using QuerySetFn = std::function<QuerySet(Natural n, Natural i, Natural k)>;

  LocalConstructor(std::string name, BitFn bit, QuerySetFn query_set,
                   bool divergence_is_nontermination = false);

  ExtBit ext_bit(Natural i, const PrefixView& sigma, Natural k) const { return (*bit_)(i, sigma, k); }
  ExtBit ext_bit(Natural i, const BitString& sigma, Natural k) const;
  QuerySet query_set(Natural n, Natural i, Natural k) const { return (*query_set_)(n, i, k); }
  const std::string& name() const noexcept { return name_; }
  bool divergence_is_nontermination() const noexcept { return nontermination_; }

 private:
  std::string name_;
  std::shared_ptr<const BitFn> bit_;
  std::shared_ptr<const QuerySetFn> query_set_;
  bool nontermination_ = false;
};

/// Randomized local strategy; `error_n` requests error probability 2^-n and
/// `seed` fixes the coin tosses.
class ProbabilisticLocalConstructor {
 public:
  using BitFn = std::function<ExtBit(Natural i, const PrefixView& sigma, Natural k,
                                     unsigned error_n, std::uint64_t seed)>;

  ProbabilisticLocalConstructor(std::string name, BitFn bit, LocalConstructor::QuerySetFn query_set);

  ExtBit ext_bit(Natural i, const PrefixView& sigma, Natural k, unsigned error_n,
                 std::uint64_t seed) const {
    return (*bit_)(i, sigma, k, error_n, seed);
  }
  ExtBit ext_bit(Natural i, const BitString& sigma, Natural k, unsigned error_n,
                 std::uint64_t seed) const;
  QuerySet query_set(Natural n, Natural i, Natural k) const { return (*query_set_)(n, i, k); }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  std::shared_ptr<const BitFn> bit_;
  std::shared_ptr<const LocalConstructor::QuerySetFn> query_set_;
};

// ---------------------------------------------------------------------------
// Operations

/// The unique w with h_i(σ) = σw.
BitString ext_of(const IndexedConstructor& h, Natural i, const BitString& sigma);

/// Collects ext_bit(i, σ, k) for k = 1, 2, ... up to the first ⊥. Throws
/// ExtensionCap (NonTermination for strategies flagged so) if no ⊥ appears
/// within `cap` bits.
BitString materialize_local(const LocalConstructor& h, Natural i, const PrefixView& sigma,
                            Natural cap);
BitString materialize_local(const LocalConstructor& h, Natural i, const BitString& sigma,
                            Natural cap);

/// View a local strategy as an indexed one by materializing extensions.
IndexedConstructor as_indexed(const LocalConstructor& h, Natural cap);
/// h_i of a local strategy as a plain constructor.
Constructor local_at(const LocalConstructor& h, Natural i, Natural cap);

struct MeetsVerdict {
  bool met = false;
  /// Shortest τ with h(τ) ⊑ χ when met.
  std::optional<BitString> witness;
  Natural horizon = 0;

  std::string to_string() const;
};

/// Searches τ ⊑ χ_L with min_length <= |τ| <= horizon for h(τ) ⊑ χ_L. The
/// extension is compared bit-by-bit against L, past the horizon if needed.
MeetsVerdict meets_check(const Constructor& h, const Language& lang, Natural horizon,
                         Natural min_length = 0);
/// Local variant: extension bits are evaluated lazily and the scan at τ stops
/// at the first disagreement, so extensions longer than `cap` only matter when
/// they agree with L that far.
MeetsVerdict meets_check(const LocalConstructor& h, Natural i, const Language& lang,
                         Natural horizon, Natural min_length = 0, Natural cap = Natural{1} << 20);

/// Finite-sequence variant: τ ranges over prefixes of `chi` and h(τ) must fit
/// inside `chi`.
MeetsVerdict meets_prefix(const Constructor& h, const BitString& chi);
MeetsVerdict meets_prefix(const LocalConstructor& h, Natural i, const BitString& chi);

/// h(τ) ⋢ χ_L.
bool avoids_at(const Constructor& h, const Language& lang, const BitString& tau);

using TripleFn = std::function<BitString(Natural i, Natural j, const PrefixView&)>;
/// Folds N×N-indexed strategies into one index via Cantor pairing.
IndexedConstructor union_combine(TripleFn h, std::string name = "union");

struct QueryTrial {
  Natural n = 0;
  Natural i = 0;
  Natural k = 0;
  BitString sigma;
};

struct QueryViolation {
  std::size_t trial = 0;
  Natural i = 0;
  Natural k = 0;
  Natural position = 0;
};

struct QuerySetReport {
  bool pass = true;
  std::optional<QueryViolation> violation;
  std::uint64_t evaluations = 0;

  std::string to_string() const;
};

/// Runs every ext_bit(i', σ, k') with i' <= i, k' <= k of every trial under a
/// logging view and checks each read position against query_set(n, i, k).
/// Throws std::invalid_argument if a trial violates ⌈log₂(|σ|+1)⌉ <= n.
QuerySetReport enforce_query_set(const LocalConstructor& h, std::span<const QueryTrial> trials);

/// Seeded random trials with n = ⌈log₂(|σ|+1)⌉.
std::vector<QueryTrial> random_query_trials(std::size_t count, std::uint64_t seed, Natural max_i,
                                            Natural max_k, Natural max_length);

/// Majority of `reps` runs (odd) with derived seeds; ⊥ versus bit is decided
/// first, then 0 versus 1 among the bit outcomes (ties to 1).
ProbabilisticLocalConstructor amplify(const ProbabilisticLocalConstructor& ph, unsigned reps);
ProbabilisticLocalConstructor as_probabilistic(const LocalConstructor& h);

struct BoundCaps {
  /// Maximum number of prefixes σ enumerated for one bound value.
  Natural max_strings = Natural{1} << 18;
  Natural extension_cap = Natural{1} << 16;
};

/// f(0) = 1, f(i) = max(2^i, max{|ext(h_i(σ))| : |σ| <= f(0)+...+f(i-1)}).
std::vector<Natural> bound_extension_sizes(const LocalConstructor& h, Natural i_max,
                                           const BoundCaps& caps = {});

/// max{|h_t(τ)| : t <= m, |τ| <= m} (total length, not just the extension).
Natural bound_uniform(const IndexedConstructor& h, Natural m, const BoundCaps& caps = {});

struct MeterCounts {
  std::uint64_t queries = 0;
  std::uint64_t emitted = 0;
  std::uint64_t steps = 0;
};

/// Diagnostic comparison of abstract costs against t(n); never a gate.
struct MeterReport {
  MeterCounts counts;
  BoundFamily bound;
  Natural n = 0;
  BigNat limit;
  bool violation = false;

  std::string to_string() const;
};

MeterReport meter_report(const MeterCounts& counts, const BoundFamily& bound, Natural n);
/// Argument size ⌈log₂(|σ|+1)⌉ + bit length of i.
Natural meter_argument_size(Natural sigma_length, Natural i);
MeterCounts measure_extension(const IndexedConstructor& h, Natural i, const BitString& sigma);
MeterCounts measure_local(const LocalConstructor& h, Natural i, const BitString& sigma, Natural cap);

}  // namespace rbcat
