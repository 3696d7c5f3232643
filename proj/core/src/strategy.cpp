#include "rbcat/strategy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rbcat/errors.hpp"
#include "rbcat/random.hpp"

namespace rbcat {

// ---------------------------------------------------------------------------
// PrefixView

PrefixView::PrefixView(const BitString& bits, QueryLog* log)
    : bits_(&bits), domain_(bits.size()), size_(bits.size()), log_(log) {}

PrefixView::PrefixView(Natural length, BitSource source, QueryLog* log)
    : source_(std::make_shared<const BitSource>(std::move(source))),
      domain_(length),
      size_(length),
      log_(log) {}

bool PrefixView::bit(Natural pos) const {
  if (pos == 0) throw std::out_of_range("PrefixView::bit: positions are 1-based");
  if (pos > domain_) return false;
  if (log_ != nullptr) {
    ++log_->count;
    log_->positions.push_back(pos);
  }
  return bits_ != nullptr ? bits_->bit(pos) : (*source_)(pos);
}

PrefixView PrefixView::padded_to(Natural length) const {
  PrefixView out = *this;
  out.size_ = std::max(size_, length);
  return out;
}

PrefixView PrefixView::with_log(QueryLog* log) const {
  PrefixView out = *this;
  out.log_ = log;
  return out;
}

BitString PrefixView::materialize() const {
  BitString out;
  for (Natural p = 1; p <= size_; ++p) out.push_back(bit(p));
  return out;
}

// ---------------------------------------------------------------------------
// Strategy wrappers

Constructor::Constructor(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))) {}

BitString Constructor::extension(const BitString& sigma) const {
  return extension(PrefixView(sigma));
}

IndexedConstructor::IndexedConstructor(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::make_shared<const Fn>(std::move(fn))) {}

BitString IndexedConstructor::extension(Natural i, const BitString& sigma) const {
  return extension(i, PrefixView(sigma));
}

Constructor IndexedConstructor::at(Natural i) const {
  auto fn = fn_;
  return Constructor(name_ + "[" + std::to_string(i) + "]",
                     [fn, i](const PrefixView& sigma) { return (*fn)(i, sigma); });
}

QuerySet QuerySet::range(Natural first, Natural last) {
  QuerySet q;
  if (first <= last) q.insert_range(first, last);
  return q;
}

void QuerySet::insert_range(Natural first, Natural last) {
  if (first > last) return;
  intervals_.emplace_back(first, last);
  std::sort(intervals_.begin(), intervals_.end());
  std::vector<std::pair<Natural, Natural>> merged;
  for (const auto& iv : intervals_) {
    if (!merged.empty() && iv.first <= merged.back().second + 1) {
      merged.back().second = std::max(merged.back().second, iv.second);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

void QuerySet::unite(const QuerySet& other) {
  for (const auto& [a, b] : other.intervals_) insert_range(a, b);
}

bool QuerySet::contains(Natural pos) const noexcept {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(),
                             std::pair<Natural, Natural>{pos, ~Natural{0}});
  if (it == intervals_.begin()) return false;
  --it;
  return pos >= it->first && pos <= it->second;
}

Natural QuerySet::size() const noexcept {
  Natural total = 0;
  for (const auto& [a, b] : intervals_) total += b - a + 1;
  return total;
}

std::string QuerySet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i) os << ',';
    os << intervals_[i].first;
    if (intervals_[i].second != intervals_[i].first) os << ".." << intervals_[i].second;
  }
  os << '}';
  return os.str();
}

LocalConstructor::LocalConstructor(std::string name, BitFn bit, QuerySetFn query_set,
                                   bool divergence_is_nontermination)
    : name_(std::move(name)),
      bit_(std::make_shared<const BitFn>(std::move(bit))),
      query_set_(std::make_shared<const QuerySetFn>(std::move(query_set))),
      nontermination_(divergence_is_nontermination) {}

ExtBit LocalConstructor::ext_bit(Natural i, const BitString& sigma, Natural k) const {
  return ext_bit(i, PrefixView(sigma), k);
}

ProbabilisticLocalConstructor::ProbabilisticLocalConstructor(std::string name, BitFn bit,
                                                             LocalConstructor::QuerySetFn query_set)
    : name_(std::move(name)),
      bit_(std::make_shared<const BitFn>(std::move(bit))),
      query_set_(std::make_shared<const LocalConstructor::QuerySetFn>(std::move(query_set))) {}

ExtBit ProbabilisticLocalConstructor::ext_bit(Natural i, const BitString& sigma, Natural k,
                                              unsigned error_n, std::uint64_t seed) const {
  return ext_bit(i, PrefixView(sigma), k, error_n, seed);
}

// ---------------------------------------------------------------------------
// Operations

BitString ext_of(const IndexedConstructor& h, Natural i, const BitString& sigma) {
  return h.extension(i, sigma);
}

BitString materialize_local(const LocalConstructor& h, Natural i, const PrefixView& sigma,
                            Natural cap) {
  BitString w;
  for (Natural k = 1;; ++k) {
    const ExtBit b = h.ext_bit(i, sigma, k);
    if (!b) return w;
    if (k > cap) {
      const std::string msg = h.name() + ": no ⊥ within " + std::to_string(cap) +
                              " bits at |σ| = " + std::to_string(sigma.size());
      if (h.divergence_is_nontermination()) throw NonTermination(msg);
      throw ExtensionCap(msg);
    }
    w.push_back(*b);
  }
}

BitString materialize_local(const LocalConstructor& h, Natural i, const BitString& sigma,
                            Natural cap) {
  return materialize_local(h, i, PrefixView(sigma), cap);
}

IndexedConstructor as_indexed(const LocalConstructor& h, Natural cap) {
  return IndexedConstructor(h.name(), [h, cap](Natural i, const PrefixView& sigma) {
    return materialize_local(h, i, sigma, cap);
  });
}

Constructor local_at(const LocalConstructor& h, Natural i, Natural cap) {
  return as_indexed(h, cap).at(i);
}

std::string MeetsVerdict::to_string() const {
  if (met) return "Met{" + (witness->empty() ? std::string("λ") : witness->to_string()) + "}";
  return "NotMetUpTo{" + std::to_string(horizon) + "}";
}

namespace {

// Shared τ-scan. `matches(tau, chi_at)` decides h(τ) ⊑ χ for one τ ⊑ χ.
template <typename Matches, typename ChiAt>
MeetsVerdict scan_prefixes(Natural min_length, Natural max_length, Natural horizon,
                           ChiAt&& chi_at, Matches&& matches) {
  BitString tau;
  for (Natural p = 1; p <= min_length; ++p) tau.push_back(chi_at(p));
  for (Natural len = min_length;; ++len) {
    if (matches(tau)) return {true, tau, horizon};
    if (len >= max_length) break;
    tau.push_back(chi_at(len + 1));
  }
  return {false, std::nullopt, horizon};
}

}  // namespace

MeetsVerdict meets_check(const Constructor& h, const Language& lang, Natural horizon,
                         Natural min_length) {
  auto chi_at = [&](Natural p) { return lang.at_position(p); };
  return scan_prefixes(min_length, horizon, horizon, chi_at, [&](const BitString& tau) {
    const BitString w = h.extension(tau);
    for (Natural k = 1; k <= w.size(); ++k) {
      if (w.bit(k) != chi_at(tau.size() + k)) return false;
    }
    return true;
  });
}

MeetsVerdict meets_check(const LocalConstructor& h, Natural i, const Language& lang,
                         Natural horizon, Natural min_length, Natural cap) {
  auto chi_at = [&](Natural p) { return lang.at_position(p); };
  return scan_prefixes(min_length, horizon, horizon, chi_at, [&](const BitString& tau) {
    const PrefixView view(tau);
    for (Natural k = 1;; ++k) {
      const ExtBit b = h.ext_bit(i, view, k);
      if (!b) return true;
      if (*b != chi_at(tau.size() + k)) return false;
      if (k > cap) {
        throw ExtensionCap(h.name() + ": extension agrees with the language beyond cap");
      }
    }
  });
}

MeetsVerdict meets_prefix(const Constructor& h, const BitString& chi) {
  auto chi_at = [&](Natural p) { return chi.bit(p); };
  return scan_prefixes(0, chi.size(), chi.size(), chi_at, [&](const BitString& tau) {
    const BitString w = h.extension(tau);
    if (tau.size() + w.size() > chi.size()) return false;
    for (Natural k = 1; k <= w.size(); ++k) {
      if (w.bit(k) != chi.bit(tau.size() + k)) return false;
    }
    return true;
  });
}

MeetsVerdict meets_prefix(const LocalConstructor& h, Natural i, const BitString& chi) {
  auto chi_at = [&](Natural p) { return chi.bit(p); };
  return scan_prefixes(0, chi.size(), chi.size(), chi_at, [&](const BitString& tau) {
    const PrefixView view(tau);
    for (Natural k = 1;; ++k) {
      const ExtBit b = h.ext_bit(i, view, k);
      if (!b) return true;
      if (tau.size() + k > chi.size() || *b != chi.bit(tau.size() + k)) return false;
    }
  });
}

bool avoids_at(const Constructor& h, const Language& lang, const BitString& tau) {
  for (Natural p = 1; p <= tau.size(); ++p) {
    if (tau.bit(p) != lang.at_position(p)) return true;
  }
  const BitString w = h.extension(tau);
  for (Natural k = 1; k <= w.size(); ++k) {
    if (w.bit(k) != lang.at_position(tau.size() + k)) return true;
  }
  return false;
}

IndexedConstructor union_combine(TripleFn h, std::string name) {
  auto fn = std::make_shared<const TripleFn>(std::move(h));
  return IndexedConstructor(std::move(name), [fn](Natural index, const PrefixView& sigma) {
    const auto [i, j] = cantor_unpair(index);
    return (*fn)(i, j, sigma);
  });
}

std::string QuerySetReport::to_string() const {
  if (pass) return "PASS (" + std::to_string(evaluations) + " evaluations)";
  return "FAIL{position " + std::to_string(violation->position) + ", trial " +
         std::to_string(violation->trial) + ", i=" + std::to_string(violation->i) +
         ", k=" + std::to_string(violation->k) + "}";
}

QuerySetReport enforce_query_set(const LocalConstructor& h, std::span<const QueryTrial> trials) {
  QuerySetReport report;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const QueryTrial& trial = trials[t];
    if (log_length(trial.sigma.size()) > trial.n) {
      throw std::invalid_argument("enforce_query_set: trial " + std::to_string(t) +
                                  " has ⌈log₂(|σ|+1)⌉ > n");
    }
    const QuerySet allowed = h.query_set(trial.n, trial.i, trial.k);
    for (Natural i = 0; i <= trial.i; ++i) {
      for (Natural k = 1; k <= trial.k; ++k) {
        QueryLog log;
        const PrefixView view(trial.sigma, &log);
        (void)h.ext_bit(i, view, k);
        ++report.evaluations;
        for (Natural pos : log.positions) {
          if (!allowed.contains(pos)) {
            report.pass = false;
            report.violation = QueryViolation{t, i, k, pos};
            return report;
          }
        }
      }
    }
  }
  return report;
}

std::vector<QueryTrial> random_query_trials(std::size_t count, std::uint64_t seed, Natural max_i,
                                            Natural max_k, Natural max_length) {
  std::vector<QueryTrial> trials;
  std::uint64_t state = derive_seed(seed, {0x9E7});
  for (std::size_t t = 0; t < count; ++t) {
    QueryTrial trial;
    trial.i = splitmix64(state) % (max_i + 1);
    trial.k = 1 + splitmix64(state) % max_k;
    const Natural len = splitmix64(state) % (max_length + 1);
    for (Natural p = 0; p < len; ++p) trial.sigma.push_back(splitmix64(state) & 1U);
    trial.n = log_length(len);
    trials.push_back(std::move(trial));
  }
  return trials;
}

ProbabilisticLocalConstructor amplify(const ProbabilisticLocalConstructor& ph, unsigned reps) {
  if (reps == 0 || reps % 2 == 0) throw std::invalid_argument("amplify: reps must be odd");
  return ProbabilisticLocalConstructor(
      ph.name() + "^x" + std::to_string(reps),
      [ph, reps](Natural i, const PrefixView& sigma, Natural k, unsigned error_n,
                 std::uint64_t seed) -> ExtBit {
        unsigned bottoms = 0;
        unsigned ones = 0;
        unsigned zeros = 0;
        for (unsigned r = 0; r < reps; ++r) {
          const std::uint64_t s = r == 0 ? seed : derive_seed(seed, {0xA3F, r});
          const ExtBit b = ph.ext_bit(i, sigma, k, error_n, s);
          if (!b) {
            ++bottoms;
          } else if (*b) {
            ++ones;
          } else {
            ++zeros;
          }
        }
        if (bottoms > ones + zeros) return std::nullopt;
        return ones >= zeros;
      },
      [ph](Natural n, Natural i, Natural k) { return ph.query_set(n, i, k); });
}

ProbabilisticLocalConstructor as_probabilistic(const LocalConstructor& h) {
  return ProbabilisticLocalConstructor(
      h.name(),
      [h](Natural i, const PrefixView& sigma, Natural k, unsigned, std::uint64_t) {
        return h.ext_bit(i, sigma, k);
      },
      [h](Natural n, Natural i, Natural k) { return h.query_set(n, i, k); });
}

namespace {

// Calls fn(σ) for every σ with |σ| <= max_len, shortest first.
template <typename Fn>
void for_each_string_up_to(Natural max_len, Natural max_strings, const char* what, Fn&& fn) {
  if (max_len >= 62 || (Natural{2} << max_len) - 1 > max_strings) {
    throw ScaleGuard(std::string(what) + ": enumerating all strings of length <= " +
                     std::to_string(max_len) + " exceeds cap " + std::to_string(max_strings));
  }
  for (Natural len = 0; len <= max_len; ++len) {
    const Natural count = Natural{1} << len;
    BitString s = BitString::zeros(len);
    for (Natural v = 0; v < count; ++v) {
      for (Natural b = 0; b < len; ++b) s.set_bit(b + 1, (v >> (len - 1 - b)) & 1U);
      fn(s);
    }
  }
}

}  // namespace

std::vector<Natural> bound_extension_sizes(const LocalConstructor& h, Natural i_max,
                                           const BoundCaps& caps) {
  std::vector<Natural> f{1};
  Natural prefix_bound = 0;
  for (Natural i = 1; i <= i_max; ++i) {
    prefix_bound += f.back();
    if (i >= 63) throw ScaleGuard("bound_extension_sizes: index too large");
    Natural value = Natural{1} << i;
    for_each_string_up_to(prefix_bound, caps.max_strings, "bound_extension_sizes",
                          [&](const BitString& sigma) {
                            const Natural len =
                                materialize_local(h, i, sigma, caps.extension_cap).size();
                            value = std::max(value, len);
                          });
    f.push_back(value);
  }
  return f;
}

Natural bound_uniform(const IndexedConstructor& h, Natural m, const BoundCaps& caps) {
  Natural best = 0;
  for_each_string_up_to(m, caps.max_strings, "bound_uniform", [&](const BitString& tau) {
    for (Natural t = 0; t <= m; ++t) {
      best = std::max<Natural>(best, tau.size() + h.extension(t, tau).size());
    }
  });
  return best;
}

std::string MeterReport::to_string() const {
  std::ostringstream os;
  os << "queries=" << counts.queries << " emitted=" << counts.emitted << " steps=" << counts.steps
     << " bound=" << bound.to_string() << " n=" << n << " t(n)=" << limit
     << (violation ? " VIOLATION" : " ok");
  return os.str();
}

MeterReport meter_report(const MeterCounts& counts, const BoundFamily& bound, Natural n) {
  MeterReport r;
  r.counts = counts;
  r.bound = bound;
  r.n = n;
  r.limit = bound_eval(bound, n);
  r.violation = BigNat(counts.queries) > r.limit || BigNat(counts.emitted) > r.limit ||
                BigNat(counts.steps) > r.limit;
  return r;
}

Natural meter_argument_size(Natural sigma_length, Natural i) {
  return log_length(sigma_length) + log_length(i);
}

MeterCounts measure_extension(const IndexedConstructor& h, Natural i, const BitString& sigma) {
  QueryLog log;
  const BitString w = h.extension(i, PrefixView(sigma, &log));
  return {log.count, w.size(), 1};
}

MeterCounts measure_local(const LocalConstructor& h, Natural i, const BitString& sigma,
                          Natural cap) {
  QueryLog log;
  const PrefixView view(sigma, &log);
  MeterCounts counts;
  for (Natural k = 1;; ++k) {
    ++counts.steps;
    const ExtBit b = h.ext_bit(i, view, k);
    if (!b) break;
    ++counts.emitted;
    if (k > cap) throw ExtensionCap(h.name() + ": no ⊥ within cap while metering");
  }
  counts.queries = log.count;
  return counts;
}

}  // namespace rbcat
