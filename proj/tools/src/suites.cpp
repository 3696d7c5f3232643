#include "rbcat_tools/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rbcat/circuits.hpp"
#include "rbcat/diagonal.hpp"
#include "rbcat/errors.hpp"
#include "rbcat/game.hpp"
#include "rbcat/martingale.hpp"
#include "rbcat/random.hpp"
#include "rbcat/zoo.hpp"

namespace rbcat::tools {

void SuiteResult::check(bool ok, std::string line) {
  pass = pass && ok;
  details.push_back(std::string(ok ? "ok   " : "FAIL ") + std::move(line));
}

namespace {

template <typename Fn>
SuiteResult timed(std::string name, Fn&& body) {
  SuiteResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.check(false, std::string("unexpected exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

BitString random_bits(std::uint64_t& state, Natural max_len) {
  BitString s;
  const Natural len = splitmix64(state) % (max_len + 1);
  for (Natural p = 0; p < len; ++p) s.push_back(splitmix64(state) & 1U);
  return s;
}

struct NamedIndexed {
  std::string name;
  IndexedConstructor h;
};

std::vector<NamedIndexed> indexed_families() {
  constexpr Natural cap = Natural{1} << 16;
  return {{"identity", identity_family()},
          {"ones", ones_family()},
          {"singleton-family", singleton_family()},
          {"sparse", as_indexed(sparse_avoider(), cap)},
          {"complement-prefix", as_indexed(complement_prefix_family(), cap)},
          {"constant-one", as_indexed(constant_one(), cap)}};
}

std::vector<LocalConstructor> local_families() {
  return {sparse_avoider(), complement_prefix_family(), ones_family_local(), constant_one(),
          singleton_family_local()};
}

std::string join_counts(const std::vector<Natural>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " -> " : "") << xs[i];
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult suite_enumeration(const EnumerationParams& p) {
  return timed("enumeration", [&](SuiteResult& r) {
    Natural bad = 0;
    for (Natural i = 0; i < p.max_rank; ++i) bad += string_to_rank(rank_to_string(i)) != i;
    r.check(bad == 0, "string_to_rank(rank_to_string(i)) = i for i < " + std::to_string(p.max_rank));
    bad = 0;
    Natural count = 0;
    for (unsigned len = 0; len <= p.max_length; ++len) {
      for (Natural v = 0; v < (Natural{1} << len); ++v) {
        BitString x;
        for (unsigned b = 0; b < len; ++b) x.push_back((v >> (len - 1 - b)) & 1U);
        ++count;
        bad += rank_to_string(string_to_rank(x)) != x;
        bad += string_to_rank(x) != (Natural{1} << len) - 1 + v;
      }
    }
    r.check(bad == 0, "rank_to_string(string_to_rank(x)) = x for all " + std::to_string(count) +
                          " strings of length <= " + std::to_string(p.max_length));
    bad = 0;
    for (Natural i = 0; i + 1 < p.max_rank; ++i) bad += !length_lex_less(rank_to_string(i), rank_to_string(i + 1));
    r.check(bad == 0, "ranks follow length-lexicographic order");
  });
}

SuiteResult suite_fairness(const FairnessParams& p) {
  return timed("fairness", [&](SuiteResult& r) {
    for (const Martingale& d : {density_bettor(), constant_martingale(1), proportional_bettor(Rational(1, 3))}) {
      const auto rep = fairness_check(d, p.depth);
      r.check(rep.pass, d.name() + " (bets) depth " + std::to_string(p.depth) + ": " + rep.to_string());
      const auto vrep = fairness_check(as_value_function(d), p.depth);
      r.check(vrep.pass, d.name() + " (values) depth " + std::to_string(p.depth) + ": " + vrep.to_string());
    }
    const auto broken = fairness_check(broken_fixture(), p.depth);
    r.check(!broken.pass && broken.witness && broken.witness->empty(),
            "broken fixture rejected: " + broken.to_string());
    Rational partial = 0;
    for (Natural n = 1; n <= 64; ++n) partial += density_share(n);
    r.check(partial < 1, "sum of level shares c_1..c_64 < 1");
  });
}

SuiteResult suite_halving(const HalvingParams& p) {
  return timed("halving", [&](SuiteResult& r) {
    CircuitCaps caps;
    caps.workers = p.workers;
    for (const auto& [n, s] : p.shapes) {
      const Natural total = circuit_count(n, s, caps);
      const auto hist = table_histogram(n, s, p.sigma, caps);
      ConstraintSet z;
      const auto inputs = all_inputs(n);
      const auto steps = diagonalize_tables(hist, inputs, z);
      const auto brute = replay_brute_force(n, s, p.sigma, steps, caps);
      bool agree = hist.total() == total;
      bool halves = true;
      bool empties = true;
      std::vector<Natural> sizes{total};
      for (std::size_t j = 0; j < steps.size(); ++j) {
        agree = agree && steps[j].before == brute[j].before && steps[j].ones == brute[j].ones &&
                steps[j].zeros == brute[j].zeros && steps[j].after == brute[j].after && steps[j].bit == brute[j].bit;
        halves = halves && steps[j].after <= steps[j].before / 2;
        const double bits = static_cast<double>(j + 1);
        if (bits > std::log2(static_cast<double>(total))) empties = empties && steps[j].after == 0;
        sizes.push_back(steps[j].after);
      }
      const std::string shape = "(n=" + std::to_string(n) + ", s=" + std::to_string(s) + ") ";
      r.check(agree, shape + "brute-force replay agrees on every bit");
      r.check(halves, shape + "consistent set sizes " + join_counts(sizes));
      r.check(empties, shape + "empty once #bits > log2(" + std::to_string(total) + ")" +
                           (static_cast<double>(steps.size()) > std::log2(static_cast<double>(total))
                                ? ""
                                : " (not reached within 2^n bits)"));
    }
  });
}

SuiteResult suite_derand(const DerandParams& p) {
  return timed("derand", [&](SuiteResult& r) {
    for (unsigned s : p.size_bounds) {
      for (const BitString& sigma : p.sigmas) {
        const auto trace = derand_diagonalizer_trace(p.b, [s](unsigned) { return s; }, sigma);
        const unsigned w = trace.width;
        const std::string tag = "s=" + std::to_string(s) + " |σ|=" + std::to_string(sigma.size()) +
                                " w=" + std::to_string(w) + ": ";
        std::set<Natural> coding;
        for (const BitString& u : all_inputs(w)) coding.insert(coding_position(u, p.b));
        bool layout = !trace.steps.empty();
        for (Natural k = 1; k <= trace.extension.size(); ++k) {
          const Natural pos = sigma.size() + k;
          if (!coding.count(pos)) layout = layout && !trace.extension.bit(k);
        }
        for (const auto& st : trace.steps) layout = layout && coding.count(st.position);
        r.check(layout, tag + "non-coding bits are 0 and coding bits sit at 0^(2^(bw))u");

        std::vector<HalvingStep> recorded;
        for (const auto& st : trace.steps) recorded.push_back({st.z, 0, 0, 0, st.bit, 0});
        const Natural total = s == 0 ? 0 : circuit_count(w, s - 1);
        bool majority = true;
        Natural final_size = 0;
        if (s >= 1) {
          const auto brute = replay_brute_force(w, s - 1, sigma, recorded);
          for (std::size_t j = 0; j < brute.size(); ++j) {
            majority = majority && recorded[j].bit == !(brute[j].ones >= brute[j].zeros) &&
                       brute[j].before == trace.steps[j].before;
          }
          final_size = brute.back().after;
        }
        r.check(majority, tag + "every coding bit = 1 - majority of brute-forced consistent set");
        const Natural capacity = Natural{1} << trace.steps.size();
        if (total < capacity) {
          r.check(final_size == 0, tag + std::to_string(total) + " circuits < 2^" +
                                       std::to_string(trace.steps.size()) + ": final set empty");
        } else {
          r.check(final_size <= total >> trace.steps.size(),
                  tag + "final set " + std::to_string(final_size) + " <= " + std::to_string(total) + "/2^" +
                      std::to_string(trace.steps.size()));
        }
      }
    }
  });
}

SuiteResult suite_diag_global(const DiagGlobalParams& p) {
  return timed("diag-global", [&](SuiteResult& r) {
    unsigned blocks = 0;
    while ((Natural{2} << blocks) - 1 < p.positions) ++blocks;
    blocks = std::max(blocks, p.meet_upto);
    for (const auto& fam : indexed_families()) {
      const BitString direct = diag_global_prefix(fam.h, blocks);
      const Language lang = diag_language_global(fam.h);
      const bool same = chi_prefix(lang, p.positions) == direct.prefix(p.positions);
      r.check(same, fam.name + ": per-string membership = block construction on " +
                        std::to_string(p.positions) + " positions");
      bool meets = true;
      for (Natural i = 1; i <= p.meet_upto; ++i) {
        const BitString tau = direct.prefix((Natural{1} << i) - 1);
        meets = meets && fam.h.apply(i, tau).is_prefix_of(direct) && !avoids_at(fam.h.at(i), lang, tau);
      }
      r.check(meets, fam.name + ": meets h_1 .. h_" + std::to_string(p.meet_upto));
    }
    const IndexedConstructor too_long("overflow", [](Natural i, const PrefixView&) {
      return BitString::ones((Natural{1} << i) + 1);
    });
    bool overflow = false;
    try {
      (void)diag_global_prefix(too_long, 2);
    } catch (const ExtensionOverflow&) {
      overflow = true;
    }
    r.check(overflow, "extension of 2^i + 1 bits raises ExtensionOverflow");
  });
}

SuiteResult suite_diag_local(const DiagLocalParams& p) {
  return timed("diag-local", [&](SuiteResult& r) {
    for (const auto& h : local_families()) {
      try {
        const auto layout = local_diag_layout(h, p.meet_upto);
        const BitString direct = diag_local_prefix(h, layout);
        const Language lang = diag_language_local(h, layout);
        r.check(chi_prefix(lang, direct.size()) == direct,
                h.name() + ": per-string membership = block construction on " + std::to_string(direct.size()) +
                    " positions");
        bool bounded = layout.f[0] == 1;
        bool meets = true;
        for (Natural i = 0; i <= p.meet_upto; ++i) {
          bounded = bounded && layout.f[i] >= (Natural{1} << i);
          const BitString tau = direct.prefix(i == 0 ? 0 : layout.ends[i - 1]);
          const BitString w = materialize_local(h, i, tau, Natural{1} << 16);
          bounded = bounded && w.size() <= layout.f[i];
          meets = meets && (tau + w).is_prefix_of(direct);
        }
        r.check(bounded, h.name() + ": f = " + join_counts(layout.f) + " bounds every block extension");
        r.check(meets, h.name() + ": meets h_0 .. h_" + std::to_string(p.meet_upto));
      } catch (const ExtensionOverflow& e) {
        r.check(false, h.name() + ": " + e.what());
      }
    }
  });
}

SuiteResult suite_games(const GameParams& p) {
  return timed("games", [&](SuiteResult& r) {
    const Natural max_moves = Natural{1} << 20;
    for (const auto& fam : indexed_families()) {
      const Constructor g = indexed_to_winning(fam.h);
      for (const Constructor& f : standard_adversaries(p.seed)) {
        const auto t = run_game(f, g, max_moves, p.horizon);
        bool meets = true;
        for (Natural i = 0; i <= p.meet_upto; ++i) meets = meets && meets_prefix(fam.h.at(i), t.result_prefix).met;
        r.check(meets && extends_all_rounds(t, f, g),
                fam.name + " vs " + f.name() + ": result (" + std::to_string(t.result_prefix.size()) +
                    " bits) meets h_0 .. h_" + std::to_string(p.meet_upto) + " and extends every round");
      }
    }
    const LocalConstructor hl = singleton_family_local();
    const Constructor gl = local_at(indexed_to_winning_loc(hl), 0, Natural{1} << 16);
    for (const Constructor& f : standard_adversaries(p.seed)) {
      const auto t = run_game(f, gl, max_moves, p.horizon);
      bool meets = true;
      for (Natural i = 0; i <= p.meet_upto; ++i) meets = meets && meets_prefix(hl, i, t.result_prefix).met;
      r.check(meets && extends_all_rounds(t, f, gl),
              "local " + hl.name() + " vs " + f.name() + ": meets h_0 .. h_" + std::to_string(p.meet_upto));
    }
    const Constructor g0 = indexed_to_winning(singleton_family());
    const IndexedConstructor back = winning_to_indexed(g0);
    std::uint64_t state = derive_seed(p.seed, {0x51});
    unsigned bad = 0;
    for (unsigned t = 0; t < p.identity_trials; ++t) {
      const Natural k = splitmix64(state) % 41;
      const BitString sigma = random_bits(state, 30);
      const BitString padded = sigma + BitString::zeros(monus(k, sigma.size()));
      const BitString expected = BitString::zeros(monus(k, sigma.size())) + g0.extension(padded);
      bad += back.extension(k, sigma) != expected;
    }
    r.check(bad == 0, "winning_to_indexed(g)_k(σ) = g(σ 0^(k ∸ |σ|)) on " + std::to_string(p.identity_trials) +
                          " random (k, σ)");
  });
}

SuiteResult suite_sparse(const SparseParams& p) {
  return timed("sparse", [&](SuiteResult& r) {
    const Polynomial poly = Polynomial::parse("1,1");
    const Natural threshold = sparse_threshold(poly);
    r.check(threshold == 6, "T(n+1) = " + std::to_string(threshold));
    const LocalConstructor h = sparse_avoider();
    for (std::uint64_t seed : p.seeds) {
      const Language lang = make_sparse(poly, seed);
      bool census_ok = true;
      for (unsigned n = 0; n <= 10; ++n) census_ok = census_ok && census(lang, n) <= poly(n);
      const auto verdict = meets_check(h, 0, lang, p.horizon, threshold);
      r.check(census_ok && !verdict.met, "seed " + std::to_string(seed) + ": prefixes of length " +
                                             std::to_string(threshold) + ".." + std::to_string(p.horizon) + " " +
                                             verdict.to_string());
    }
    const auto full = meets_check(h, 0, full_language(), 8);
    r.check(full.met && full.witness->empty(), "full language: " + full.to_string());
  });
}

namespace {

/// Finite languages avoiding λ and s_1 with no two consecutive members.
std::vector<std::set<Natural>> finite_test_languages(unsigned count, std::uint64_t seed) {
  std::vector<std::set<Natural>> out{{}};
  std::uint64_t state = derive_seed(seed, {0xF1});
  while (out.size() < count) {
    std::set<Natural> ranks;
    const unsigned members = 1 + splitmix64(state) % 4;
    while (ranks.size() < members) {
      const Natural rank = 2 + splitmix64(state) % 120;
      if (!ranks.count(rank - 1) && !ranks.count(rank + 1)) ranks.insert(rank);
    }
    out.push_back(ranks);
  }
  return out;
}

}  // namespace

SuiteResult suite_sigma2(const Sigma2Params& p) {
  return timed("sigma2", [&](SuiteResult& r) {
    const LocalConstructor h = sigma2_avoider(finite_languages_predicate(), full_language());
    Natural tested = 0;
    Natural longest = 0;
    bool finite = true;
    for (unsigned len = 0; len <= p.max_prefix_length; ++len) {
      for (Natural v = 0; v < (Natural{1} << len); ++v) {
        BitString sigma;
        for (unsigned b = 0; b < len; ++b) sigma.push_back((v >> (len - 1 - b)) & 1U);
        try {
          longest = std::max<Natural>(longest, materialize_local(h, 0, sigma, Natural{1} << 16).size());
        } catch (const ExtensionCap&) {
          finite = false;
        }
        ++tested;
      }
    }
    r.check(finite, "⊥ reached on all " + std::to_string(tested) + " prefixes of length <= " +
                        std::to_string(p.max_prefix_length) + " (longest extension " + std::to_string(longest) + ")");
    for (const auto& ranks : finite_test_languages(p.languages, p.seed)) {
      std::set<BitString> members;
      std::string label = "{";
      for (Natural rank : ranks) {
        members.insert(rank_to_string(rank));
        label += (label.size() > 1 ? "," : "") + std::string("s_") + std::to_string(rank);
      }
      label += "}";
      const auto verdict = meets_check(h, 0, explicit_set(members), p.horizon);
      r.check(!verdict.met, "avoids " + label + ": " + verdict.to_string());
    }
    bool guard = false;
    try {
      (void)materialize_local(sigma2_avoider(finite_languages_predicate(), empty_language()), 0,
                              BitString::parse("0"), 4096);
    } catch (const NonTermination&) {
      guard = true;
    }
    r.check(guard, "A = empty (all finite variants in X) raises NonTermination");
  });
}

SuiteResult suite_generic(const GenericParams& p) {
  return timed("generic", [&](SuiteResult& r) {
    const auto hs = default_generic_strategies();
    const auto layout = generic_blocks(hs, p.k);
    const Language g = generic_builder(hs, p.k);
    for (Natural i = 1; i <= p.k; ++i) {
      const BitString tau = layout.prefix.prefix(layout.block_ends[2 * i - 2]);
      const BitString w = materialize_local(hs[i - 1], i, tau, Natural{1} << 16);
      const auto verdict = meets_check(hs[i - 1], i, g, p.horizon);
      r.check((tau + w).is_prefix_of(layout.prefix) && verdict.met,
              "meets h_" + std::to_string(i) + " (" + hs[i - 1].name() + ") at |τ| = " + std::to_string(tau.size()));
    }
    std::vector<Natural> empty_levels;
    for (Natural n = 1; n < 63 && (Natural{1} << n) + n - 1 <= p.horizon; ++n) {
      if (empty_level_indicator(g, n)) empty_levels.push_back(n);
    }
    r.check(empty_levels.size() >= 2, std::to_string(empty_levels.size()) + " empty levels within horizon");
    const auto trace = capital_trace(density_bettor(), g, p.horizon);
    unsigned records = 0;
    for (Natural i = 1; i <= p.k; ++i) {
      const Natural start = layout.block_ends[2 * i - 1];
      const Natural end = layout.block_ends[2 * i];
      if (end > p.horizon) break;
      bool completes = false;
      for (Natural n : empty_levels) {
        const Natural last = (Natural{1} << n) + n - 1;
        completes = completes || (last > start && last <= end);
      }
      if (!completes) continue;
      const Rational before = *std::max_element(trace.begin(), trace.begin() + start + 1);
      const bool record = trace[end] > before;
      records += record;
      std::ostringstream os;
      os << "padded block B_" << 2 * i << " ends at " << end << " with capital " << trace[end] << " > " << before;
      r.check(record, os.str());
    }
    r.check(records >= 2, std::to_string(records) + " capital records after empty-level blocks");
    const auto full = capital_trace(density_bettor(), full_language(), p.horizon);
    r.check(*std::max_element(full.begin(), full.end()) <= 1, "full language: capital never exceeds 1");
  });
}

SuiteResult suite_union(const UnionParams& p) {
  return timed("union", [&](SuiteResult& r) {
    const TripleFn h = [](Natural i, Natural j, const PrefixView& sigma) {
      BitString w = BitString::ones(i) + BitString::zeros(j);
      for (Natural q = 1; q <= std::min<Natural>(sigma.size(), 3); ++q) w.push_back(!sigma.bit(q));
      return w;
    };
    const IndexedConstructor u = union_combine(h);
    std::uint64_t state = derive_seed(p.seed, {0x77});
    unsigned bad = 0;
    for (unsigned t = 0; t < p.trials; ++t) {
      const Natural i = splitmix64(state) % 30;
      const Natural j = splitmix64(state) % 30;
      const BitString sigma = random_bits(state, 20);
      bad += u.extension(cantor_pair(i, j), sigma) != h(i, j, PrefixView(sigma));
    }
    r.check(bad == 0, "union_combine(h)_<i,j>(σ) = h(i, j, σ) on " + std::to_string(p.trials) + " random triples");
    const IndexedConstructor ones = union_combine(
        [](Natural i, Natural j, const PrefixView&) { return BitString::ones(i + j); });
    r.check(ones.extension(8, BitString::parse("0")) == BitString::parse("111"), "pair(1,2) = 8 gives 111");
  });
}

namespace {

/// Correct with probability `correct`; otherwise one of the two wrong
/// outcomes in {0, 1, ⊥}, chosen uniformly.
ProbabilisticLocalConstructor noisy(const LocalConstructor& h, double correct) {
  return ProbabilisticLocalConstructor(
      "noisy(" + h.name() + ")",
      [h, correct](Natural i, const PrefixView& sigma, Natural k, unsigned, std::uint64_t seed) -> ExtBit {
        std::uint64_t state = derive_seed(seed, {i, k, sigma.size()});
        const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
        const ExtBit truth = h.ext_bit(i, sigma, k);
        if (u < correct) return truth;
        const bool pick = splitmix64(state) & 1U;
        if (!truth) return pick;
        return pick ? ExtBit{!*truth} : std::nullopt;
      },
      [h](Natural n, Natural i, Natural k) { return h.query_set(n, i, k); });
}

}  // namespace

SuiteResult suite_amplify(const AmplifyParams& p) {
  return timed("amplify", [&](SuiteResult& r) {
    std::uint64_t state = derive_seed(p.seed, {0xA1});
    for (const auto& h : local_families()) {
      const auto base = as_probabilistic(h);
      const auto amp = amplify(base, 5);
      unsigned bad = 0;
      for (unsigned t = 0; t < 200; ++t) {
        const Natural i = splitmix64(state) % 5;
        const BitString sigma = random_bits(state, 12);
        const Natural k = 1 + splitmix64(state) % 14;
        const std::uint64_t seed = splitmix64(state);
        bad += amp.ext_bit(i, sigma, k, 10, seed) != h.ext_bit(i, sigma, k);
      }
      r.check(bad == 0, h.name() + ": amplified deterministic base unchanged on 200 inputs");
    }
    const LocalConstructor truth = complement_prefix_family();
    const auto base = noisy(truth, p.base_correctness);
    const auto single = amplify(base, 1);
    unsigned same = 0;
    for (unsigned t = 0; t < 200; ++t) {
      const BitString sigma = random_bits(state, 12);
      const Natural k = 1 + splitmix64(state) % 6;
      const std::uint64_t seed = splitmix64(state);
      same += single.ext_bit(3, sigma, k, 10, seed) == base.ext_bit(3, sigma, k, 10, seed);
    }
    r.check(same == 200, "reps = 1 reproduces the base run for run");
    const auto amp = amplify(base, p.reps);
    unsigned base_ok = 0;
    unsigned amp_ok = 0;
    for (unsigned t = 0; t < p.trials; ++t) {
      const Natural i = splitmix64(state) % 5;
      const BitString sigma = random_bits(state, 12);
      const Natural k = 1 + splitmix64(state) % (i + 3);
      const std::uint64_t seed = derive_seed(p.seed, {0xB0, t});
      const ExtBit want = truth.ext_bit(i, sigma, k);
      base_ok += base.ext_bit(i, sigma, k, 10, seed) == want;
      amp_ok += amp.ext_bit(i, sigma, k, 10, seed) == want;
    }
    const double base_rate = static_cast<double>(base_ok) / p.trials;
    const double rate = static_cast<double>(amp_ok) / p.trials;
    std::ostringstream os;
    os << "base correctness " << base_rate << ", amplified x" << p.reps << " correctness " << rate
       << " over " << p.trials << " trials (need >= " << p.required << ")";
    r.check(rate >= p.required, os.str());
  });
}

SuiteResult suite_query_sets(const QuerySetParams& p) {
  return timed("query-sets", [&](SuiteResult& r) {
    std::vector<LocalConstructor> hs = local_families();
    hs.push_back(sigma2_avoider(finite_languages_predicate(), full_language()));
    hs.push_back(indexed_to_winning_loc(singleton_family_local()));
    hs.push_back(indexed_to_winning_loc(complement_prefix_family()));
    const auto trials = random_query_trials(p.trials, p.seed, 6, 8, 64);
    for (const auto& h : hs) {
      const auto report = enforce_query_set(h, trials);
      r.check(report.pass, h.name() + ": " + report.to_string());
    }
    const auto report = enforce_query_set(query_violation_fixture(), trials);
    r.check(!report.pass && report.violation->position == 1, "violation fixture: " + report.to_string());
  });
}

std::vector<std::string> suite_names() {
  return {"enumeration", "fairness", "halving", "derand", "diag-global", "diag-local", "games",
          "sparse",      "sigma2",   "generic", "union",  "amplify",     "query-sets"};
}

SuiteResult run_suite(const std::string& name) {
  static const std::map<std::string, std::function<SuiteResult()>> table = {
      {"enumeration", [] { return suite_enumeration(); }}, {"fairness", [] { return suite_fairness(); }},
      {"halving", [] { return suite_halving(); }},         {"derand", [] { return suite_derand(); }},
      {"diag-global", [] { return suite_diag_global(); }}, {"diag-local", [] { return suite_diag_local(); }},
      {"games", [] { return suite_games(); }},             {"sparse", [] { return suite_sparse(); }},
      {"sigma2", [] { return suite_sigma2(); }},           {"generic", [] { return suite_generic(); }},
      {"union", [] { return suite_union(); }},             {"amplify", [] { return suite_amplify(); }},
      {"query-sets", [] { return suite_query_sets(); }}};
  auto it = table.find(name);
  if (it == table.end()) throw ConfigError("unknown suite '" + name + "'");
  return it->second();
}

}  // namespace rbcat::tools
