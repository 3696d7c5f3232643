#include "rbcat/game.hpp"

#include <mutex>

#include "rbcat/errors.hpp"
#include "rbcat/random.hpp"

namespace rbcat {

BitString GameTranscript::state(Natural moves_played) const {
  if (moves_played == 0) return {};
  return result_prefix.prefix(moves.at(moves_played - 1).state_length);
}

std::vector<BitString> GameTranscript::round_states() const {
  std::vector<BitString> out;
  for (const auto& m : moves) {
    if (m.player == 2) out.push_back(result_prefix.prefix(m.state_length));
  }
  return out;
}

GameTranscript run_game(const Constructor& f, const Constructor& g, Natural max_moves, Natural horizon) {
  GameTranscript t;
  BitString& state = t.result_prefix;
  while (t.moves.size() < max_moves && state.size() < horizon) {
    const bool second = t.moves.size() % 2 == 1;
    const BitString w = (second ? g : f).extension(state);
    if (second && w.empty()) {
      throw PlayerIIStalled("Player II (" + g.name() + ") did not extend a state of length " +
                            std::to_string(state.size()));
    }
    state.append(w);
    t.moves.push_back({t.moves.size(), second ? 2 : 1, state.size(), w.size()});
  }
  return t;
}

bool extends_all_rounds(const GameTranscript& t, const Constructor& f, const Constructor& g) {
  BitString s;
  const Natural rounds = t.moves.size() / 2;
  for (Natural i = 0; i < rounds; ++i) {
    s = g.apply(f.apply(s));
    if (!s.is_prefix_of(t.result_prefix)) return false;
  }
  return true;
}

Constructor identity_adversary() {
  return Constructor("identity", [](const PrefixView&) { return BitString{}; });
}

Constructor append_zero_adversary() {
  return Constructor("append-0", [](const PrefixView&) { return BitString::parse("0"); });
}

Constructor random_adversary(std::uint64_t seed) {
  return Constructor("random(" + std::to_string(seed) + ")", [seed](const PrefixView& sigma) {
    std::uint64_t h = derive_seed(seed, {sigma.size()});
    for (Natural p = 1; p <= sigma.size(); ++p) {
      h = derive_seed(h, {sigma.bit(p) ? 1U : 0U});
    }
    std::uint64_t state = h;
    const Natural len = 1 + splitmix64(state) % 3;
    BitString w;
    for (Natural k = 0; k < len; ++k) w.push_back(splitmix64(state) & 1U);
    return w;
  });
}

std::vector<Constructor> standard_adversaries(std::uint64_t seed) {
  return {identity_adversary(), append_zero_adversary(), random_adversary(seed)};
}

IndexedConstructor winning_to_indexed(const Constructor& g) {
  return IndexedConstructor("indexed(" + g.name() + ")", [g](Natural k, const PrefixView& sigma) {
    const Natural pad = monus(k, sigma.size());
    return BitString::zeros(pad) + g.extension(sigma.padded_to(k));
  });
}

namespace {

BitString read_prefix(const PrefixView& sigma, Natural len) {
  BitString tau;
  for (Natural p = 1; p <= len; ++p) tau.push_back(sigma.bit(p));
  return tau;
}

/// h(τ) = τw ⊑ σ, reading σ only past τ.
bool fits_inside(const PrefixView& sigma, Natural tau_len, const BitString& w) {
  if (tau_len + w.size() > sigma.size()) return false;
  for (Natural k = 1; k <= w.size(); ++k) {
    if (sigma.bit(tau_len + k) != w.bit(k)) return false;
  }
  return true;
}

}  // namespace

Constructor indexed_to_winning(const IndexedConstructor& h) {
  return Constructor("winning(" + h.name() + ")", [h](const PrefixView& sigma) {
    const BitString fallback = BitString::parse("0");
    if (sigma.size() == 0) return fallback;
    const Natural n = log_length(sigma.size());
    const Natural scan = std::min<Natural>(n, sigma.size());
    const BitString head = read_prefix(sigma, scan);
    for (Natural t = 0; t <= n; ++t) {
      bool met = false;
      for (Natural len = 0; len <= scan && !met; ++len) {
        met = fits_inside(sigma, len, h.extension(t, head.prefix(len)));
      }
      if (!met) {
        BitString w = h.extension(t, sigma);
        return w.empty() ? fallback : w;
      }
    }
    return fallback;
  });
}

LocalConstructor indexed_to_winning_loc(const LocalConstructor& h, const BoundCaps& caps) {
  struct Memo {
    std::mutex mu;
    std::vector<Natural> f{0};
  };
  auto memo = std::make_shared<Memo>();
  const IndexedConstructor global = as_indexed(h, caps.extension_cap);
  // Largest m >= 1 with f(m) <= n, or 0 if there is none.
  auto bound_index = [memo, global, caps](Natural n) {
    std::lock_guard lock(memo->mu);
    Natural m = 0;
    while (true) {
      const Natural next = m + 1;
      if (next >= memo->f.size()) memo->f.push_back(bound_uniform(global, next, caps));
      if (memo->f[next] > n) return m;
      m = next;
    }
  };
  return LocalConstructor(
      "winning-loc(" + h.name() + ")",
      [h, caps, bound_index](Natural, const PrefixView& sigma, Natural k) -> ExtBit {
        if (k == 1) return false;
        const Natural n = log_length(sigma.size());
        const Natural b = bound_index(n);
        const BitString head = read_prefix(sigma, std::min<Natural>(b, sigma.size()));
        for (Natural t = 0; t <= b && b >= 1; ++t) {
          bool met = false;
          for (Natural len = 0; len <= head.size() && !met; ++len) {
            const BitString tau = head.prefix(len);
            met = fits_inside(sigma, len, materialize_local(h, t, tau, caps.extension_cap));
          }
          if (!met) return h.ext_bit(t, sigma.padded_to(sigma.size() + 1), k - 1);
        }
        return std::nullopt;
      },
      [h](Natural n, Natural, Natural k) {
        QuerySet q = QuerySet::range(1, n);
        q.unite(h.query_set(n + 1, n, k));
        return q;
      });
}

}  // namespace rbcat
