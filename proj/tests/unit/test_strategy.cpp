#include <random>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/random.hpp"
#include "rbcat/strategy.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

namespace {

LocalConstructor immediate_bottom() {
  return LocalConstructor(
      "bottom", [](Natural, const PrefixView&, Natural) -> ExtBit { return std::nullopt; },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

LocalConstructor double_ones() {
  return LocalConstructor(
      "double-ones",
      [](Natural, const PrefixView& s, Natural k) -> ExtBit {
        if (k > 2 * s.size()) return std::nullopt;
        return true;
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

}  // namespace

TEST_CASE("ext_of examples") {
  CHECK(ext_of(singleton_family(), 0, BitString::parse("00")).size() == 1);
  CHECK(singleton_avoider(empty_language()).extension(BitString::parse("00")) == BitString::parse("1"));
  CHECK(ext_of(identity_family(), 3, BitString::parse("01")).empty());
  CHECK(ext_of(as_indexed(sparse_avoider(), 64), 1, BitString::parse("0110")) == BitString::parse("1111"));
}

TEST_CASE("materialize_local") {
  CHECK(materialize_local(sparse_avoider(), 1, BitString::parse("0110"), 16) == BitString::parse("1111"));
  CHECK(materialize_local(immediate_bottom(), 3, BitString::parse("01"), 4).empty());
  CHECK_THROWS_AS(materialize_local(double_ones(), 0, BitString::parse("010"), 4), ExtensionCap);
  CHECK(materialize_local(double_ones(), 0, BitString::parse("010"), 6) == BitString::ones(6));
}

TEST_CASE("meets_check verdicts") {
  const Language parity = parity_language();
  const auto v = meets_check(singleton_avoider(parity), parity, 64);
  CHECK_FALSE(v.met);
  CHECK(v.to_string() == "NotMetUpTo{64}");
  const auto m = meets_check(sparse_avoider(), 0, full_language(), 8);
  CHECK(m.met);
  CHECK(m.to_string() == "Met{λ}");
  const auto later = meets_check(sparse_avoider(), 0, full_language(), 8, 1);
  CHECK(later.met);
  CHECK(later.witness->size() == 1);
}

TEST_CASE("meets_check finds the constructed prefix of a size diagonalizer") {
  const Constructor h = size_diagonalizer(1);
  const BitString tau = BitString::parse("011");
  const BitString chi = h.apply(tau);
  const Language lang = explicit_prefix(chi);
  CHECK(meets_check(h, lang, 32).witness == BitString{});
  const auto v = meets_check(h, lang, 32, tau.size());
  REQUIRE(v.met);
  CHECK(v.witness == tau);
}

TEST_CASE("meets_prefix on a finite sequence") {
  const Constructor ones = ones_family().at(2);
  CHECK(meets_prefix(ones, BitString::parse("0110")).met);
  CHECK_FALSE(meets_prefix(ones, BitString::parse("0000")).met);
  CHECK(meets_prefix(constant_one(), 0, BitString::parse("1")).met);
}

TEST_CASE("avoids_at") {
  CHECK(avoids_at(singleton_avoider(full_language()), full_language(), BitString::parse("1")));
  CHECK_FALSE(avoids_at(identity_family().at(0), empty_language(), BitString::parse("00")));
}

TEST_CASE("union combinator") {
  const IndexedConstructor u =
      union_combine([](Natural i, Natural j, const PrefixView&) { return BitString::ones(i + j); });
  CHECK(u.extension(8, BitString::parse("0")) == BitString::parse("111"));
  const TripleFn h = [](Natural i, Natural j, const PrefixView& s) {
    return BitString::zeros(i) + BitString::ones(j) + BitString::repeat(s.size() % 2, 1);
  };
  const IndexedConstructor hu = union_combine(h);
  CHECK(hu.extension(0, BitString::parse("1")) == h(0, 0, PrefixView(BitString::parse("1"))));
  std::uint64_t state = 42;
  for (int t = 0; t < 50; ++t) {
    const Natural idx = splitmix64(state) % 2000;
    const auto [i, j] = cantor_unpair(idx);
    BitString sigma = BitString::zeros(splitmix64(state) % 9);
    REQUIRE(hu.extension(idx, sigma) == h(i, j, PrefixView(sigma)));
  }
}

TEST_CASE("query sets") {
  const QuerySet q = QuerySet::range(3, 5);
  CHECK(q.contains(4));
  CHECK_FALSE(q.contains(6));
  QuerySet r = q;
  r.insert(6);
  r.insert_range(10, 12);
  CHECK(r.size() == 7);
  CHECK(r.intervals().size() == 2);
  const auto trials = random_query_trials(20, 3, 4, 6, 40);
  CHECK(enforce_query_set(sparse_avoider(), trials).pass);
  const auto bad = enforce_query_set(query_violation_fixture(), trials);
  CHECK_FALSE(bad.pass);
  CHECK(bad.violation->position == 1);
  CHECK(enforce_query_set(singleton_family_local(), trials).pass);
  const QueryTrial wrong{1, 0, 1, BitString::zeros(9)};
  CHECK_THROWS_AS(enforce_query_set(sparse_avoider(), std::vector<QueryTrial>{wrong}), std::invalid_argument);
}

TEST_CASE("sparse avoider bits and empty query set") {
  const LocalConstructor h = sparse_avoider();
  CHECK(h.ext_bit(0, BitString::parse("0110"), 4) == ExtBit{true});
  CHECK(h.ext_bit(0, BitString::parse("0110"), 5) == std::nullopt);
  CHECK(h.query_set(5, 3, 9).empty());
}

TEST_CASE("amplification") {
  const auto base = as_probabilistic(complement_prefix_family());
  const auto five = amplify(base, 5);
  const auto one = amplify(base, 1);
  std::uint64_t state = 1;
  for (int t = 0; t < 100; ++t) {
    BitString sigma;
    for (unsigned b = 0; b < splitmix64(state) % 10; ++b) sigma.push_back(splitmix64(state) & 1U);
    const Natural i = splitmix64(state) % 4;
    const Natural k = 1 + splitmix64(state) % 6;
    const auto seed = splitmix64(state);
    REQUIRE(five.ext_bit(i, sigma, k, 5, seed) == complement_prefix_family().ext_bit(i, sigma, k));
    REQUIRE(one.ext_bit(i, sigma, k, 5, seed) == base.ext_bit(i, sigma, k, 5, seed));
  }
  CHECK_THROWS(amplify(base, 4));
}

TEST_CASE("bound_extension_sizes and bound_uniform") {
  const auto f = bound_extension_sizes(sparse_avoider(), 3);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == 1);
  CHECK(f[1] == 2);
  CHECK(f[2] == 4);
  for (const auto& h : {complement_prefix_family(), constant_one(), ones_family_local()}) {
    const auto g = bound_extension_sizes(h, 4);
    CHECK(g[0] == 1);
    for (Natural i = 0; i < g.size(); ++i) CHECK(g[i] >= (Natural{1} << i));
  }
  for (Natural m = 0; m < 6; ++m) CHECK(bound_uniform(identity_family(), m) == m);
  CHECK(bound_uniform(as_indexed(sparse_avoider(), 64), 3) == 6);
  CHECK(bound_uniform(ones_family(), 4) == 8);
}

TEST_CASE("property: |h_t(τ)| <= bound_uniform(m) for every t, τ up to m") {
  const IndexedConstructor h = as_indexed(complement_prefix_family(), 64);
  for (Natural m = 1; m <= 5; ++m) {
    const Natural f = bound_uniform(h, m);
    for (Natural t = 0; t <= m; ++t) {
      for (Natural len = 0; len <= m; ++len) {
        for (Natural v = 0; v < (Natural{1} << len); ++v) {
          BitString tau;
          for (Natural b = 0; b < len; ++b) tau.push_back((v >> b) & 1U);
          REQUIRE(h.apply(t, tau).size() <= f);
        }
      }
    }
  }
}

TEST_CASE("meter report is diagnostic") {
  const auto counts = measure_local(sparse_avoider(), 0, BitString::parse("0110"), 64);
  CHECK(counts.queries == 0);
  CHECK(counts.emitted == 4);
  const auto report = meter_report(counts, BoundFamily::poly(2), meter_argument_size(4, 0));
  CHECK_FALSE(report.violation);
  CHECK(meter_report({100, 0, 0}, BoundFamily::poly(1), 2).violation);
}

TEST_CASE("prefix view logging and padding") {
  const BitString bits = BitString::parse("101");
  QueryLog log;
  const PrefixView v(bits, &log);
  const PrefixView padded = v.padded_to(6);
  CHECK(padded.size() == 6);
  CHECK(padded.bit(1));
  CHECK_FALSE(padded.bit(5));
  CHECK(log.positions == std::vector<Natural>{1});
  CHECK(v.materialize() == bits);
}
