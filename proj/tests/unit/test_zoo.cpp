#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/martingale.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

TEST_CASE("singleton avoider flips the next bit") {
  CHECK(singleton_avoider(empty_language()).extension(BitString::parse("00")) == BitString::parse("1"));
  CHECK(singleton_avoider(full_language()).extension(BitString::parse("1")) == BitString::parse("0"));
  for (const Language& l : {empty_language(), full_language(), parity_language()}) {
    CHECK(meets_check(singleton_avoider(l), l, 64).to_string() == "NotMetUpTo{64}");
  }
}

TEST_CASE("singleton family languages are pairwise distinct") {
  for (Natural a = 0; a < 6; ++a) {
    for (Natural b = a + 1; b < 6; ++b) {
      CHECK(chi_prefix(singleton_family_language(a), 64) != chi_prefix(singleton_family_language(b), 64));
    }
  }
  const LocalConstructor loc = singleton_family_local();
  const IndexedConstructor glob = singleton_family();
  for (Natural t = 0; t < 5; ++t) {
    for (Natural len = 0; len < 12; ++len) {
      const BitString s = BitString::zeros(len);
      CHECK(materialize_local(loc, t, s, 8) == glob.extension(t, s));
    }
  }
}

TEST_CASE("simple families") {
  CHECK(ones_family().extension(3, BitString::parse("0")) == BitString::parse("111"));
  CHECK(materialize_local(ones_family_local(), 2, BitString{}, 8) == BitString::parse("11"));
  CHECK(materialize_local(complement_prefix_family(), 2, BitString::parse("10"), 8) == BitString::parse("011"));
  CHECK(materialize_local(constant_one(), 7, BitString::parse("0000"), 8) == BitString::parse("1"));
}

TEST_CASE("sparse threshold against an exhaustive capacity count") {
  const Polynomial p = Polynomial::parse("1,1");
  const Natural t = sparse_threshold(p);
  CHECK(t == 6);
  auto fillable = [&](Natural m) {
    std::map<Natural, Natural> per_length;
    for (Natural r = m; r < 2 * m; ++r) ++per_length[rank_to_string(r).size()];
    for (const auto& [len, cnt] : per_length) {
      if (cnt > std::min<Natural>(p(len), Natural{1} << len)) return false;
    }
    return true;
  };
  CHECK(fillable(t - 1));
  for (Natural m = t; m < 5000; ++m) REQUIRE_FALSE(fillable(m));
}

TEST_CASE("size diagonalizer") {
  const BitString sigma = BitString::parse("0");
  const auto trace = size_diagonalizer_trace(1, sigma);
  REQUIRE(trace.steps.size() == 2);
  const BitString z = BitString::parse("0");
  CHECK(trace.steps[0].z == z);
  const auto set = consistent_set(1, 1, sigma, ConstraintSet{});
  CHECK(trace.steps[0].bit == !majority_vote(set, z, sigma));
  CHECK(size_diagonalizer(1).extension(BitString::parse("01")) == BitString::parse("11001100"));
  CHECK_THROWS_AS(size_diagonalizer_trace(1, BitString::zeros(4)), ScaleGuard);
}

TEST_CASE("property: an emptied size-diag set leaves no circuit matching the emitted bits") {
  const BitString sigma = BitString::parse("01");
  const auto trace = size_diagonalizer_trace(1, sigma);
  std::map<unsigned, std::vector<const DiagStep*>> by_length;
  for (const auto& st : trace.steps) by_length[st.inputs].push_back(&st);
  for (const auto& [len, steps] : by_length) {
    CHECK(steps.front()->before >= steps.back()->after);
    if (steps.back()->after != 0) continue;
    for (const auto& circuit : enumerate(len, steps.front()->size)) {
      bool agrees = true;
      for (const DiagStep* st : steps) agrees = agrees && eval(circuit, st->z, sigma) == st->bit;
      REQUIRE_FALSE(agrees);
    }
  }
}

TEST_CASE("derandomization diagonalizer layout") {
  const auto trace = derand_diagonalizer_trace(1, [](unsigned) { return 3U; }, BitString{});
  CHECK(trace.width == 1);
  CHECK(coding_position(BitString::parse("0"), 1) == 8);
  CHECK(coding_position(BitString::parse("1"), 1) == 9);
  CHECK(trace.extension.size() == 9);
  CHECK_FALSE(trace.extension.bit(position_of(BitString::parse("10"))));
  REQUIRE(trace.steps.size() == 2);
  const auto set = consistent_set(1, 2, BitString{}, ConstraintSet{});
  CHECK(trace.steps[0].bit == !majority_vote(set, trace.steps[0].z, BitString{}));
  const auto wide = derand_diagonalizer_trace(1, parse_schedule("4"), BitString::zeros(8));
  CHECK(wide.width == 2);
  CHECK(wide.steps.back().after == 0);
  CHECK_THROWS_AS(parse_schedule("x"), ConfigError);
}

TEST_CASE("sigma2 avoider") {
  const LocalConstructor h = sigma2_avoider(finite_languages_predicate(), full_language());
  const BitString e = materialize_local(h, 0, BitString::parse("0101"), 1 << 12);
  CHECK(e.size() == 6);
  CHECK(e == BitString::ones(6));
  CHECK(materialize_local(h, 0, BitString{}, 64) == BitString::parse("1"));
  CHECK_FALSE(meets_check(h, 0, empty_language(), 256).met);
  CHECK_THROWS_AS(materialize_local(sigma2_avoider(finite_languages_predicate(), empty_language()), 0,
                                    BitString::parse("0"), 4096),
                  NonTermination);
}

TEST_CASE("generic builder") {
  const auto one = generic_blocks({constant_one()}, 1);
  CHECK(one.prefix == BitString::parse("11") + BitString::zeros(10));
  const auto hs = default_generic_strategies();
  const auto layout = generic_blocks(hs, 3);
  CHECK(layout.block_ends == std::vector<Natural>{1, 2, 12, 24, 144, 148, 888});
  const Language g = generic_builder(hs, 3);
  CHECK(chi_prefix(g, 888) == layout.prefix);
  int empty = 0;
  for (Natural n = 1; n <= 10; ++n) empty += empty_level_indicator(g, n);
  CHECK(empty >= 2);
}

TEST_CASE("registry") {
  const auto [name, params] = parse_spec("sparse:p=1,1;seed=3");
  CHECK(name == "sparse");
  CHECK(params.at("p") == "1,1");
  CHECK(params.at("seed") == "3");
  CHECK(parse_spec("explicit:0110").second.at("value") == "0110");
  for (const auto& n : strategy_names()) CHECK_NOTHROW(make_strategy(n, {}));
  CHECK_THROWS_AS(make_strategy("nosuch", {}), ConfigError);
  CHECK_THROWS_AS(make_strategy("sparse", {{"bogus", "1"}}), ConfigError);
  CHECK_THROWS_AS(make_language("nosuch", {}), ConfigError);
  CHECK(chi_prefix(language_from_spec("explicit:bits=101"), 4) == BitString::parse("1010"));
  CHECK(chi_prefix(language_from_spec("sparse:p=1,1;seed=3"), 100) ==
        chi_prefix(make_sparse(Polynomial::parse("1,1"), 3), 100));
  const StrategySpec s = make_strategy("singleton", {{"language", "full"}});
  CHECK(as_indexed(s).extension(4, BitString::parse("1")) == BitString::parse("0"));
}
