#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/game.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

namespace {

Constructor appender(const char* bits) {
  const BitString w = BitString::parse(bits);
  return Constructor(std::string("append-") + bits, [w](const PrefixView&) { return w; });
}

}  // namespace

TEST_CASE("run_game basics") {
  const auto t = run_game(appender("0"), appender("1"), 8, 1000);
  CHECK(t.result_prefix == BitString::parse("01010101"));
  CHECK(t.move_count() == 8);
  CHECK(t.moves[1].player == 2);
  CHECK(t.state(3) == BitString::parse("010"));
  const auto id = run_game(identity_adversary(), appender("1"), 10, 1000);
  CHECK(id.result_prefix == BitString::ones(5));
  CHECK(id.round_states().size() == 5);
  CHECK(extends_all_rounds(id, identity_adversary(), appender("1")));
  CHECK_THROWS_AS(run_game(appender("0"), identity_adversary(), 4, 100), PlayerIIStalled);
  const auto capped = run_game(identity_adversary(), appender("111"), 1000, 10);
  CHECK(capped.result_prefix.size() >= 10);
}

TEST_CASE("winning_to_indexed") {
  const IndexedConstructor h = winning_to_indexed(appender("1"));
  CHECK(h.extension(3, BitString::parse("0")) == BitString::parse("001"));
  const Constructor g = indexed_to_winning(ones_family());
  const IndexedConstructor back = winning_to_indexed(g);
  const BitString sigma = BitString::parse("0110");
  CHECK(back.extension(2, sigma) == g.extension(sigma));
  CHECK(back.extension(0, BitString{}) == g.extension(BitString{}));
}

TEST_CASE("indexed_to_winning") {
  const Constructor g = indexed_to_winning(singleton_family());
  CHECK(g.extension(BitString{}) == BitString::parse("0"));
  for (const Constructor& f : standard_adversaries()) {
    const auto t = run_game(f, g, Natural{1} << 20, Natural{1} << 10);
    CHECK(extends_all_rounds(t, f, g));
    for (Natural i = 0; i <= 4; ++i) CHECK(meets_prefix(singleton_family().at(i), t.result_prefix).met);
  }
}

TEST_CASE("local conversion") {
  const LocalConstructor gl = indexed_to_winning_loc(singleton_family_local());
  CHECK(gl.ext_bit(0, BitString::parse("0110"), 1) == ExtBit{false});
  CHECK(gl.ext_bit(0, BitString{}, 1) == ExtBit{false});
  CHECK(gl.ext_bit(0, BitString{}, 2) == std::nullopt);
  const Constructor g = local_at(gl, 0, 1 << 16);
  const auto t = run_game(identity_adversary(), g, Natural{1} << 20, Natural{1} << 10);
  for (Natural i = 0; i <= 3; ++i) CHECK(meets_prefix(singleton_family_local(), i, t.result_prefix).met);
  CHECK(enforce_query_set(gl, random_query_trials(30, 5, 5, 6, 48)).pass);
}

TEST_CASE("property: random adversaries are deterministic per seed") {
  const Constructor a = random_adversary(11);
  const Constructor b = random_adversary(11);
  for (Natural len = 0; len < 40; ++len) {
    const BitString s = BitString::zeros(len);
    const BitString e = a.extension(s);
    REQUIRE(e == b.extension(s));
    REQUIRE(e.size() >= 1);
    REQUIRE(e.size() <= 3);
  }
}
