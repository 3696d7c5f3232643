#include <random>

#include "doctest.h"
#include "rbcat/bitstring.hpp"
#include "rbcat/bounds.hpp"
#include "rbcat/enumeration.hpp"
#include "rbcat/errors.hpp"

using namespace rbcat;

TEST_CASE("rank_to_string examples") {
  CHECK(rank_to_string(0).empty());
  CHECK(rank_to_string(2) == BitString::parse("1"));
  CHECK(rank_to_string(4) == BitString::parse("01"));
}

TEST_CASE("string_to_rank examples") {
  CHECK(string_to_rank(BitString{}) == 0);
  CHECK(string_to_rank(BitString::parse("1")) == 2);
  CHECK(string_to_rank(BitString::parse("00")) == 3);
  CHECK_THROWS_AS(string_to_rank(BitString::zeros(64)), ScaleGuard);
}

TEST_CASE("enumeration matches a length-lex sort of all short strings") {
  std::vector<std::string> all{""};
  for (int len = 1; len <= 8; ++len) {
    for (int v = 0; v < (1 << len); ++v) {
      std::string s;
      for (int b = len - 1; b >= 0; --b) s += ((v >> b) & 1) ? '1' : '0';
      all.push_back(s);
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (std::size_t i = 0; i < all.size(); ++i) {
    REQUIRE(rank_to_string(i).to_string() == all[i]);
    REQUIRE(string_to_rank(BitString::parse(all[i])) == i);
  }
}

TEST_CASE("positions are ranks shifted by one") {
  CHECK(string_at_position(1).empty());
  CHECK(position_of(BitString::parse("1")) == 3);
  CHECK(first_rank_of_length(3) == 7);
}

TEST_CASE("monus") {
  CHECK(monus(5, 3) == 2);
  CHECK(monus(3, 5) == 0);
  CHECK(monus(0, 0) == 0);
}

TEST_CASE("log helpers") {
  CHECK(log_length(0) == 0);
  CHECK(log_length(1) == 1);
  CHECK(log_length(4) == 3);
  CHECK(ceil_log2_plus2(0) == 1);
  CHECK(ceil_log2_plus2(2) == 2);
  CHECK(ceil_log2_plus2(6) == 3);
}

TEST_CASE("cantor pairing") {
  CHECK(cantor_pair(0, 0) == 0);
  CHECK(cantor_pair(1, 0) == 1);
  CHECK(cantor_pair(0, 1) == 2);
  CHECK(cantor_pair(1, 2) == 8);
  for (Natural n = 0; n < 5000; ++n) {
    const auto [i, j] = cantor_unpair(n);
    REQUIRE(cantor_pair(i, j) == n);
  }
  CHECK_THROWS_AS(cantor_pair(Natural{1} << 40, Natural{1} << 40), ScaleGuard);
}

TEST_CASE("bitstring basics") {
  const BitString s = BitString::parse("0110");
  CHECK(s.size() == 4);
  CHECK(s.bit(2));
  CHECK_FALSE(s.bit(4));
  CHECK_THROWS_AS(s.bit(0), std::out_of_range);
  CHECK_THROWS_AS(s.bit(5), std::out_of_range);
  CHECK(s.prefix(2) == BitString::parse("01"));
  CHECK(s.slice(1, 2) == BitString::parse("11"));
  CHECK(BitString::parse("01").is_prefix_of(s));
  CHECK_FALSE(BitString::parse("1").is_prefix_of(s));
  CHECK(s.popcount() == 2);
  CHECK(BitString::parse("01") + BitString::parse("1") == BitString::parse("011"));
  CHECK_THROWS_AS(BitString::parse("012"), std::invalid_argument);
  CHECK(length_lex_less(BitString::parse("1"), BitString::parse("00")));
  CHECK_FALSE(length_lex_less(BitString::parse("00"), BitString::parse("00")));
}

TEST_CASE("bound families") {
  CHECK(bound_eval(BoundFamily::poly(2), 5) == 25);
  for (unsigned k = 1; k <= 4; ++k) CHECK(bound_eval(BoundFamily::poly(k), 1) == 1);
  CHECK(bound_eval(BoundFamily::subexp(1, 2), 16) == 16);
  CHECK(bound_eval(BoundFamily::poly(3), 0) == 1);
  CHECK(bound_eval(BoundFamily::quasipoly(1), 2) == 4);
  CHECK(bound_eval(BoundFamily::quasipolylin(1), 2) == 4);
  CHECK_THROWS(BoundFamily::subexp(1, 1));
  CHECK(BoundFamily::parse("subexp:1/2").to_string() == "subexp:1/2");
  CHECK(BoundFamily::parse("poly:3").k == 3);
}

TEST_CASE("property: bound families are monotone in n") {
  for (const auto& f : {BoundFamily::poly(2), BoundFamily::quasipoly(1), BoundFamily::quasipolylin(2),
                        BoundFamily::subexp(1, 3)}) {
    for (Natural n = 1; n < 200; ++n) REQUIRE(bound_eval(f, n) <= bound_eval(f, n + 1));
  }
}

TEST_CASE("property: random round trips") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 2000; ++t) {
    const Natural r = rng() >> 8;
    REQUIRE(string_to_rank(rank_to_string(r)) == r);
  }
}
