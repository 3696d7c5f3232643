#include <sstream>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/martingale.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

TEST_CASE("fairness") {
  CHECK(fairness_check(density_bettor(), 10).pass);
  CHECK(fairness_check(constant_martingale(1), 12).pass);
  CHECK(fairness_check(as_value_function(proportional_bettor(Rational(-1, 4))), 8).pass);
  const auto broken = fairness_check(broken_fixture(), 6);
  CHECK_FALSE(broken.pass);
  CHECK(broken.witness->empty());
  CHECK(broken.to_string().rfind("FAIL{", 0) == 0);
  CHECK_THROWS_AS(fairness_check(density_bettor(), 15), ScaleGuard);
  const ValueFunction negative{"negative", [](const BitString& w) { return Rational(w.size() == 1 && w.bit(1) ? -1 : 0); }};
  CHECK_FALSE(fairness_check(negative, 3).pass);
}

TEST_CASE("capital traces") {
  const auto flat = capital_trace(constant_martingale(1), parity_language(), 8);
  CHECK(flat.size() == 9);
  for (const auto& v : flat) CHECK(v == 1);
  const auto empty = capital_trace(density_bettor(), empty_language(), 2);
  CHECK(empty[2] == Rational(3, 2));
  const auto full = capital_trace(density_bettor(), full_language(), 600);
  for (const auto& v : full) REQUIRE(v <= 1);
}

TEST_CASE("density bettor level gains") {
  // With every level empty, level n's share c_n grows to c_n 2^n once its n
  // bets are settled.
  const Martingale d = density_bettor();
  for (Natural n = 1; n <= 5; ++n) {
    const Natural last = first_rank_of_length(static_cast<unsigned>(n)) + n;
    const Rational before = d.capital(BitString::zeros(last - n));
    const Rational after = d.capital(BitString::zeros(last));
    CHECK(after - before == density_share(n) * ((Natural{1} << n) - 1));
  }
  CHECK(density_share(1) == Rational(1, 2));
  Rational sum = 0;
  for (Natural n = 1; n <= 64; ++n) sum += density_share(n);
  CHECK(sum < 1);
}

TEST_CASE("a hit in the first n strings wipes level n") {
  const Martingale d = density_bettor();
  const std::set<BitString> members{BitString::parse("00")};
  const Language l = explicit_set(members);
  const auto trace = capital_trace(d, l, 6);
  const auto empty = capital_trace(d, empty_language(), 6);
  CHECK(trace[4] == empty[3] - density_share(2));
}

TEST_CASE("empty level indicator") {
  for (Natural n = 1; n < 8; ++n) {
    CHECK(empty_level_indicator(empty_language(), n));
    CHECK_FALSE(empty_level_indicator(full_language(), n));
  }
}

TEST_CASE("capital csv") {
  std::ostringstream out;
  const auto trace = capital_trace(density_bettor(), empty_language(), 3);
  write_capital_csv(out, trace, empty_language());
  std::istringstream in(out.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "position,string,bit,capital_numerator,capital_denominator");
  CHECK(rows[1] == "0,,,1,1");
  CHECK(rows[3] == "2,0,0,3,2");
}
