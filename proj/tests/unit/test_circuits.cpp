#include <map>
#include <set>

#include "doctest.h"
#include "rbcat/circuits.hpp"
#include "rbcat/errors.hpp"

using namespace rbcat;

namespace {

// Independent count: gate j of a size-k circuit sees w = n + j wires and may be
// NOT (w), AND/OR on an unordered pair (2·C(w,2)) or an oracle gate on an
// ordered tuple of 1..min(n, 6) distinct wires.
Natural reference_count(unsigned n, unsigned s) {
  Natural total = n;
  for (unsigned k = 1; k <= s; ++k) {
    Natural product = 1;
    for (unsigned j = 0; j < k; ++j) {
      const Natural w = n + j;
      Natural oracle = 0;
      for (Natural a = 1; a <= std::min<Natural>(n, 6) && a <= w; ++a) {
        Natural perm = 1;
        for (Natural q = 0; q < a; ++q) perm *= w - q;
        oracle += perm;
      }
      product *= w + w * (w - 1) + oracle;
    }
    total += product;
  }
  return total;
}

OracleCircuit c(const char* text) { return OracleCircuit::parse(text); }

}  // namespace

TEST_CASE("eval examples") {
  CHECK(eval(c("g0=IN(0) out=g0"), BitString::parse("1"), BitString{}));
  CHECK_FALSE(eval(c("g0=IN(0) g1=NOT(g0) out=g1"), BitString::parse("1"), BitString{}));
  const OracleCircuit orc = c("g0=IN(0) g1=ORC(g0) out=g1");
  CHECK_FALSE(eval(orc, BitString::parse("1"), BitString::parse("010")));
  CHECK(eval(orc, BitString::parse("0"), BitString::parse("010")));
  CHECK_FALSE(eval(orc, BitString::parse("1"), BitString::parse("01")));
}

TEST_CASE("truth tables") {
  CHECK(truth_table(c("g0=IN(0) out=g0"), {}) == BitString::parse("01"));
  CHECK(truth_table(c("g0=IN(0) g1=NOT(g0) out=g1"), {}) == BitString::parse("10"));
  CHECK(truth_table(c("g0=IN(0) g1=IN(1) g2=AND(g0,g1) out=g2"), {}) == BitString::parse("0001"));
  CHECK(truth_table(c("g0=IN(0) g1=IN(1) g2=OR(g0,g1) out=g2"), {}) == BitString::parse("0111"));
}

TEST_CASE("parse / dump round trip and validation") {
  const OracleCircuit x = c("g0=IN(0) g1=IN(1) g2=ORC(g1,g0) g3=AND(g0,g2) out=g3");
  CHECK(OracleCircuit::parse(x.dump()) == x);
  CHECK(x.size() == 2);
  CHECK_THROWS_AS(c("g0=IN(0) g1=AND(g0,g0) out=g1"), MalformedCircuit);
  CHECK_THROWS_AS(c("g0=IN(0) g1=NOT(g2) out=g1"), MalformedCircuit);
  CHECK_THROWS_AS(c("g0=IN(0) g1=IN(1) g2=AND(g1,g0) out=g2"), MalformedCircuit);
  CHECK_THROWS_AS(c("g0=IN(0) g1=IN(1) g2=ORC(g0,g0) out=g2"), MalformedCircuit);
}

TEST_CASE("circuit counts match the independent formula") {
  CHECK(circuit_count(1, 0) == 1);
  CHECK(circuit_count(1, 1) >= 2);
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned s = 0; s <= 3; ++s) CHECK(circuit_count(n, s) == reference_count(n, s));
  }
  CHECK(circuit_count(2, 3) == 4762);
  CHECK(circuit_count(3, 4) == 28534491);
  CHECK_THROWS_AS(circuit_count(10, 1), ScaleGuard);
  CHECK_THROWS_AS(circuit_count(2, 6), ScaleGuard);
}

TEST_CASE("enumeration is canonical, distinct and deterministic") {
  const auto a = enumerate(2, 2);
  const auto b = enumerate(2, 2);
  CHECK(a == b);
  REQUIRE(a.size() == circuit_count(2, 2));
  std::set<std::string> dumps;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dumps.insert(a[i].dump());
    if (i > 0) REQUIRE(a[i - 1].size() <= a[i].size());
  }
  CHECK(dumps.size() == a.size());
  for (Natural i : {Natural{0}, Natural{7}, Natural{100}, Natural{153}}) CHECK(circuit_at(2, 2, i) == a[i]);
}

TEST_CASE("consistent sets") {
  const BitString sigma = BitString::parse("00");
  ConstraintSet none;
  CHECK(consistent_set(1, 1, sigma, none).size() == circuit_count(1, 1));
  ConstraintSet z;
  z.add(BitString::parse("1"), true);
  Natural brute = 0;
  for (const auto& circuit : enumerate(1, 1)) brute += eval(circuit, BitString::parse("1"), sigma);
  CHECK(consistent_count(1, 1, sigma, z) == brute);
  ConstraintSet z2 = z;
  z2.add(BitString::parse("0"), false);
  const auto small = consistent_set(1, 1, sigma, z2);
  const auto large = consistent_set(1, 1, sigma, z);
  for (const auto& circuit : small) CHECK(std::find(large.begin(), large.end(), circuit) != large.end());
  CHECK_THROWS_AS(z.add(BitString::parse("1"), false), std::invalid_argument);
}

TEST_CASE("majority vote") {
  const OracleCircuit id = c("g0=IN(0) out=g0");
  const OracleCircuit neg = c("g0=IN(0) g1=NOT(g0) out=g1");
  const BitString u = BitString::parse("1");
  CHECK(majority_vote(std::vector<OracleCircuit>{id, neg, id}, u, {}));
  CHECK(majority_vote(std::vector<OracleCircuit>{id, neg}, u, {}));
  CHECK_FALSE(majority_vote(std::vector<OracleCircuit>{neg, neg, id}, u, {}));
  CHECK_THROWS_AS(majority_vote(std::vector<OracleCircuit>{}, u, {}), EmptySet);
}

TEST_CASE("histogram equals direct evaluation") {
  const BitString sigma = BitString::parse("0110100110");
  for (unsigned n = 1; n <= 2; ++n) {
    for (unsigned s = 0; s <= 3; ++s) {
      const auto h = table_histogram(n, s, sigma);
      std::map<Natural, Natural> direct;
      for_each_circuit(n, s, CircuitCaps{}, [&](const OracleCircuit& circuit) {
        const BitString t = truth_table(circuit, sigma);
        Natural index = 0;
        for (Natural j = 1; j <= t.size(); ++j) index |= Natural{t.bit(j)} << (j - 1);
        ++direct[index];
      });
      for (Natural t = 0; t < h.counts.size(); ++t) {
        const auto it = direct.find(t);
        REQUIRE(h.counts[t] == (it == direct.end() ? 0 : it->second));
      }
      CHECK(h.total() == circuit_count(n, s));
    }
  }
}

TEST_CASE("histogram is independent of worker count") {
  CircuitCaps one;
  CircuitCaps three;
  three.workers = 3;
  const BitString sigma = BitString::parse("1011");
  CHECK(table_histogram(2, 3, sigma, one).counts == table_histogram(2, 3, sigma, three).counts);
}

TEST_CASE("property: diagonalization halves and agrees with brute force") {
  const BitString sigma = BitString::parse("0100111");
  for (unsigned s = 0; s <= 3; ++s) {
    const auto h = table_histogram(2, s, sigma);
    ConstraintSet z;
    const auto inputs = all_inputs(2);
    const auto steps = diagonalize_tables(h, inputs, z);
    const auto brute = replay_brute_force(2, s, sigma, steps);
    REQUIRE(steps.size() == 4);
    for (std::size_t j = 0; j < steps.size(); ++j) {
      CHECK(steps[j].after <= steps[j].before / 2);
      CHECK(steps[j].before == brute[j].before);
      CHECK(steps[j].ones == brute[j].ones);
      CHECK(steps[j].after == brute[j].after);
      if (steps[j].before > 0) CHECK(steps[j].bit == !(steps[j].ones >= steps[j].zeros));
    }
  }
}

TEST_CASE("guards") {
  CircuitCaps tight;
  tight.max_circuits = 100;
  CHECK_THROWS_AS(for_each_circuit(2, 2, tight, [](const OracleCircuit&) {}), ScaleGuard);
  CHECK(all_inputs(2).size() == 4);
  CHECK(input_index(BitString::parse("10")) == 2);
}
