#include "rbcat/martingale.hpp"

#include "rbcat/circuits.hpp"
#include "rbcat/errors.hpp"

namespace rbcat {

Martingale::Martingale(std::string name, Rational initial, BetFn bet)
    : name_(std::move(name)), initial_(std::move(initial)), bet_(std::make_shared<const BetFn>(std::move(bet))) {}

Rational Martingale::capital(const BitString& w) const {
  Rational d = initial_;
  BitString prefix;
  for (bool b : w) {
    const Rational stake = bet(prefix);
    d += b ? stake : Rational(-stake);
    prefix.push_back(b);
  }
  return d;
}

ValueFunction as_value_function(const Martingale& d) {
  return {d.name(), [d](const BitString& w) { return d.capital(w); }};
}

std::string FairnessReport::to_string() const {
  if (pass) return "PASS (" + std::to_string(checked) + " strings)";
  const std::string w = witness->empty() ? "λ" : witness->to_string();
  return "FAIL{" + w + "}: " + reason;
}

namespace {

void guard_depth(unsigned depth) {
  if (depth > 14) throw ScaleGuard("fairness_check: depth " + std::to_string(depth) + " exceeds 14");
}

}  // namespace

FairnessReport fairness_check(const Martingale& d, unsigned depth) {
  guard_depth(depth);
  FairnessReport report;
  // Breadth-first so the witness is the length-lex first failure.
  std::vector<std::pair<BitString, Rational>> level{{BitString{}, d.initial()}};
  if (d.initial() < 0) return {false, BitString{}, "negative capital", 0};
  for (unsigned len = 0; len <= depth; ++len) {
    std::vector<std::pair<BitString, Rational>> next;
    for (auto& [w, value] : level) {
      ++report.checked;
      const Rational stake = d.bet(w);
      const Rational v0 = value - stake;
      const Rational v1 = value + stake;
      if (2 * value != v0 + v1) return {false, w, "2d(w) != d(w0) + d(w1)", report.checked};
      if (v0 < 0 || v1 < 0) return {false, w, "stake exceeds capital", report.checked};
      next.emplace_back(w + BitString::parse("0"), v0);
      next.emplace_back(w + BitString::parse("1"), v1);
    }
    level = std::move(next);
  }
  return report;
}

FairnessReport fairness_check(const ValueFunction& d, unsigned depth) {
  guard_depth(depth);
  FairnessReport report;
  std::vector<BitString> level{BitString{}};
  for (unsigned len = 0; len <= depth; ++len) {
    std::vector<BitString> next;
    for (const BitString& w : level) {
      ++report.checked;
      const Rational v = d.value(w);
      const BitString w0 = w + BitString::parse("0");
      const BitString w1 = w + BitString::parse("1");
      const Rational v0 = d.value(w0);
      const Rational v1 = d.value(w1);
      if (v < 0 || v0 < 0 || v1 < 0) return {false, w, "negative capital", report.checked};
      if (2 * v != v0 + v1) return {false, w, "2d(w) != d(w0) + d(w1)", report.checked};
      next.push_back(w0);
      next.push_back(w1);
    }
    level = std::move(next);
  }
  return report;
}

Martingale constant_martingale(Rational value) {
  return Martingale("constant", std::move(value), [](const BitString&) { return Rational(0); });
}

Martingale proportional_bettor(Rational fraction) {
  const Rational f = fraction;
  return Martingale("proportional", 1, [f](const BitString& w) {
    Rational d = 1;
    for (bool b : w) d *= b ? Rational(1 + f) : Rational(1 - f);
    return f * d;
  });
}

Rational density_share(Natural n) { return Rational(1, 2 * n * n); }

Martingale density_bettor() {
  return Martingale("density", 1, [](const BitString& w) {
    const BitString x = rank_to_string(w.size());
    const Natural n = x.size();
    if (n == 0) return Rational(0);
    const Natural j = input_index(x);
    if (j >= n) return Rational(0);
    const Natural level_start = Natural{1} << n;
    for (Natural q = 0; q < j; ++q) {
      if (w.bit(level_start + q)) return Rational(0);
    }
    return Rational(-density_share(n) * (Natural{1} << j));
  });
}

ValueFunction broken_fixture() {
  return {"broken", [](const BitString& w) { return Rational(1 + w.size()); }};
}

std::vector<Rational> capital_trace(const Martingale& d, const Language& lang, Natural n) {
  std::vector<Rational> trace{d.initial()};
  BitString w;
  for (Natural p = 1; p <= n; ++p) {
    const Rational stake = d.bet(w);
    const bool b = lang.at_position(p);
    trace.push_back(trace.back() + (b ? stake : Rational(-stake)));
    w.push_back(b);
  }
  return trace;
}

void write_capital_csv(std::ostream& out, const std::vector<Rational>& trace, const Language& lang) {
  out << "position,string,bit,capital_numerator,capital_denominator\n";
  for (Natural m = 0; m < trace.size(); ++m) {
    out << m << ',';
    if (m > 0) {
      const BitString x = string_at_position(m);
      out << x.to_string() << ',' << (lang.at_position(m) ? 1 : 0);
    } else {
      out << ',';
    }
    out << ',' << numerator(trace[m]) << ',' << denominator(trace[m]) << '\n';
  }
}

bool empty_level_indicator(const Language& lang, Natural n) {
  if (n == 0 || n >= 63) throw std::invalid_argument("empty_level_indicator: n must be in 1..62");
  for (Natural j = 0; j < n; ++j) {
    if (lang.contains(rank_to_string(first_rank_of_length(static_cast<unsigned>(n)) + j))) return false;
  }
  return true;
}

}  // namespace rbcat
