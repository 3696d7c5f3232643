#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rbcat/bitstring.hpp"
#include "rbcat/enumeration.hpp"
#include "rbcat/language.hpp"

namespace rbcat {

using Rational = boost::multiprecision::cpp_rational;

/// A martingale given by its initial capital and a betting function: bet(w)
/// is the signed stake on the next bit being 1, so d(w1) = d(w) + bet(w) and
/// d(w0) = d(w) - bet(w).
class Martingale {
 public:
  using BetFn = std::function<Rational(const BitString& w)>;

  Martingale(std::string name, Rational initial, BetFn bet);

  const std::string& name() const noexcept { return name_; }
  const Rational& initial() const noexcept { return initial_; }
  Rational bet(const BitString& w) const { return (*bet_)(w); }
  /// d(w), following the bets along w.
  Rational capital(const BitString& w) const;

 private:
  std::string name_;
  Rational initial_;
  std::shared_ptr<const BetFn> bet_;
};

/// A candidate martingale given directly by its values.
struct ValueFunction {
  std::string name;
  std::function<Rational(const BitString&)> value;
};

ValueFunction as_value_function(const Martingale& d);

struct FairnessReport {
  bool pass = true;
  /// First w (in length-lex order) where 2d(w) ≠ d(w0) + d(w1) or d < 0.
  std::optional<BitString> witness;
  std::string reason;
  Natural checked = 0;

  std::string to_string() const;
};

/// Exact check of 2d(w) = d(w0) + d(w1) and d(w) >= 0 for every |w| <= depth
/// (nonnegativity also on the children). Throws ScaleGuard for depth > 14.
FairnessReport fairness_check(const Martingale& d, unsigned depth);
FairnessReport fairness_check(const ValueFunction& d, unsigned depth);

Martingale constant_martingale(Rational value = 1);
/// Always stakes `fraction` of the current capital on 1.
Martingale proportional_bettor(Rational fraction);
/// c_n = 1/(2n²).
Rational density_share(Natural n);
/// Keeps a share c_n for every level n >= 1 and bets it all on 0 for each of
/// the first n strings of length n, for as long as those bits have been 0.
Martingale density_bettor();
/// d(w) = 1 + |w|: violates fairness at λ.
ValueFunction broken_fixture();

/// d(χ_L[1..m]) for m = 0..n.
std::vector<Rational> capital_trace(const Martingale& d, const Language& lang, Natural n);

/// Columns: position,string,bit,capital_numerator,capital_denominator. Row
/// m covers χ[1..m]; row 0 has empty string and bit fields.
void write_capital_csv(std::ostream& out, const std::vector<Rational>& trace, const Language& lang);

/// 1 iff none of the first n strings of length n belongs to L.
bool empty_level_indicator(const Language& lang, Natural n);

}  // namespace rbcat
