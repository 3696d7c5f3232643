#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "rbcat/enumeration.hpp"

namespace rbcat {

using BigNat = boost::multiprecision::cpp_int;

/// One member of a time-bound family: poly(k), quasipoly(k), quasipolylin(k)
/// or subexp(δ) with δ = num/den in (0, 1).
struct BoundFamily {
  enum class Kind { Poly, QuasiPoly, QuasiPolyLin, SubExp };

  Kind kind = Kind::Poly;
  unsigned k = 1;
  unsigned delta_num = 1;
  unsigned delta_den = 2;

  static BoundFamily poly(unsigned k) { return {Kind::Poly, k, 1, 2}; }
  static BoundFamily quasipoly(unsigned k) { return {Kind::QuasiPoly, k, 1, 2}; }
  static BoundFamily quasipolylin(unsigned k) { return {Kind::QuasiPolyLin, k, 1, 2}; }
  /// Throws std::invalid_argument unless 0 < num/den < 1.
  static BoundFamily subexp(unsigned num, unsigned den);

  /// Parses "poly:2", "quasipoly:1", "quasipolylin:3", "subexp:1/2".
  static BoundFamily parse(const std::string& text);
  std::string to_string() const;
};

/// poly(k): n^k; quasipoly(k): n^(⌈log₂(n+2)⌉^k); quasipolylin(k):
/// n^(k·⌈log₂(n+2)⌉); subexp(δ): 2^⌈n^δ⌉. Exact, clamped below at 1.
BigNat bound_eval(const BoundFamily& f, Natural n);

}  // namespace rbcat
