#include "rbcat/bounds.hpp"

#include <stdexcept>

namespace rbcat {

namespace {

BigNat pow_big(BigNat base, Natural exp) {
  BigNat result = 1;
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

// Smallest m with m^den >= n^num, i.e. ⌈n^(num/den)⌉.
BigNat ceil_root_power(Natural n, unsigned num, unsigned den) {
  const BigNat target = pow_big(BigNat(n), num);
  BigNat lo = 0;
  BigNat hi = 1;
  while (pow_big(hi, den) < target) hi *= 2;
  while (lo < hi) {
    BigNat mid = (lo + hi) / 2;
    if (pow_big(mid, den) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

BoundFamily BoundFamily::subexp(unsigned num, unsigned den) {
  if (num == 0 || den == 0 || num >= den) {
    throw std::invalid_argument("subexp: delta must lie strictly between 0 and 1");
  }
  return {Kind::SubExp, 1, num, den};
}

BoundFamily BoundFamily::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bound family needs kind:param");
  const std::string kind = text.substr(0, colon);
  const std::string param = text.substr(colon + 1);
  if (kind == "subexp") {
    const auto slash = param.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("subexp needs num/den");
    return subexp(static_cast<unsigned>(std::stoul(param.substr(0, slash))),
                  static_cast<unsigned>(std::stoul(param.substr(slash + 1))));
  }
  const auto k = static_cast<unsigned>(std::stoul(param));
  if (kind == "poly") return poly(k);
  if (kind == "quasipoly") return quasipoly(k);
  if (kind == "quasipolylin") return quasipolylin(k);
  throw std::invalid_argument("unknown bound family '" + kind + "'");
}

std::string BoundFamily::to_string() const {
  switch (kind) {
    case Kind::Poly: return "poly:" + std::to_string(k);
    case Kind::QuasiPoly: return "quasipoly:" + std::to_string(k);
    case Kind::QuasiPolyLin: return "quasipolylin:" + std::to_string(k);
    case Kind::SubExp:
      return "subexp:" + std::to_string(delta_num) + "/" + std::to_string(delta_den);
  }
  return "?";
}

BigNat bound_eval(const BoundFamily& f, Natural n) {
  BigNat value;
  const Natural lg = ceil_log2_plus2(n);
  switch (f.kind) {
    case BoundFamily::Kind::Poly:
      value = pow_big(BigNat(n), f.k);
      break;
    case BoundFamily::Kind::QuasiPoly: {
      Natural exponent = 1;
      for (unsigned i = 0; i < f.k; ++i) exponent *= lg;
      value = pow_big(BigNat(n), exponent);
      break;
    }
    case BoundFamily::Kind::QuasiPolyLin:
      value = pow_big(BigNat(n), Natural{f.k} * lg);
      break;
    case BoundFamily::Kind::SubExp: {
      const BigNat e = ceil_root_power(n, f.delta_num, f.delta_den);
      value = pow_big(BigNat(2), e.convert_to<Natural>());
      break;
    }
  }
  return value < 1 ? BigNat(1) : value;
}

}  // namespace rbcat
