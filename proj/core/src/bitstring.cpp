#include "rbcat/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbcat {

BitString BitString::parse(std::string_view text) {
  BitString out;
  out.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString::parse: unexpected character '" +
                                  std::string(1, c) + "'");
    }
    out.bits_.push_back(c == '1' ? 1 : 0);
  }
  return out;
}

BitString BitString::zeros(std::size_t n) { return repeat(false, n); }
BitString BitString::ones(std::size_t n) { return repeat(true, n); }

BitString BitString::repeat(bool b, std::size_t n) {
  BitString out;
  out.bits_.assign(n, b ? 1 : 0);
  return out;
}

bool BitString::bit(std::size_t pos) const {
  if (pos == 0 || pos > bits_.size()) {
    throw std::out_of_range("BitString::bit: position " + std::to_string(pos) +
                            " outside [1, " + std::to_string(bits_.size()) + "]");
  }
  return bits_[pos - 1] != 0;
}

void BitString::set_bit(std::size_t pos, bool value) {
  if (pos == 0 || pos > bits_.size()) {
    throw std::out_of_range("BitString::set_bit: position out of range");
  }
  bits_[pos - 1] = value ? 1 : 0;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::prefix(std::size_t n) const {
  BitString out;
  n = std::min(n, bits_.size());
  out.bits_.assign(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

BitString BitString::slice(std::size_t from, std::size_t len) const {
  BitString out;
  if (from >= bits_.size()) return out;
  len = std::min(len, bits_.size() - from);
  auto first = bits_.begin() + static_cast<std::ptrdiff_t>(from);
  out.bits_.assign(first, first + static_cast<std::ptrdiff_t>(len));
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::size_t BitString::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitString operator+(BitString lhs, const BitString& rhs) {
  lhs.append(rhs);
  return lhs;
}

bool length_lex_less(const BitString& x, const BitString& y) noexcept {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

}  // namespace rbcat
