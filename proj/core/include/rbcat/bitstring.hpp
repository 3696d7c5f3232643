#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rbcat {

/// A finite binary string. Bits are addressed 1-based through bit(), matching
/// the w[1..|w|] convention used for characteristic prefixes.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1'. Throws std::invalid_argument on any other
  /// character.
  static BitString parse(std::string_view text);
  static BitString zeros(std::size_t n);
  static BitString ones(std::size_t n);
  static BitString repeat(bool b, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  /// 1-based access; throws std::out_of_range outside [1, size()].
  bool bit(std::size_t pos) const;
  void set_bit(std::size_t pos, bool value);

  void push_back(bool b) { bits_.push_back(b ? 1 : 0); }
  void append(const BitString& other);
  BitString prefix(std::size_t n) const;
  /// Bits (from, from+len] in 1-based terms, i.e. the len bits after position from.
  BitString slice(std::size_t from, std::size_t len) const;

  bool is_prefix_of(const BitString& other) const noexcept;
  std::size_t popcount() const noexcept;

  std::string to_string() const;

  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  friend bool operator==(const BitString&, const BitString&) = default;
  /// Plain lexicographic order on the bit vector (usable as a map key). For
  /// the length-then-lex order of the standard enumeration see
  /// length_lex_less().
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

BitString operator+(BitString lhs, const BitString& rhs);

/// x ≤ y in the enumeration order: shorter first, then lexicographic.
bool length_lex_less(const BitString& x, const BitString& y) noexcept;

}  // namespace rbcat
