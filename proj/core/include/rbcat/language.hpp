#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/enumeration.hpp"

namespace rbcat {

/// A language presented as a total, deterministic membership oracle.
/// Copies share the underlying oracle.
class Language {
 public:
  using MemberFn = std::function<bool(const BitString&)>;

  Language(std::string name, MemberFn member, std::string description = {});

  bool contains(const BitString& x) const { return (*member_)(x); }
  /// χ_L[p] for a 1-based position p.
  bool at_position(Natural p) const { return contains(string_at_position(p)); }

  const std::string& name() const noexcept { return name_; }
  const std::string& description() const noexcept { return description_; }

 private:
  std::string name_;
  std::string description_;
  std::shared_ptr<const MemberFn> member_;
};

struct LanguageCaps {
  unsigned max_census_length = 20;
  Natural max_padded_length = Natural{1} << 16;
};

/// First N bits of χ_L.
BitString chi_prefix(const Language& lang, std::size_t n);

/// |L ∩ {0,1}^n|. Throws ScaleGuard when n exceeds caps.max_census_length.
Natural census(const Language& lang, unsigned n, const LanguageCaps& caps = {});

/// census(lang, 0..n_max).
std::vector<Natural> census_table(const Language& lang, unsigned n_max,
                                  const LanguageCaps& caps = {});

Language empty_language();
Language full_language();
/// {x : x has an odd number of 1s}
Language parity_language();

/// Language whose χ begins with `bits`; every later position is 0.
Language explicit_prefix(BitString bits, std::string name = "explicit");
Language explicit_set(std::set<BitString> members, std::string name = "set");

/// Explicit-language file: a single line of 0/1 characters giving the chi
/// prefix. Throws ConfigError on malformed content.
Language read_language_file(const std::filesystem::path& path);
void write_language_file(const std::filesystem::path& path, const BitString& chi);

/// Polynomial with nonnegative coefficients, constant term first.
struct Polynomial {
  std::vector<Natural> coefficients;

  Natural operator()(Natural n) const;
  /// "1,1" -> 1 + n.
  static Polynomial parse(const std::string& text);
  std::string to_string() const;
};

/// Deterministic-for-seed language with exactly min(p(n), 2^n) members of
/// each length n, placed at pseudorandom positions.
Language make_sparse(const Polynomial& p, std::uint64_t seed);

/// member(x) = patch(x) where defined, else lang.member(x).
Language finite_variant(const Language& lang, std::map<BitString, bool> patch);

/// F(A) = {u : 0^(2^(b|u|)) u ∈ A}. Membership queries whose padded string
/// would exceed caps.max_padded_length throw ScaleGuard.
Language f_extract(const Language& a, unsigned b, const LanguageCaps& caps = {});

/// The padded string 0^(2^(b|u|)) u. Throws ScaleGuard past the cap.
BitString padded_code(const BitString& u, unsigned b, const LanguageCaps& caps = {});

}  // namespace rbcat
