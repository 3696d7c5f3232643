#include "rbcat/language.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "rbcat/errors.hpp"
#include "rbcat/random.hpp"

namespace rbcat {

Language::Language(std::string name, MemberFn member, std::string description)
    : name_(std::move(name)),
      description_(std::move(description)),
      member_(std::make_shared<const MemberFn>(std::move(member))) {}

BitString chi_prefix(const Language& lang, std::size_t n) {
  BitString out;
  for (Natural p = 1; p <= n; ++p) out.push_back(lang.at_position(p));
  return out;
}

Natural census(const Language& lang, unsigned n, const LanguageCaps& caps) {
  if (n > caps.max_census_length) {
    throw ScaleGuard("census: length " + std::to_string(n) + " exceeds cap " +
                     std::to_string(caps.max_census_length));
  }
  Natural count = 0;
  const Natural first = first_rank_of_length(n);
  const Natural total = Natural{1} << n;
  for (Natural r = first; r < first + total; ++r) {
    if (lang.contains(rank_to_string(r))) ++count;
  }
  return count;
}

std::vector<Natural> census_table(const Language& lang, unsigned n_max,
                                  const LanguageCaps& caps) {
  std::vector<Natural> table;
  for (unsigned n = 0; n <= n_max; ++n) table.push_back(census(lang, n, caps));
  return table;
}

Language empty_language() {
  return Language("empty", [](const BitString&) { return false; });
}

Language full_language() {
  return Language("full", [](const BitString&) { return true; });
}

Language parity_language() {
  return Language("parity", [](const BitString& x) { return x.popcount() % 2 == 1; },
                  "strings with an odd number of 1s");
}

Language explicit_prefix(BitString bits, std::string name) {
  auto chi = std::make_shared<const BitString>(std::move(bits));
  return Language(std::move(name), [chi](const BitString& x) {
    if (x.size() >= 64) return false;
    const Natural p = position_of(x);
    return p <= chi->size() && chi->bit(p);
  });
}

Language explicit_set(std::set<BitString> members, std::string name) {
  auto set = std::make_shared<const std::set<BitString>>(std::move(members));
  return Language(std::move(name), [set](const BitString& x) { return set->count(x) > 0; });
}

Language read_language_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open language file '" + path.string() + "'");
  std::string line;
  std::getline(in, line);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  try {
    return explicit_prefix(BitString::parse(line), "file:" + path.filename().string());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("language file '" + path.string() + "': " + e.what());
  }
}

void write_language_file(const std::filesystem::path& path, const BitString& chi) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << chi.to_string() << '\n';
}

Natural Polynomial::operator()(Natural n) const {
  Natural value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    value = value * n + *it;
  }
  return value;
}

Polynomial Polynomial::parse(const std::string& text) {
  Polynomial p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find('-') != std::string::npos) {
      throw std::invalid_argument("polynomial coefficients must be nonnegative integers");
    }
    p.coefficients.push_back(std::stoull(item));
  }
  return p;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coefficients[i]);
  }
  return out.empty() ? "0" : out;
}

namespace {

// Members of length n, as lexicographic indices in [0, 2^n).
std::unordered_set<Natural> sparse_level(const Polynomial& p, std::uint64_t seed, unsigned n) {
  std::unordered_set<Natural> chosen;
  const Natural width = n >= 63 ? ~Natural{0} : (Natural{1} << n);
  const Natural want = std::min<Natural>(p(n), width);
  if (want == 0) return chosen;
  std::uint64_t state = derive_seed(seed, {0x5A5A, n});
  if (want == width) {
    for (Natural i = 0; i < width; ++i) chosen.insert(i);
    return chosen;
  }
  while (chosen.size() < want) {
    const std::uint64_t r = splitmix64(state);
    chosen.insert(n >= 63 ? r : (r & (width - 1)));
  }
  return chosen;
}

}  // namespace

Language make_sparse(const Polynomial& p, std::uint64_t seed) {
  return Language(
      "sparse(p=" + p.to_string() + ",seed=" + std::to_string(seed) + ")",
      [p, seed](const BitString& x) {
        const auto n = static_cast<unsigned>(x.size());
        if (p(n) == 0) return false;
        Natural index = 0;
        for (auto b : x) index = (index << 1) | b;
        return sparse_level(p, seed, n).count(index) > 0;
      });
}

Language finite_variant(const Language& lang, std::map<BitString, bool> patch) {
  auto table = std::make_shared<const std::map<BitString, bool>>(std::move(patch));
  return Language(lang.name() + "+patch", [lang, table](const BitString& x) {
    if (auto it = table->find(x); it != table->end()) return it->second;
    return lang.contains(x);
  });
}

BitString padded_code(const BitString& u, unsigned b, const LanguageCaps& caps) {
  const Natural exponent = Natural{b} * u.size();
  if (exponent >= 63 || (Natural{1} << exponent) + u.size() > caps.max_padded_length) {
    throw ScaleGuard("padded string for |u| = " + std::to_string(u.size()) + ", b = " +
                     std::to_string(b) + " exceeds cap " +
                     std::to_string(caps.max_padded_length));
  }
  return BitString::zeros(Natural{1} << exponent) + u;
}

Language f_extract(const Language& a, unsigned b, const LanguageCaps& caps) {
  if (b == 0) throw std::invalid_argument("f_extract: b must be >= 1");
  return Language("F(" + a.name() + ")", [a, b, caps](const BitString& u) {
    return a.contains(padded_code(u, b, caps));
  });
}

}  // namespace rbcat
