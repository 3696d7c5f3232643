#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/language.hpp"

using namespace rbcat;

TEST_CASE("chi_prefix examples") {
  CHECK(chi_prefix(full_language(), 3) == BitString::parse("111"));
  CHECK(chi_prefix(empty_language(), 4) == BitString::parse("0000"));
  CHECK(chi_prefix(parity_language(), 3) == BitString::parse("001"));
}

TEST_CASE("census examples") {
  CHECK(census(full_language(), 3) == 8);
  CHECK(census(empty_language(), 5) == 0);
  CHECK(census(parity_language(), 3) == 4);
  CHECK_THROWS_AS(census(full_language(), 21), ScaleGuard);
  CHECK(census_table(full_language(), 3) == std::vector<Natural>{1, 2, 4, 8});
}

TEST_CASE("sparse languages") {
  const Language zero = make_sparse(Polynomial::parse("0"), 9);
  CHECK(chi_prefix(zero, 200) == BitString::zeros(200));
  const Language one = make_sparse(Polynomial::parse("1"), 7);
  for (unsigned n = 0; n <= 10; ++n) CHECK(census(one, n) <= 1);
  const Language lin = make_sparse(Polynomial::parse("1,1"), 3);
  CHECK(census(lin, 4) <= 5);
  for (unsigned n = 0; n <= 10; ++n) CHECK(census(lin, n) == std::min<Natural>(n + 1, Natural{1} << n));
  CHECK(chi_prefix(make_sparse(Polynomial::parse("1,1"), 3), 300) == chi_prefix(lin, 300));
}

TEST_CASE("finite variants") {
  CHECK(chi_prefix(finite_variant(empty_language(), {{BitString{}, true}}), 1) == BitString::parse("1"));
  CHECK(chi_prefix(finite_variant(full_language(), {}), 50) == chi_prefix(full_language(), 50));
  CHECK(chi_prefix(finite_variant(parity_language(), {{BitString::parse("0"), true}}), 3) ==
        BitString::parse("011"));
}

TEST_CASE("F(A) extraction") {
  CHECK(chi_prefix(f_extract(empty_language(), 1), 30) == BitString::zeros(30));
  CHECK(chi_prefix(f_extract(full_language(), 1), 30) == BitString::ones(30));
  const Language a = explicit_set({BitString::parse("00001")});
  const Language f = f_extract(a, 2);
  CHECK(f.contains(BitString::parse("1")));
  CHECK_FALSE(f.contains(BitString::parse("0")));
  CHECK(padded_code(BitString::parse("1"), 2) == BitString::parse("00001"));
  CHECK_THROWS_AS(padded_code(BitString::zeros(9), 2), ScaleGuard);
}

TEST_CASE("explicit languages and files") {
  const Language e = explicit_prefix(BitString::parse("101"));
  CHECK(chi_prefix(e, 6) == BitString::parse("101000"));
  const auto path = std::filesystem::temp_directory_path() / "rbcat_lang_test.txt";
  write_language_file(path, BitString::parse("0110"));
  CHECK(chi_prefix(read_language_file(path), 6) == BitString::parse("011000"));
  {
    std::ofstream bad(path);
    bad << "01x\n";
  }
  CHECK_THROWS_AS(read_language_file(path), ConfigError);
  std::filesystem::remove(path);
}

TEST_CASE("polynomials") {
  const Polynomial p = Polynomial::parse("1,0,2");
  CHECK(p(3) == 19);
  CHECK(p.to_string() == "1,0,2");
  CHECK_THROWS(Polynomial::parse("a"));
}
