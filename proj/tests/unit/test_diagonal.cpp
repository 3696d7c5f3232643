#include "doctest.h"
#include "rbcat/diagonal.hpp"
#include "rbcat/errors.hpp"
#include "rbcat/zoo.hpp"

using namespace rbcat;

TEST_CASE("global block construction") {
  CHECK(diag_global_prefix(ones_family(), 2) == BitString::parse("0101100"));
  const Language l = diag_language_global(ones_family());
  const BitString direct = diag_global_prefix(ones_family(), 8);
  CHECK(chi_prefix(l, direct.size()) == direct);
  for (Natural i = 1; i <= 6; ++i) {
    CHECK(ones_family().apply(i, direct.prefix((Natural{1} << i) - 1)).is_prefix_of(direct));
  }
  const IndexedConstructor too_long("long", [](Natural i, const PrefixView&) {
    return BitString::ones((Natural{1} << i) + 1);
  });
  CHECK_THROWS_AS(diag_global_prefix(too_long, 3), ExtensionOverflow);
  CHECK_THROWS_AS(diag_language_global(too_long).contains(BitString::parse("1")), ExtensionOverflow);
}

TEST_CASE("locate") {
  const std::vector<Natural> f{1, 2, 4, 8};
  CHECK(locate(f, 0) == std::pair<Natural, Natural>{0, 0});
  CHECK(locate(f, 2) == std::pair<Natural, Natural>{1, 1});
  CHECK(locate(f, 3) == std::pair<Natural, Natural>{2, 0});
  CHECK(locate(f, 14) == std::pair<Natural, Natural>{3, 7});
}

TEST_CASE("local block construction") {
  const LocalConstructor h = sparse_avoider();
  const auto layout = local_diag_layout(h, 4);
  CHECK(layout.f == std::vector<Natural>{1, 2, 4, 8, 16});
  CHECK(layout.ends == std::vector<Natural>{1, 3, 7, 15, 31});
  const BitString direct = diag_local_prefix(h, layout);
  CHECK(chi_prefix(diag_language_local(h, layout), direct.size()) == direct);
  for (Natural i = 1; i <= 4; ++i) {
    const Natural start = layout.ends[i - 1];
    const Natural ones = std::min(start, layout.f[i]);
    CHECK(direct.slice(start, ones) == BitString::ones(ones));
  }
  CHECK_THROWS_AS(diag_language_local(h, layout).contains(rank_to_string(40)), ScaleGuard);
}

TEST_CASE("property: local construction meets every h_i for each zoo strategy") {
  for (const auto& h : {complement_prefix_family(), constant_one(), ones_family_local(), singleton_family_local()}) {
    const auto layout = local_diag_layout(h, 4);
    const BitString direct = diag_local_prefix(h, layout);
    CHECK(chi_prefix(diag_language_local(h, layout), direct.size()) == direct);
    for (Natural i = 0; i <= 4; ++i) {
      const BitString tau = direct.prefix(i == 0 ? 0 : layout.ends[i - 1]);
      CHECK((tau + materialize_local(h, i, tau, 1 << 12)).is_prefix_of(direct));
    }
  }
}
