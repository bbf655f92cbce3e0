#include <doctest.h>

#include "jpca/analysis.hpp"
#include "jpca/map_library.hpp"
#include "jpca/period.hpp"
#include "jpca/rulespec.hpp"

using namespace jpca;

TEST_CASE("named resolution") {
  const auto& lib = MapLibrary::instance();
  CHECK(to_lookup_code(lib.resolve("B")) == "00011110");
  CHECK(to_lookup_code(lib.resolve("span4/30")) == "0110110100101001");
  CHECK(lib.resolve("J") == compose(lib.resolve("A"), lib.resolve("U")));
  CHECK(lib.resolve("H") == compose(lib.resolve("A"), compose(lib.resolve("A"), lib.resolve("U"))));
  CHECK(lib.resolve("K") == compose(lib.resolve("B"), lib.resolve("U")));
  CHECK(lib.resolve("E") == compose(lib.resolve("B"), lib.resolve("A")));
  CHECK_THROWS_AS(lib.resolve("nope"), std::invalid_argument);
  CHECK(lib.resolve_spec("poly(N=2):x0+x1") == lib.resolve("A"));
}

TEST_CASE("every entry compiles") {
  const auto& lib = MapLibrary::instance();
  CHECK(lib.entries().size() > 190);
  for (const MapEntry& e : lib.entries()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(lib.resolve(e.name));
  }
}

TEST_CASE("span-4 families") {
  const auto& lib = MapLibrary::instance();
  CHECK(is_left_permutative(lib.family("perm_plus_span4", 1)));
  CHECK(lib.family("d_post_span4", 5) == compose(lib.resolve("A"), lib.resolve("span4/5")));
  CHECK_THROWS_AS(lib.family("perm_plus_span4", 0), std::invalid_argument);
  CHECK_THROWS_AS(lib.family("perm_plus_span4", 33), std::invalid_argument);

  // flip before and flip after have the same joint-periodicity counts
  for (unsigned j : {1u, 3u}) {
    const LocalRule post = lib.family("flip_post_span4", j);
    const LocalRule pre = lib.family("flip_pre_span4", j);
    for (unsigned k = 1; k <= 8; ++k)
      CHECK(analyze_period_k(post, k).periodic_count ==
            analyze_period_k(pre, k).periodic_count);
  }
}

TEST_CASE("the three-symbol entries") {
  const auto& lib = MapLibrary::instance();
  const LocalRule w = lib.resolve("W");
  CHECK(w.alphabet_size() == 3);
  CHECK(w.span() == 2);
  CHECK(to_lookup_code(w) == "020111202");
  const LocalRule lw = lib.resolve("LW3");
  CHECK(lw.alphabet_size() == 3);
  CHECK(lw.span() == 4);
}

TEST_CASE("catalogue entries fix the origin and avoid end-variable linearity") {
  const auto& lib = MapLibrary::instance();
  for (const MapEntry& e : lib.entries()) {
    const bool span4 = e.name.rfind("span4/", 0) == 0;
    const bool span5 = e.name.rfind("span5/", 0) == 0;
    if (!span4 && !span5) continue;
    const LocalRule r = lib.resolve(e.name);
    CAPTURE(e.name);
    CHECK(r.table()[0] == 0);
    CHECK_FALSE(is_left_permutative(r));
    CHECK_FALSE(is_right_permutative(r));
    CHECK(is_surjective(r));
  }
}

TEST_CASE("documented properties match the analysis") {
  const auto& lib = MapLibrary::instance();
  for (const MapEntry& e : lib.entries()) {
    const LocalRule r = lib.resolve(e.name);
    CAPTURE(e.name);
    if (e.expected.surjective) CHECK(*e.expected.surjective == is_surjective(r));
    if (e.expected.left_permutative)
      CHECK(*e.expected.left_permutative == is_left_permutative(r));
    if (e.expected.right_permutative)
      CHECK(*e.expected.right_permutative == is_right_permutative(r));
    if (e.expected.left_closing || e.expected.right_closing) {
      const ClosingStatus cs = closing_status(r);
      if (e.expected.left_closing) CHECK(*e.expected.left_closing == cs.left_closing);
      if (e.expected.right_closing) CHECK(*e.expected.right_closing == cs.right_closing);
    }
    if (e.expected.injective) CHECK(*e.expected.injective == is_injective(r));
    if (e.expected.fixes_zero) CHECK(*e.expected.fixes_zero == (r.table()[0] == 0));
  }
}
