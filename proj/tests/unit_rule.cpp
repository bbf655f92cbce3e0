#include <doctest.h>

#include "jpca/map_library.hpp"
#include "jpca/rule.hpp"
#include "jpca/rulespec.hpp"
#include "jpca/sampling.hpp"

using namespace jpca;

namespace {

PeriodicWord word2(const std::string& s) {
  std::vector<std::uint8_t> sym;
  for (char c : s) sym.push_back(static_cast<std::uint8_t>(c - '0'));
  return PeriodicWord(2, std::move(sym));
}

PeriodicWord rotate(const PeriodicWord& w, unsigned by) {
  std::vector<std::uint8_t> sym(w.length());
  for (unsigned i = 0; i < w.length(); ++i) sym[i] = w.symbols()[(i + by) % w.length()];
  return PeriodicWord(w.alphabet_size(), std::move(sym));
}

LocalRule random_rule(SplitMix64& rng, unsigned n, unsigned span) {
  std::vector<std::uint8_t> table(ipow(n, span));
  for (auto& v : table) v = static_cast<std::uint8_t>(rng.below(n));
  const int lo = static_cast<int>(rng.below(5)) - 2;
  return LocalRule(n, lo, lo + int(span) - 1, std::move(table));
}

}  // namespace

TEST_CASE("polynomial compilation") {
  CHECK(to_lookup_code(from_polynomial("x0+x1", 2)) == "0110");

  const LocalRule b = from_polynomial("x0+x1*x2", 2);
  CHECK(to_lookup_code(b) == "00011110");
  CHECK(b.offset_lo() == 0);
  CHECK(b.offset_hi() == 2);

  const LocalRule r = from_polynomial("2x(-1)+x0*x2^3", 3);
  CHECK(r.offset_lo() == -1);
  CHECK(r.offset_hi() == 2);
  CHECK(r.span() == 4);

  // juxtaposition multiplies
  CHECK(from_polynomial("x0x1+x2", 2) == from_polynomial("x0*x1+x2", 2));

  // no variables: constant rule on window [0,0]
  const LocalRule c = from_polynomial("1", 2);
  CHECK(c.span() == 1);
  CHECK(to_lookup_code(c) == "11");

  CHECK_THROWS_AS(from_polynomial("x0+", 2), ParseError);
  CHECK_THROWS_AS(from_polynomial("y0", 2), ParseError);
  CHECK_THROWS_AS(from_polynomial("x17", 2), ParseError);
  CHECK_THROWS_AS(from_polynomial("x(-17)", 2), ParseError);
}

TEST_CASE("lookup codes") {
  CHECK(from_lookup_code("0001 1110", 2, 3, 0) == from_polynomial("x0+x1*x2", 2));
  CHECK(from_lookup_code("01", 2, 1, 0) == identity_rule(2));

  const LocalRule m30 = from_lookup_code("0110 1101 0010 1001", 2, 4, 0);
  CHECK(m30 == MapLibrary::instance().resolve("span4/30"));

  CHECK_THROWS_AS(from_lookup_code("010", 2, 1, 0), ParseError);
  CHECK_THROWS_AS(from_lookup_code("02", 2, 1, 0), ParseError);

  const LocalRule m17 = MapLibrary::instance().resolve("span4/17");
  CHECK(from_lookup_code(to_lookup_code(m17), 2, 4, 0) == m17);

  SplitMix64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const LocalRule r = random_rule(rng, 2 + unsigned(rng.below(2)), 1 + unsigned(rng.below(3)));
    CHECK(from_lookup_code(to_lookup_code(r), r.alphabet_size(), r.span(), r.offset_lo()) == r);
  }
}

TEST_CASE("apply on circular words") {
  const LocalRule a = from_polynomial("x0+x1", 2);
  const LocalRule b = from_polynomial("x0+x1x2", 2);
  CHECK(apply_periodic(a, word2("00110")).str() == "01010");
  CHECK(apply_periodic(b, word2("110")).str() == "111");
  CHECK(apply_periodic(b, word2("00000")).str() == "00000");
  CHECK_THROWS_AS(apply_periodic(b, PeriodicWord(3, {0, 1, 2})), std::invalid_argument);
}

TEST_CASE("compose") {
  const auto& lib = MapLibrary::instance();
  const LocalRule b = lib.resolve("B"), brev = lib.resolve("B_rev");
  const LocalRule c = compose(b, brev);
  CHECK(c.offset_lo() == 0);
  CHECK(c.offset_hi() == 4);
  CHECK(c == lib.resolve("C"));

  const LocalRule r = lib.resolve("G");
  CHECK(compose(identity_rule(2), r) == r);

  // compiled table agrees with sequential application
  const LocalRule j = compose(lib.resolve("A"), lib.resolve("U"));
  CHECK(j == lib.resolve("J"));
  for (unsigned k = 1; k <= 8; ++k)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
      const PeriodicWord w = PeriodicWord::from_code(2, k, code);
      CHECK(apply_periodic(j, w) ==
            apply_periodic(lib.resolve("A"), apply_periodic(lib.resolve("U"), w)));
    }

  CHECK_THROWS_AS(compose(lib.resolve("B3"), b), std::invalid_argument);

  LocalRule wide = b;
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 16; ++i) wide = compose(wide, wide);
      }(),
      BudgetError);
}

TEST_CASE("compose soundness on random small rules") {
  SplitMix64 rng(5);
  for (int t = 0; t < 120; ++t) {
    const unsigned n = 2 + unsigned(rng.below(2));
    const LocalRule g = random_rule(rng, n, 1 + unsigned(rng.below(3)));
    const LocalRule h = random_rule(rng, n, 1 + unsigned(rng.below(3)));
    const LocalRule gh = compose(g, h);
    for (int s = 0; s < 8; ++s) {
      const unsigned k = 1 + unsigned(rng.below(8));
      const PeriodicWord w = PeriodicWord::from_code(n, k, rng.below(ipow(n, k)));
      CHECK(apply_periodic(gh, w) == apply_periodic(g, apply_periodic(h, w)));
    }
  }
}

TEST_CASE("shift composition") {
  const auto& lib = MapLibrary::instance();
  const LocalRule c = lib.resolve("C");
  const LocalRule d = compose_shift(c, -2);
  CHECK(d == lib.resolve("D"));
  CHECK(d.offset_lo() == -2);
  CHECK(d.offset_hi() == 2);
  CHECK(d.table() == c.table());
  CHECK(compose_shift(c, 0) == c);
  CHECK(compose_shift(compose_shift(c, 1), -1) == c);
}

TEST_CASE("flips") {
  CHECK(to_lookup_code(flip_post(identity_rule(2))) == "10");
  const LocalRule g = MapLibrary::instance().resolve("span4/9");
  CHECK(flip_post(flip_post(g)) == g);
  CHECK(flip_pre(flip_pre(g)) == g);
  // flip after g equals the library family entry
  CHECK(flip_post(g) == MapLibrary::instance().resolve("flip_post_span4/9"));
  CHECK(flip_pre(g) == MapLibrary::instance().resolve("flip_pre_span4/9"));
}

TEST_CASE("shift commutation") {
  SplitMix64 rng(17);
  for (int t = 0; t < 80; ++t) {
    const unsigned n = 2 + unsigned(rng.below(2));
    const LocalRule r = random_rule(rng, n, 1 + unsigned(rng.below(4)));
    const unsigned k = 1 + unsigned(rng.below(12));
    const PeriodicWord w = PeriodicWord::from_code(n, k, rng.below(ipow(n, k)));
    CHECK(apply_periodic(r, rotate(w, 1)) == rotate(apply_periodic(r, w), 1));
  }
}

TEST_CASE("periodic word encoding") {
  const PeriodicWord w(2, {1, 0, 1, 1});
  CHECK(w.code() == 0b1011);
  CHECK(PeriodicWord::from_code(2, 4, 11) == w);
  CHECK(w.str() == "1011");
  CHECK_THROWS_AS(PeriodicWord(2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(PeriodicWord::from_code(2, 3, 8), std::invalid_argument);

  SplitMix64 rng(23);
  for (int t = 0; t < 50; ++t) {
    const unsigned n = 2 + unsigned(rng.below(3));
    const unsigned k = 1 + unsigned(rng.below(12));
    const std::uint64_t code = rng.below(ipow(n, k));
    CHECK(PeriodicWord::from_code(n, k, code).code() == code);
  }
}

TEST_CASE("rulespec grammar") {
  const auto& lib = MapLibrary::instance();
  const RuleResolver res = [&](std::string_view n) { return lib.resolve(n); };
  CHECK(parse_rulespec("poly(N=2):x0+x1x2", res) == lib.resolve("B"));
  CHECK(parse_rulespec("table(N=2,span=3):00011110", res) == lib.resolve("B"));
  CHECK(parse_rulespec("table(N=2, span=3, lo=-1):0001 1110", res).offset_lo() == -1);
  CHECK(parse_rulespec("compose(B, B_rev)", res) == lib.resolve("C"));
  CHECK(parse_rulespec("shift(compose(B,B_rev), -2)", res) == lib.resolve("D"));
  CHECK(parse_rulespec("flip(span4/3)", res) == flip_post(lib.resolve("span4/3")));
  CHECK(parse_rulespec("flipr(span4/3)", res) == flip_pre(lib.resolve("span4/3")));
  CHECK_THROWS_AS(parse_rulespec("nosuchmap", res), std::invalid_argument);
  CHECK_THROWS_AS(parse_rulespec("poly(N=2):x0+x1 x", res), ParseError);
  CHECK_THROWS_AS(parse_rulespec("table(N=2,span=2):01", res), ParseError);
}
