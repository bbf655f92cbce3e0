#include <doctest.h>

#include <algorithm>
#include <set>

#include "jpca/density.hpp"
#include "jpca/map_library.hpp"
#include "jpca/period.hpp"
#include "jpca/rulespec.hpp"

using namespace jpca;

namespace {

// test-only oracle: does the length-m word occur in any periodic point,
// reading every start position with wrap-around
std::set<std::uint64_t> occurring_words(const LocalRule& rule, unsigned k, unsigned m) {
  const CodeBitset periodic = jointly_periodic_membership(rule, k);
  const unsigned n = rule.alphabet_size();
  std::set<std::uint64_t> seen;
  for (std::uint64_t code = 0; code < periodic.size(); ++code) {
    if (!periodic.test(code)) continue;
    const auto sym = PeriodicWord::from_code(n, k, code).symbols();
    for (unsigned start = 0; start < k; ++start) {
      std::uint64_t w = 0;
      for (unsigned j = 0; j < m; ++j) w = w * n + sym[(start + j) % k];
      seen.insert(w);
    }
  }
  return seen;
}

std::set<std::uint64_t> expand_patterns(const std::vector<std::string>& patterns, unsigned n,
                                        unsigned m) {
  std::set<std::uint64_t> out;
  for (const std::string& pat : patterns) {
    const bool star = !pat.empty() && pat.back() == '*';
    const std::string head = star ? pat.substr(0, pat.size() - 1) : pat;
    std::uint64_t base = 0;
    for (char c : head) base = base * n + unsigned(c - '0');
    const unsigned free_syms = m - unsigned(head.size());
    const std::uint64_t count = ipow(n, free_syms);
    for (std::uint64_t t = 0; t < count; ++t) out.insert(base * count + t);
  }
  return out;
}

}  // namespace

TEST_CASE("membership bitsets") {
  const auto& lib = MapLibrary::instance();
  CHECK(jointly_periodic_membership(lib.resolve("A"), 5).popcount() == 16);

  const CodeBitset all = jointly_periodic_membership(identity_rule(2), 6);
  CHECK(all.popcount() == 64);

  const CodeBitset b3 = jointly_periodic_membership(lib.resolve("B"), 3);
  CHECK(b3.popcount() == 4);
  for (std::uint64_t code : {0b000, 0b100, 0b010, 0b001}) CHECK(b3.test(code));
  CHECK_FALSE(b3.test(0b111));

  // popcount always equals the exact periodic count
  for (const char* name : {"B", "C", "J"})
    for (unsigned k = 1; k <= 10; ++k)
      CHECK(jointly_periodic_membership(lib.resolve(name), k).popcount() ==
            analyze_period_k(lib.resolve(name), k).periodic_count);

  CHECK_THROWS_AS(jointly_periodic_membership(lib.resolve("B"), 20, 1024), BudgetError);
}

TEST_CASE("denseness reports") {
  const auto& lib = MapLibrary::instance();

  const DensityReport b11 = m_dense_report(lib.resolve("B"), 1, 1);
  CHECK_FALSE(b11.dense);
  REQUIRE(b11.missing_patterns.size() == 1);
  CHECK(b11.missing_patterns[0] == "1");

  // only the two constant points are fixed by the identity at k=1
  const DensityReport id = m_dense_report(identity_rule(2), 1, 3);
  CHECK_FALSE(id.dense);
  CHECK(id.missing_patterns == std::vector<std::string>{"001", "01*", "10*", "110"});

  CHECK_FALSE(m_dense_report(lib.resolve("A"), 12, 10).dense);
  CHECK(m_dense_report(lib.resolve("A"), 11, 10).dense);
}

TEST_CASE("pattern expansion matches brute force") {
  const auto& lib = MapLibrary::instance();
  for (const char* name :
       {"B", "C", "J", "span4/3", "span5/1", "perm_plus_span4/1", "flip_post_span4/8"}) {
    const LocalRule rule = lib.resolve(name);
    for (unsigned k : {1u, 3u, 7u, 12u})
      for (unsigned m : {1u, 2u, 5u, 8u}) {
        const DensityReport r = m_dense_report(rule, k, m);
        const std::set<std::uint64_t> occur = occurring_words(rule, k, m);
        std::set<std::uint64_t> missing;
        for (std::uint64_t w = 0; w < ipow(2, m); ++w)
          if (!occur.count(w)) missing.insert(w);
        CAPTURE(name);
        CAPTURE(k);
        CAPTURE(m);
        CHECK(r.missing_count == missing.size());
        CHECK(expand_patterns(r.missing_patterns, 2, m) == missing);
        CHECK(r.dense == missing.empty());
      }
  }
}

TEST_CASE("patterns are prefix-free") {
  const auto& lib = MapLibrary::instance();
  for (const char* name : {"A", "B", "C"}) {
    const DensityReport r = m_dense_report(lib.resolve(name), 9, 6);
    for (const std::string& a : r.missing_patterns)
      for (const std::string& b : r.missing_patterns) {
        if (a == b) continue;
        const std::string stem = a.back() == '*' ? a.substr(0, a.size() - 1) : a;
        CHECK(b.rfind(stem, 0) != 0);
      }
  }
}

TEST_CASE("all-periodic maps are dense for every window") {
  for (unsigned k = 2; k <= 6; ++k)
    for (unsigned m = 1; m <= k; ++m) CHECK(m_dense_report(identity_rule(2), k, m).dense);
}

TEST_CASE("occurrence wraps when the window is longer than the word") {
  const auto& lib = MapLibrary::instance();
  // k=1, m=3: the two constant words give 000 and 111 only
  const DensityReport r = m_dense_report(identity_rule(2), 1, 3);
  CHECK(r.missing_count == 6);
  // brute-force agreement including m > k
  for (unsigned k : {1u, 2u, 3u})
    for (unsigned m : {4u, 6u}) {
      const DensityReport q = m_dense_report(lib.resolve("B"), k, m);
      const auto occur = occurring_words(lib.resolve("B"), k, m);
      CHECK(q.missing_count == ipow(2, m) - occur.size());
    }
}

TEST_CASE("compressor collapses maximal subtrees only") {
  CodeBitset missing(16);
  for (std::uint64_t i = 0; i < 16; ++i) missing.set(i);
  CHECK(compress_missing(missing, 2, 4) == std::vector<std::string>{"*"});

  CodeBitset one(16);
  one.set(5);
  CHECK(compress_missing(one, 2, 4) == std::vector<std::string>{"0101"});

  CodeBitset half(16);
  for (std::uint64_t i = 8; i < 16; ++i) half.set(i);
  CHECK(compress_missing(half, 2, 4) == std::vector<std::string>{"1*"});
}

TEST_CASE("range scans") {
  const auto& lib = MapLibrary::instance();
  const auto rows = dense_range_scan(identity_rule(2), 2, 2, 4);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.error.empty());
    CHECK(row.dense);
  }
  // budget failures are reported per row and the scan continues
  const auto broke = dense_range_scan(lib.resolve("B"), 2, 2, 18, 4096);
  CHECK(broke.front().error.empty());
  CHECK_FALSE(broke.back().error.empty());
  CHECK_THROWS_AS(dense_range_scan(lib.resolve("B"), 2, 5, 4), std::invalid_argument);
}
