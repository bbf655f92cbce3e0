// Denseness of the jointly periodic points: which words of length m occur
// in some rule-periodic circular word of length k.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jpca/period.hpp"
#include "jpca/rule.hpp"

namespace jpca {

// Plain bitset over word codes.
class CodeBitset {
 public:
  explicit CodeBitset(std::uint64_t size) : size_(size), bits_((size + 63) / 64, 0) {}

  void set(std::uint64_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::uint64_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1; }
  std::uint64_t size() const { return size_; }
  std::uint64_t popcount() const;
  // number of set bits in [begin, end)
  std::uint64_t popcount_range(std::uint64_t begin, std::uint64_t end) const;

 private:
  std::uint64_t size_;
  std::vector<std::uint64_t> bits_;
};

// Bit x set iff the word with code x is rule-periodic. popcount equals
// the periodic count of analyze_period_k for the same (rule, k).
CodeBitset jointly_periodic_membership(const LocalRule& rule, unsigned k,
                                       std::uint64_t memory_budget = kDefaultMemoryBudget);

struct DensityReport {
  unsigned k = 0;
  unsigned m = 0;
  bool dense = false;
  // Missing length-m words, trie-compressed: a pattern with a trailing '*'
  // of symbol length t stands for all N^(m-t) extensions. Prefix-free.
  std::vector<std::string> missing_patterns;
  std::uint64_t missing_count = 0;  // number of length-m words missing
};

// A word occurs in x when it is read from some start position with indices
// mod k, so words longer than k wrap around.
DensityReport m_dense_report(const LocalRule& rule, unsigned k, unsigned m,
                             std::uint64_t memory_budget = kDefaultMemoryBudget);

struct DenseScanRow {
  unsigned k = 0;
  bool dense = false;
  std::uint64_t missing_count = 0;
  std::string error;  // nonempty if this k failed (scan continues)
};
std::vector<DenseScanRow> dense_range_scan(const LocalRule& rule, unsigned m,
                                           unsigned k_lo, unsigned k_hi,
                                           std::uint64_t memory_budget = kDefaultMemoryBudget);

// Collapses the missing set into prefix-free starred patterns; maximal full
// subtrees only. Exposed for direct testing.
std::vector<std::string> compress_missing(const CodeBitset& missing, unsigned alphabet_size,
                                          unsigned m);

}  // namespace jpca
