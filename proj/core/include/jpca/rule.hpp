// Block-code rules over a finite alphabet and their action on circular words.
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jpca {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, std::uint64_t required_bytes)
      : std::runtime_error(what), required_bytes(required_bytes) {}
  std::uint64_t required_bytes;
};

// Largest compiled rule table: N^span entries.
inline constexpr std::uint64_t kMaxTableEntries = std::uint64_t{1} << 24;

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// A sliding-block rule: output symbol at position i is table[block],
// where block indexes the window x[i+lo .. i+hi] read most significant
// symbol first. Immutable once built.
class LocalRule {
 public:
  LocalRule(unsigned alphabet_size, int offset_lo, int offset_hi,
            std::vector<std::uint8_t> table);

  unsigned alphabet_size() const { return n_; }
  int offset_lo() const { return lo_; }
  int offset_hi() const { return hi_; }
  unsigned span() const { return static_cast<unsigned>(hi_ - lo_ + 1); }
  const std::vector<std::uint8_t>& table() const { return table_; }

  bool operator==(const LocalRule&) const = default;

 private:
  unsigned n_;
  int lo_;
  int hi_;
  std::vector<std::uint8_t> table_;
};

// A circular word of length k: the point of shift period k it determines.
// code = sum symbols[i] * N^(k-1-i), so lexicographic order is numeric order.
class PeriodicWord {
 public:
  PeriodicWord(unsigned alphabet_size, std::vector<std::uint8_t> symbols);
  static PeriodicWord from_code(unsigned alphabet_size, unsigned length,
                                std::uint64_t code);

  unsigned alphabet_size() const { return n_; }
  unsigned length() const { return static_cast<unsigned>(symbols_.size()); }
  const std::vector<std::uint8_t>& symbols() const { return symbols_; }
  std::uint64_t code() const { return code_; }
  std::string str() const;

  bool operator==(const PeriodicWord&) const = default;

 private:
  unsigned n_;
  std::vector<std::uint8_t> symbols_;
  std::uint64_t code_;
};

LocalRule identity_rule(unsigned alphabet_size);

// Builds a rule from its output table written as a symbol string over
// lexicographically ordered input blocks. Whitespace is ignored.
LocalRule from_lookup_code(std::string_view word, unsigned alphabet_size,
                           unsigned span, int offset_lo);
std::string to_lookup_code(const LocalRule& rule);

// Compiled composition: outer(inner(x)), window sums coordinatewise.
LocalRule compose(const LocalRule& outer, const LocalRule& inner);

// rule followed by the j-th shift power: same table, window moved by j.
LocalRule compose_shift(const LocalRule& rule, int j);

LocalRule flip_pre(const LocalRule& rule);   // rule(x+1)
LocalRule flip_post(const LocalRule& rule);  // rule(x)+1

PeriodicWord apply_periodic(const LocalRule& rule, const PeriodicWord& w);

// Evaluates a rule on integer-coded circular words of a fixed length.
// Precomputes window geometry once; safe to share between threads. Holds a
// view of the rule's table, so the rule must outlive the evaluator.
class CodeMap {
 public:
  CodeMap(const LocalRule& rule, unsigned k);

  std::uint64_t operator()(std::uint64_t code) const {
    return fast_ ? apply_fast(code) : apply_general(code);
  }

  unsigned length() const { return k_; }
  std::uint64_t state_count() const { return total_; }

 private:
  std::uint64_t apply_fast(std::uint64_t code) const;
  std::uint64_t apply_general(std::uint64_t code) const;

  const std::uint8_t* table_;
  unsigned n_;
  unsigned k_;
  unsigned span_;
  int lo_;
  std::uint64_t total_;
  bool fast_;  // N=2, span <= k, 2k <= 64: windows read off a doubled register
};

}  // namespace jpca
