#include "jpca/rule.hpp"

#include <algorithm>
#include <cmath>

namespace jpca {

LocalRule::LocalRule(unsigned alphabet_size, int offset_lo, int offset_hi,
                     std::vector<std::uint8_t> table)
    : n_(alphabet_size), lo_(offset_lo), hi_(offset_hi), table_(std::move(table)) {
  if (n_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (hi_ < lo_) throw std::invalid_argument("window is empty");
  const unsigned s = span();
  if (ipow(n_, s) != table_.size())
    throw std::invalid_argument("table length must be N^span");
  for (std::uint8_t v : table_)
    if (v >= n_) throw std::invalid_argument("table entry outside alphabet");
}

PeriodicWord::PeriodicWord(unsigned alphabet_size, std::vector<std::uint8_t> symbols)
    : n_(alphabet_size), symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("word length must be positive");
  if (symbols_.size() * std::log2(double(n_)) > 63)
    throw std::invalid_argument("word too long for the integer encoding");
  code_ = 0;
  for (std::uint8_t s : symbols_) {
    if (s >= n_) throw std::invalid_argument("symbol outside alphabet");
    code_ = code_ * n_ + s;
  }
}

PeriodicWord PeriodicWord::from_code(unsigned alphabet_size, unsigned length,
                                     std::uint64_t code) {
  std::vector<std::uint8_t> sym(length);
  std::uint64_t v = code;
  for (unsigned i = length; i-- > 0;) {
    sym[i] = static_cast<std::uint8_t>(v % alphabet_size);
    v /= alphabet_size;
  }
  if (v != 0) throw std::invalid_argument("code out of range for word length");
  return PeriodicWord(alphabet_size, std::move(sym));
}

std::string PeriodicWord::str() const {
  std::string s(symbols_.size(), '0');
  for (size_t i = 0; i < symbols_.size(); ++i) s[i] = char('0' + symbols_[i]);
  return s;
}

LocalRule identity_rule(unsigned alphabet_size) {
  std::vector<std::uint8_t> t(alphabet_size);
  for (unsigned i = 0; i < alphabet_size; ++i) t[i] = static_cast<std::uint8_t>(i);
  return LocalRule(alphabet_size, 0, 0, std::move(t));
}

LocalRule from_lookup_code(std::string_view word, unsigned alphabet_size,
                           unsigned span, int offset_lo) {
  if (alphabet_size < 2 || alphabet_size > 10)
    throw std::invalid_argument("alphabet size must be in [2,10] for text rules");
  std::vector<std::uint8_t> table;
  table.reserve(word.size());
  for (char c : word) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c < '0' || c >= char('0' + alphabet_size))
      throw ParseError(std::string("invalid symbol character '") + c + "' in lookup code");
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  const std::uint64_t want = ipow(alphabet_size, span);
  if (table.size() != want)
    throw ParseError("lookup code has " + std::to_string(table.size()) +
                     " symbols, expected " + std::to_string(want));
  return LocalRule(alphabet_size, offset_lo, offset_lo + int(span) - 1, std::move(table));
}

std::string to_lookup_code(const LocalRule& rule) {
  std::string s(rule.table().size(), '0');
  for (size_t i = 0; i < s.size(); ++i) s[i] = char('0' + rule.table()[i]);
  return s;
}

LocalRule compose(const LocalRule& outer, const LocalRule& inner) {
  if (outer.alphabet_size() != inner.alphabet_size())
    throw std::invalid_argument("compose: alphabet sizes differ");
  const unsigned n = outer.alphabet_size();
  const unsigned so = outer.span(), si = inner.span();
  const unsigned sc = so + si - 1;
  std::uint64_t entries = 1;
  for (unsigned i = 0; i < sc; ++i) {
    entries *= n;
    if (entries > kMaxTableEntries)
      throw BudgetError("compose: table would exceed the size budget", entries * sc);
  }
  std::vector<std::uint8_t> table(entries);
  std::vector<std::uint8_t> digits(sc);
  const std::uint64_t inner_mod = ipow(n, si - 1);
  for (std::uint64_t idx = 0; idx < entries; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = sc; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(v % n);
      v /= n;
    }
    // Rolling window of the inner rule across the combined block.
    std::uint64_t win = 0;
    for (unsigned j = 0; j < si; ++j) win = win * n + digits[j];
    std::uint64_t mid = inner.table()[win];
    for (unsigned t = 1; t < so; ++t) {
      win = (win % inner_mod) * n + digits[t + si - 1];
      mid = mid * n + inner.table()[win];
    }
    table[idx] = outer.table()[mid];
  }
  return LocalRule(n, outer.offset_lo() + inner.offset_lo(),
                   outer.offset_hi() + inner.offset_hi(), std::move(table));
}

LocalRule compose_shift(const LocalRule& rule, int j) {
  constexpr int kMaxOffset = 1 << 20;
  if (rule.offset_lo() + j < -kMaxOffset || rule.offset_hi() + j > kMaxOffset)
    throw std::invalid_argument("compose_shift: window offset overflow");
  return LocalRule(rule.alphabet_size(), rule.offset_lo() + j, rule.offset_hi() + j,
                   rule.table());
}

LocalRule flip_pre(const LocalRule& rule) {
  const unsigned n = rule.alphabet_size();
  const unsigned s = rule.span();
  std::vector<std::uint8_t> table(rule.table().size());
  std::vector<std::uint8_t> digits(s);
  for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
    std::uint64_t v = idx, shifted = 0;
    for (unsigned i = s; i-- > 0;) {
      digits[i] = static_cast<std::uint8_t>(v % n);
      v /= n;
    }
    for (unsigned i = 0; i < s; ++i) shifted = shifted * n + (digits[i] + 1) % n;
    table[idx] = rule.table()[shifted];
  }
  return LocalRule(n, rule.offset_lo(), rule.offset_hi(), std::move(table));
}

LocalRule flip_post(const LocalRule& rule) {
  const unsigned n = rule.alphabet_size();
  std::vector<std::uint8_t> table(rule.table());
  for (auto& v : table) v = static_cast<std::uint8_t>((v + 1) % n);
  return LocalRule(n, rule.offset_lo(), rule.offset_hi(), std::move(table));
}

PeriodicWord apply_periodic(const LocalRule& rule, const PeriodicWord& w) {
  if (rule.alphabet_size() != w.alphabet_size())
    throw std::invalid_argument("apply_periodic: alphabet sizes differ");
  const unsigned k = w.length();
  const unsigned n = rule.alphabet_size();
  const unsigned s = rule.span();
  const auto& sym = w.symbols();
  auto at = [&](long long p) {
    long long r = p % static_cast<long long>(k);
    if (r < 0) r += k;
    return sym[static_cast<size_t>(r)];
  };
  std::vector<std::uint8_t> out(k);
  // Rolling window; index of position i covers x[i+lo .. i+hi].
  const std::uint64_t mod = ipow(n, s - 1);
  std::uint64_t win = 0;
  for (unsigned j = 0; j < s; ++j)
    win = win * n + at(rule.offset_lo() + static_cast<long long>(j));
  out[0] = rule.table()[win];
  for (unsigned i = 1; i < k; ++i) {
    win = (win % mod) * n + at(static_cast<long long>(i) + rule.offset_hi());
    out[i] = rule.table()[win];
  }
  return PeriodicWord(n, std::move(out));
}

CodeMap::CodeMap(const LocalRule& rule, unsigned k)
    : table_(rule.table().data()),
      n_(rule.alphabet_size()),
      k_(k),
      span_(rule.span()),
      lo_(rule.offset_lo()) {
  if (k == 0) throw std::invalid_argument("word length must be positive");
  if (k > 63) throw std::invalid_argument("word length exceeds code range");
  double bits = k * std::log2(double(n_));
  if (bits > 62) throw std::invalid_argument("N^k exceeds code range");
  total_ = ipow(n_, k);
  fast_ = (n_ == 2 && span_ <= k_ && 2 * k_ <= 64);
}

std::uint64_t CodeMap::apply_fast(std::uint64_t code) const {
  const unsigned k = k_, s = span_;
  const std::uint64_t doubled = code | (code << k);
  const std::uint64_t mask = (std::uint64_t{1} << s) - 1;
  unsigned p = static_cast<unsigned>(((lo_ % int(k)) + int(k)) % int(k));
  std::uint64_t out = 0;
  for (unsigned i = 0; i < k; ++i) {
    out = (out << 1) | table_[(doubled >> (2 * k - p - s)) & mask];
    if (++p == k) p = 0;
  }
  return out;
}

std::uint64_t CodeMap::apply_general(std::uint64_t code) const {
  const unsigned k = k_, s = span_, n = n_;
  std::uint8_t sym[64];
  std::uint64_t v = code;
  for (unsigned i = k; i-- > 0;) {
    sym[i] = static_cast<std::uint8_t>(v % n);
    v /= n;
  }
  auto at = [&](long long p) {
    long long r = p % static_cast<long long>(k);
    if (r < 0) r += k;
    return sym[static_cast<size_t>(r)];
  };
  const std::uint64_t mod = ipow(n, s - 1);
  std::uint64_t win = 0;
  for (unsigned j = 0; j < s; ++j) win = win * n + at(lo_ + static_cast<long long>(j));
  std::uint64_t out = table_[win];
  for (unsigned i = 1; i < k; ++i) {
    win = (win % mod) * n + at(static_cast<long long>(i) + lo_ + static_cast<long long>(s) - 1);
    out = out * n + table_[win];
  }
  return out;
}

}  // namespace jpca
