#include "jpca/density.hpp"

#include <bit>

namespace jpca {

std::uint64_t CodeBitset::popcount() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_) n += std::popcount(w);
  return n;
}

std::uint64_t CodeBitset::popcount_range(std::uint64_t begin, std::uint64_t end) const {
  std::uint64_t n = 0;
  for (std::uint64_t i = begin >> 6; i <= (end - 1) >> 6 && i < bits_.size(); ++i) {
    std::uint64_t w = bits_[i];
    const std::uint64_t lo = i << 6;
    if (begin > lo) w &= ~std::uint64_t{0} << (begin - lo);
    if (end < lo + 64) w &= (std::uint64_t{1} << (end - lo)) - 1;
    n += std::popcount(w);
  }
  return n;
}

namespace {

// Same path-walking decomposition as analyze_period_k, but keeps only the
// on-a-cycle verdict: 2 bits of status live in a packed array, the path
// positions in the walk stack itself.
CodeBitset periodic_bits(const LocalRule& rule, unsigned k, std::uint64_t memory_budget) {
  const CodeMap f(rule, k);
  const std::uint64_t total = f.state_count();
  const std::uint64_t required = analysis_bytes_required(rule, k, /*with_spectrum=*/false);
  if (required > memory_budget)
    throw BudgetError("jointly_periodic_membership: needs " + std::to_string(required) +
                          " bytes, budget is " + std::to_string(memory_budget),
                      required);

  constexpr std::uint32_t kUnvisited = ~std::uint32_t{0};
  constexpr std::uint32_t kDoneOff = 0;      // resolved, not on a cycle
  constexpr std::uint32_t kDoneOn = 1;       // resolved, on a cycle
  // values >= 2 mean "on current path at position value-2"
  std::vector<std::uint32_t> tag(total, kUnvisited);
  std::vector<std::uint32_t> path;
  CodeBitset periodic(total);

  for (std::uint64_t start = 0; start < total; ++start) {
    if (tag[start] != kUnvisited) continue;
    path.clear();
    path.push_back(static_cast<std::uint32_t>(start));
    tag[start] = 2;
    std::uint64_t x = start;
    for (;;) {
      const std::uint64_t y = f(x);
      if (tag[y] == kUnvisited) {
        tag[y] = static_cast<std::uint32_t>(path.size()) + 2;
        path.push_back(static_cast<std::uint32_t>(y));
        x = y;
        continue;
      }
      if (tag[y] >= 2) {
        const std::uint32_t j = tag[y] - 2;
        for (std::uint32_t i = j; i < path.size(); ++i) {
          tag[path[i]] = kDoneOn;
          periodic.set(path[i]);
        }
        for (std::uint32_t i = 0; i < j; ++i) tag[path[i]] = kDoneOff;
      } else {
        for (std::uint32_t p : path) tag[p] = kDoneOff;
      }
      break;
    }
  }
  return periodic;
}

}  // namespace

CodeBitset jointly_periodic_membership(const LocalRule& rule, unsigned k,
                                       std::uint64_t memory_budget) {
  return periodic_bits(rule, k, memory_budget);
}

std::vector<std::string> compress_missing(const CodeBitset& missing, unsigned alphabet_size,
                                          unsigned m) {
  std::vector<std::string> out;
  std::string prefix;
  // depth-first over prefixes; a range with no missing word is skipped, a
  // fully missing range is emitted as one pattern
  auto walk = [&](auto&& self, std::uint64_t begin, std::uint64_t end, unsigned depth) -> void {
    const std::uint64_t miss = missing.popcount_range(begin, end);
    if (miss == 0) return;
    if (miss == end - begin) {
      out.push_back(depth == m ? prefix : prefix + '*');
      return;
    }
    const std::uint64_t stride = (end - begin) / alphabet_size;
    for (unsigned c = 0; c < alphabet_size; ++c) {
      prefix.push_back(char('0' + c));
      self(self, begin + c * stride, begin + (c + 1) * stride, depth + 1);
      prefix.pop_back();
    }
  };
  walk(walk, 0, missing.size(), 0);
  return out;
}

DensityReport m_dense_report(const LocalRule& rule, unsigned k, unsigned m,
                             std::uint64_t memory_budget) {
  if (k < 1 || m < 1) throw std::invalid_argument("m_dense_report: k and m must be positive");
  const unsigned n = rule.alphabet_size();
  const std::uint64_t word_count = ipow(n, m);
  const std::uint64_t extra = (word_count + 7) / 8 * 2;
  const CodeBitset periodic = jointly_periodic_membership(
      rule, k, memory_budget > extra ? memory_budget - extra : 0);

  CodeBitset seen(word_count);
  const std::uint64_t total = periodic.size();
  const std::uint64_t mod = ipow(n, m - 1);
  std::uint8_t sym[64];
  for (std::uint64_t code = 0; code < total; ++code) {
    if (!periodic.test(code)) continue;
    std::uint64_t v = code;
    for (unsigned i = k; i-- > 0;) {
      sym[i] = static_cast<std::uint8_t>(v % n);
      v /= n;
    }
    // windows of length m starting at each of the k positions, wrapping
    std::uint64_t w = 0;
    for (unsigned j = 0; j < m; ++j) w = w * n + sym[j % k];
    seen.set(w);
    for (unsigned start = 1; start < k; ++start) {
      w = (w % mod) * n + sym[(start + m - 1) % k];
      seen.set(w);
    }
  }

  DensityReport report;
  report.k = k;
  report.m = m;
  CodeBitset missing(word_count);
  for (std::uint64_t w = 0; w < word_count; ++w)
    if (!seen.test(w)) missing.set(w);
  report.missing_count = missing.popcount();
  report.dense = report.missing_count == 0;
  if (!report.dense) report.missing_patterns = compress_missing(missing, n, m);
  return report;
}

std::vector<DenseScanRow> dense_range_scan(const LocalRule& rule, unsigned m,
                                           unsigned k_lo, unsigned k_hi,
                                           std::uint64_t memory_budget) {
  if (k_lo > k_hi) throw std::invalid_argument("dense_range_scan: empty range");
  std::vector<DenseScanRow> rows;
  for (unsigned k = k_lo; k <= k_hi; ++k) {
    DenseScanRow row;
    row.k = k;
    try {
      DensityReport r = m_dense_report(rule, k, m, memory_budget);
      row.dense = r.dense;
      row.missing_count = r.missing_count;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace jpca
