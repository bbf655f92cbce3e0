#include "jpca/period.hpp"

#include <algorithm>
#include <cmath>

#include "jpca/visit_map.hpp"

namespace jpca {

int mobius(unsigned n) {
  int r = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
  }
  if (n > 1) r = -r;
  return r;
}

double kth_root(std::uint64_t value, unsigned k) {
  if (value == 0) return 0.0;
  return std::exp(std::log(static_cast<double>(value)) / k);
}

std::uint64_t analysis_bytes_required(const LocalRule& rule, unsigned k, bool with_spectrum) {
  const std::uint64_t total = ipow(rule.alphabet_size(), k);
  return total * (with_spectrum ? 8 : 4);
}

namespace {

constexpr std::uint32_t kStatusShift = 30;
constexpr std::uint32_t kPayloadMask = (std::uint32_t{1} << kStatusShift) - 1;
constexpr std::uint32_t kUnvisited = 0;
constexpr std::uint32_t kOnPath = 1;
constexpr std::uint32_t kDone = 2;

inline std::uint32_t pack(std::uint32_t status, std::uint32_t payload) {
  return (status << kStatusShift) | payload;
}

}  // namespace

PeriodStats analyze_period_k(const LocalRule& rule, unsigned k, std::uint64_t memory_budget) {
  const CodeMap f(rule, k);
  const std::uint64_t total = f.state_count();
  const std::uint64_t required = analysis_bytes_required(rule, k);
  if (required > memory_budget)
    throw BudgetError("analyze_period_k: needs " + std::to_string(required) +
                          " bytes, budget is " + std::to_string(memory_budget),
                      required);
  if (total > kPayloadMask)
    throw std::invalid_argument("state space too large for per-state tags");

  // tag: 2 status bits + payload (path position while walking, preperiod once done)
  std::vector<std::uint32_t> tag(total, pack(kUnvisited, 0));
  std::vector<std::uint32_t> cycle_of(total, 0);
  std::vector<std::uint64_t> cycle_len;
  std::vector<std::uint32_t> path;

  std::uint64_t preperiod_sum = 0;
  std::uint64_t max_preperiod = 0;

  for (std::uint64_t start = 0; start < total; ++start) {
    if (tag[start] >> kStatusShift != kUnvisited) continue;
    path.clear();
    path.push_back(static_cast<std::uint32_t>(start));
    tag[start] = pack(kOnPath, 0);
    std::uint64_t x = start;
    for (;;) {
      const std::uint64_t y = f(x);
      const std::uint32_t st = tag[y] >> kStatusShift;
      if (st == kUnvisited) {
        tag[y] = pack(kOnPath, static_cast<std::uint32_t>(path.size()));
        path.push_back(static_cast<std::uint32_t>(y));
        x = y;
        continue;
      }
      if (st == kOnPath) {
        // new cycle: path[j..] closes on y
        const std::uint32_t j = tag[y] & kPayloadMask;
        const std::uint32_t cid = static_cast<std::uint32_t>(cycle_len.size());
        cycle_len.push_back(path.size() - j);
        for (std::uint32_t i = j; i < path.size(); ++i) {
          tag[path[i]] = pack(kDone, 0);
          cycle_of[path[i]] = cid;
        }
        for (std::uint32_t i = 0; i < j; ++i) {
          const std::uint32_t pre = j - i;
          tag[path[i]] = pack(kDone, pre);
          cycle_of[path[i]] = cid;
          preperiod_sum += pre;
          max_preperiod = std::max<std::uint64_t>(max_preperiod, pre);
        }
      } else {
        const std::uint32_t base = tag[y] & kPayloadMask;
        const std::uint32_t cid = cycle_of[y];
        const std::uint32_t len = static_cast<std::uint32_t>(path.size());
        for (std::uint32_t i = 0; i < len; ++i) {
          const std::uint32_t pre = base + len - i;
          tag[path[i]] = pack(kDone, pre);
          cycle_of[path[i]] = cid;
          preperiod_sum += pre;
          max_preperiod = std::max<std::uint64_t>(max_preperiod, pre);
        }
      }
      break;
    }
  }

  // aggregate eventual periods per cycle, then per cycle length
  std::vector<std::uint64_t> ev_per_cycle(cycle_len.size(), 0);
  for (std::uint64_t s = 0; s < total; ++s) ++ev_per_cycle[cycle_of[s]];

  std::map<std::uint64_t, SpectrumRow> by_period;
  for (std::uint32_t cid = 0; cid < cycle_len.size(); ++cid) {
    SpectrumRow& row = by_period[cycle_len[cid]];
    row.period = cycle_len[cid];
    row.mu_orb += 1;
    row.mu_ev += ev_per_cycle[cid];
  }

  PeriodStats stats;
  stats.k = k;
  stats.total = total;
  stats.max_preperiod = max_preperiod;
  std::uint64_t period_sum = 0;
  for (auto& [p, row] : by_period) {
    row.mu_per = p * row.mu_orb;
    stats.periodic_count += row.mu_per;
    stats.longest_cycle = std::max(stats.longest_cycle, p);
    period_sum += p * row.mu_ev;
    stats.spectrum.push_back(row);
  }
  stats.nu_k = kth_root(stats.periodic_count, k);
  stats.l_root = kth_root(stats.longest_cycle, k);
  stats.avg_period = static_cast<double>(period_sum) / static_cast<double>(total);
  stats.avg_preperiod = static_cast<double>(preperiod_sum) / static_cast<double>(total);
  return stats;
}

OrbitResult eventual_period_of_code(const CodeMap& f, std::uint64_t code,
                                    std::uint64_t max_steps) {
  VisitMap seen;
  std::uint64_t x = code;
  for (std::uint64_t t = 0;; ++t) {
    const std::uint64_t prev = seen.insert(x, t);
    if (prev != VisitMap::kAbsent) return {prev, t - prev};
    if (t >= max_steps)
      throw std::runtime_error("eventual_period_of: step budget exceeded after " +
                               std::to_string(max_steps) + " steps");
    x = f(x);
  }
}

OrbitResult eventual_period_of(const LocalRule& rule, const PeriodicWord& w,
                               std::uint64_t max_steps) {
  if (rule.alphabet_size() != w.alphabet_size())
    throw std::invalid_argument("eventual_period_of: alphabet sizes differ");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be positive");
  const CodeMap f(rule, w.length());
  return eventual_period_of_code(f, w.code(), max_steps);
}

std::vector<SpectrumRow> cycle_spectrum(const LocalRule& rule, unsigned k,
                                        std::uint64_t memory_budget) {
  return analyze_period_k(rule, k, memory_budget).spectrum;
}

LeastPeriodStats least_period_stats(unsigned k,
                                    const std::map<unsigned, PeriodStats>& stats_by_divisor) {
  // Valid because rule-periodicity is intrinsic to the point and the words
  // of period d | k are exactly the d-periodic repetitions inside P_k.
  std::int64_t count = 0;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    auto it = stats_by_divisor.find(d);
    if (it == stats_by_divisor.end())
      throw std::invalid_argument("least_period_stats: missing stats for divisor " +
                                  std::to_string(d));
    count += static_cast<std::int64_t>(mobius(k / d)) *
             static_cast<std::int64_t>(it->second.periodic_count);
  }
  LeastPeriodStats r;
  r.count = static_cast<std::uint64_t>(count);
  r.nu_o_k = kth_root(r.count, k);
  return r;
}

}  // namespace jpca
