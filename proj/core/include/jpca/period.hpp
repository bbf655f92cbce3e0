// Exact functional-graph analysis of a rule restricted to the circular
// words of a fixed length: periodic counts, cycle spectra, preperiods.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "jpca/rule.hpp"

namespace jpca {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{4} << 30;

struct SpectrumRow {
  std::uint64_t period;     // cycle length p
  std::uint64_t mu_orb;     // number of cycles of length p
  std::uint64_t mu_per;     // points on those cycles (= p * mu_orb)
  std::uint64_t mu_ev;      // points whose eventual period is p
};

struct PeriodStats {
  unsigned k = 0;
  std::uint64_t total = 0;           // N^k
  std::uint64_t periodic_count = 0;  // P
  std::uint64_t longest_cycle = 0;   // L
  double nu_k = 0.0;                 // P^(1/k)
  double l_root = 0.0;               // L^(1/k)
  double avg_period = 0.0;           // mean eventual period over all N^k points
  double avg_preperiod = 0.0;        // mean preperiod over all N^k points
  std::uint64_t max_preperiod = 0;
  std::vector<SpectrumRow> spectrum;  // ascending by period

  std::uint64_t not_periodic() const { return total - periodic_count; }
};

// Bytes of per-state bookkeeping required by analyze_period_k.
std::uint64_t analysis_bytes_required(const LocalRule& rule, unsigned k,
                                      bool with_spectrum = true);

// Full decomposition of the functional graph on all N^k states. Walks each
// unvisited state forward on an explicit path stack; deterministic and
// independent of enumeration order.
PeriodStats analyze_period_k(const LocalRule& rule, unsigned k,
                             std::uint64_t memory_budget = kDefaultMemoryBudget);

// Preperiod and eventual period of a single word, by iterating with a
// visit record (memory grows with the orbit, not with N^k).
struct OrbitResult {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 0;
};
OrbitResult eventual_period_of(const LocalRule& rule, const PeriodicWord& w,
                               std::uint64_t max_steps = 100000000);
OrbitResult eventual_period_of_code(const CodeMap& f, std::uint64_t code,
                                    std::uint64_t max_steps);

std::vector<SpectrumRow> cycle_spectrum(const LocalRule& rule, unsigned k,
                                        std::uint64_t memory_budget = kDefaultMemoryBudget);

// Counts of points of least shift period k that are rule-periodic, by
// Mobius inversion over the divisor lattice of k.
struct LeastPeriodStats {
  std::uint64_t count = 0;  // points of least shift period k in the periodic set
  double nu_o_k = 0.0;      // count^(1/k); 0 when the count is 0
};
LeastPeriodStats least_period_stats(unsigned k,
                                    const std::map<unsigned, PeriodStats>& stats_by_divisor);

int mobius(unsigned n);
double kth_root(std::uint64_t value, unsigned k);

}  // namespace jpca
