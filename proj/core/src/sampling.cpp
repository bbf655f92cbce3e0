#include "jpca/sampling.hpp"

#include <algorithm>
#include <map>

#include "jpca/period.hpp"

namespace jpca {

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(sample_index + 0x9E3779B97F4A7C15ull)));
}

static std::uint64_t draw_code(unsigned alphabet_size, unsigned k, std::uint64_t seed,
                               std::uint64_t index) {
  SplitMix64 rng = sample_stream(seed, index);
  std::uint64_t code = 0;
  for (unsigned i = 0; i < k; ++i) code = code * alphabet_size + rng.below(alphabet_size);
  return code;
}

std::vector<PeriodicWord> sample_words(unsigned alphabet_size, unsigned k,
                                       std::uint64_t count, std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_words: count must be positive");
  std::vector<PeriodicWord> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i)
    out.push_back(PeriodicWord::from_code(alphabet_size, k,
                                          draw_code(alphabet_size, k, seed, i)));
  return out;
}

SampleReport prob_period_report(const LocalRule& rule, unsigned k,
                                std::uint64_t sample_count, std::uint64_t seed,
                                std::uint64_t max_steps) {
  if (sample_count < 1) throw std::invalid_argument("prob_period_report: need samples >= 1");
  if (max_steps < 1) throw std::invalid_argument("prob_period_report: max_steps must be positive");
  const CodeMap f(rule, k);

  SampleReport report;
  report.k = k;
  report.sample_count = sample_count;
  report.seed = seed;

  std::map<std::uint64_t, std::uint64_t> multiplicity;
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    const std::uint64_t code = draw_code(rule.alphabet_size(), k, seed, i);
    try {
      const OrbitResult r = eventual_period_of_code(f, code, max_steps);
      ++multiplicity[r.period];
      report.preperiods.push_back(r.preperiod);
      report.max_period = std::max(report.max_period, r.period);
      report.max_preperiod = std::max(report.max_preperiod, r.preperiod);
    } catch (const std::exception&) {
      report.partial = true;
      report.failed_samples.push_back(i);
    }
  }
  report.rows.assign(multiplicity.begin(), multiplicity.end());
  std::sort(report.preperiods.begin(), report.preperiods.end());
  report.l_root = kth_root(report.max_period, k);
  report.m_root = kth_root(report.max_preperiod, k);
  return report;
}

}  // namespace jpca
