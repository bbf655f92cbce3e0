// Seeded random sampling of circular words with per-orbit rho detection,
// for lengths beyond the exact engine's memory reach.
#pragma once

#include <cstdint>
#include <vector>

#include "jpca/rule.hpp"

namespace jpca {

// splitmix64: fixed-increment stream with the usual finalizer.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform value in [0, bound) by multiply-shift reduction
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent per-sample stream: sample index i under seed s draws from
// SplitMix64(mix(s ^ mix(i + golden))). Results do not depend on the order
// samples are evaluated in.
SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index);

// count i.i.d. uniform words of length k (sampling with replacement);
// deterministic for fixed (alphabet, k, count, seed).
std::vector<PeriodicWord> sample_words(unsigned alphabet_size, unsigned k,
                                       std::uint64_t count, std::uint64_t seed);

struct SampleReport {
  unsigned k = 0;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  // (period, multiplicity) ascending by period; multiplicities sum to the
  // number of completed samples
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  std::vector<std::uint64_t> preperiods;  // one per completed sample, ascending
  std::uint64_t max_period = 0;           // L
  std::uint64_t max_preperiod = 0;        // M
  double l_root = 0.0;                    // L^(1/k)
  double m_root = 0.0;                    // M^(1/k)
  bool partial = false;                   // some samples exceeded their budget
  std::vector<std::uint64_t> failed_samples;  // indices of budget failures
};

SampleReport prob_period_report(const LocalRule& rule, unsigned k,
                                std::uint64_t sample_count, std::uint64_t seed,
                                std::uint64_t max_steps = 100000000);

}  // namespace jpca
