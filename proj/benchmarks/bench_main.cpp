#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "jpca/density.hpp"
#include "jpca/map_library.hpp"
#include "jpca/period.hpp"
#include "jpca/sampling.hpp"

using namespace jpca;

namespace {

const LocalRule& map_of(const char* name) {
  static std::map<std::string, LocalRule> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, MapLibrary::instance().resolve(name)).first;
  return it->second;
}

void BM_ApplyCode(benchmark::State& state, const char* name) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const CodeMap f(map_of(name), k);
  std::uint64_t x = 0x2ull;
  for (auto _ : state) {
    x = f(x);
    benchmark::DoNotOptimize(x);
  }
  state.SetItemsProcessed(state.iterations() * k);
}

void BM_Analyze(benchmark::State& state, const char* name) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const LocalRule& rule = map_of(name);
  for (auto _ : state) {
    PeriodStats st = analyze_period_k(rule, k);
    benchmark::DoNotOptimize(st.periodic_count);
  }
  state.SetItemsProcessed(state.iterations() * (std::uint64_t{1} << k));
}

void BM_Density(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    DensityReport r = m_dense_report(map_of("B"), k, 10);
    benchmark::DoNotOptimize(r.dense);
  }
}

void BM_SampledOrbits(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SampleReport r = prob_period_report(map_of("B"), k, 10, seed++);
    benchmark::DoNotOptimize(r.max_period);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_ApplyCode, A, "A")->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_ApplyCode, K, "K")->Arg(16)->Arg(24);
BENCHMARK_CAPTURE(BM_ApplyCode, B3, "B3")->Arg(12);
BENCHMARK_CAPTURE(BM_Analyze, A, "A")->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_Analyze, B, "B")->Arg(16)->Arg(20);
BENCHMARK_CAPTURE(BM_Analyze, J, "J")->Arg(16);
BENCHMARK(BM_Density)->Arg(14)->Arg(18);
BENCHMARK(BM_SampledOrbits)->Arg(24)->Arg(30);

BENCHMARK_MAIN();
