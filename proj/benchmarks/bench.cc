#include <benchmark/benchmark.h>

#include "dirset/arith.h"
#include "dirset/diagnostics.h"
#include "dirset/direction.h"

namespace dirset {
namespace {

void BM_LinearSieve(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Sieve(SieveKind::kTotient, bound));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinearSieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SegmentedSieve(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t sum = 0;
    ForEachSegment(SieveKind::kOmega, bound, 1 << 18,
                   [&](std::uint64_t, std::span<const std::uint64_t> v) { sum += v.size(); });
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SegmentedSieve)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_Truncation(benchmark::State& state) {
  const std::vector<IntegerSetSpec> specs(static_cast<std::size_t>(state.range(1)), ParseSetSpec("primes"));
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(BuildTruncation(specs, bound, false));
}
BENCHMARK(BM_Truncation)->Args({10'000, 2})->Args({1000, 3})->Unit(benchmark::kMillisecond);

void BM_SampledTruncation(benchmark::State& state) {
  const std::vector<IntegerSetSpec> specs(3, ParseSetSpec("primes"));
  for (auto _ : state)
    benchmark::DoNotOptimize(BuildTruncation(specs, 100'000, false, SampledMode{1, 1'000'000}));
}
BENCHMARK(BM_SampledTruncation)->Unit(benchmark::kMillisecond);

void BM_Coverage(benchmark::State& state) {
  const std::vector<IntegerSetSpec> specs(2, ParseSetSpec("primes"));
  const auto t = BuildTruncation(specs, static_cast<std::uint64_t>(state.range(0)), false);
  const auto probes = ProbeGrid(2, 500);
  for (auto _ : state) benchmark::DoNotOptimize(Coverage(t, 0.02, probes));
  state.counters["points"] = static_cast<double>(t.size());
}
BENCHMARK(BM_Coverage)->Arg(10'000)->Arg(30'000)->Unit(benchmark::kMillisecond);

void BM_RatioGapsSieve(benchmark::State& state) {
  const auto values = Enumerate(ParseSetSpec("blocks:q=5:1-2"), 100'000);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        RatioGaps(values, 100'000, Rational(1), Rational(4), 100, GapScanMode::kIntervalSieve));
}
BENCHMARK(BM_RatioGapsSieve)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dirset

BENCHMARK_MAIN();
