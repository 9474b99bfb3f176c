#include <benchmark/benchmark.h>

#include "radgen/radgen.hpp"

using namespace radgen;

namespace {
const FactorSieve& shared_sieve() {
  static const FactorSieve sieve(1'000'000);
  return sieve;
}
const PrimeTable& shared_primes() {
  static const PrimeTable primes = sieve_primes(1'000'000);
  return primes;
}
}  // namespace

static void BM_PrimeSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sieve_primes(limit).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PrimeSieve)->Arg(1'000'000)->Arg(10'000'000)->Arg(200'000'000)->Unit(benchmark::kMillisecond);

static void BM_FactorSieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    FactorSieve sieve(limit);
    benchmark::DoNotOptimize(sieve.radical(limit));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FactorSieve)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_Series(benchmark::State& state) {
  const auto params = Params::make(2.6, 0.5);
  const auto spec = MultiplicativeSpec::radical();
  const ExecutionPolicy policy{static_cast<unsigned>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(series_d(spec, shared_sieve(), params, 1'000'000, policy).value);
}
BENCHMARK(BM_Series)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_Product(benchmark::State& state) {
  const auto params = Params::make(2.6, 0.5);
  const auto spec = MultiplicativeSpec::radical();
  for (auto _ : state)
    benchmark::DoNotOptimize(product_d(spec, shared_primes(), params, 1'000'000).value);
}
BENCHMARK(BM_Product)->Unit(benchmark::kMillisecond);

static void BM_StRatio(benchmark::State& state) {
  const auto params = Params::make(4, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(st_ratio(shared_primes(), params, 1'000'000).ratio);
}
BENCHMARK(BM_StRatio)->Unit(benchmark::kMillisecond);

static void BM_AbcScan(benchmark::State& state) {
  const auto params = Params::make(4, 1);
  ScanOptions options;
  options.policy.threads = static_cast<unsigned>(state.range(1));
  const auto c_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    AbcImplicationVerifier verifier;
    scan(shared_sieve(), shared_primes(), params, c_max, 100'000,
         [&](const AbcRecord& r) { verifier.add(r); }, options);
    benchmark::DoNotOptimize(verifier.report().records);
  }
}
BENCHMARK(BM_AbcScan)->Args({2'000, 1})->Args({2'000, 4})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
