#include <benchmark/benchmark.h>

#include "kreweras/bijection.hpp"
#include "kreweras/combinatorics.hpp"
#include "kreweras/enumerate.hpp"
#include "kreweras/sampler.hpp"

namespace {

using namespace kreweras;

void BM_EnumeratePaths(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  std::size_t total = 0;
  for (auto _ : state) {
    for (const DyckPath& q : enumerate_paths(m)) {
      benchmark::DoNotOptimize(q);
      ++total;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(total));
}
BENCHMARK(BM_EnumeratePaths)->DenseRange(8, 12, 2);

void BM_JointDistribution(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_distribution(m, m));
}
BENCHMARK(BM_JointDistribution)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_StarSweep(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (std::uint64_t n = 1; n <= limit; ++n) {
      for (std::uint64_t r = 1; r <= limit; ++r) {
        benchmark::DoNotOptimize(star_lhs(n, r) == star_rhs(n, r).rhs);
      }
    }
  }
}
BENCHMARK(BM_StarSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Narayana(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(narayana(n, n / 2));
}
BENCHMARK(BM_Narayana)->Arg(100)->Arg(1000)->Arg(5000);

void BM_Sample(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const UniformPathSampler sampler(n, n);
  std::uint64_t index = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(42, index++));
}
BENCHMARK(BM_Sample)->Arg(5)->Arg(50)->Arg(200);

void BM_Fiber(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  const DyckPath base = parse_path("UUDUDD");
  std::size_t total = 0;
  for (auto _ : state) {
    for (const DyckPath& q : fiber(base, r)) {
      benchmark::DoNotOptimize(q);
      ++total;
    }
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(total));
}
BENCHMARK(BM_Fiber)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
