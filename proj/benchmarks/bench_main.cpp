#include <benchmark/benchmark.h>

#include "cayley/characters.hpp"
#include "cayley/oracle.hpp"
#include "cayley/spectra.hpp"
#include "cayley/yor.hpp"

namespace {

void BM_SumOverSet(benchmark::State& state) {
  const auto h = cayley::enum_cycles(7, 6, 2);
  const auto ev = cayley::build_evaluator(cayley::Partition({4, 2, 1}));
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ev.sum_over_set(h, workers));
}
BENCHMARK(BM_SumOverSet)->Arg(1)->Arg(2);

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto shapes = cayley::enumerate_partitions(n);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& a : shapes) {
      for (const auto& c : shapes) acc += cayley::character(a, c);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(12);

void BM_AssembleSeven(benchmark::State& state) {
  const auto h = cayley::enum_cycles(7, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cayley::assemble_graph_spectrum(h));
}
BENCHMARK(BM_AssembleSeven)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_OracleSix(benchmark::State& state) {
  const auto h = cayley::enum_cycles(6, 5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cayley::brute_spectrum(cayley::build_graph(h)));
  }
}
BENCHMARK(BM_OracleSix)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
