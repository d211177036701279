#include <benchmark/benchmark.h>

#include "foulkes/characters.hpp"
#include "foulkes/oracle.hpp"
#include "foulkes/partition.hpp"
#include "foulkes/perm.hpp"
#include "foulkes/symfun.hpp"
#include "foulkes/tableaux.hpp"

namespace {

void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(foulkes::detail::build_character_table(n, 1));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(10)->Arg(12);

void BM_Straighten(benchmark::State& state) {
  const int b = static_cast<int>(state.range(0));
  // Reversed filling of a two-row shape is maximally non-standard.
  std::vector<int> entries(static_cast<size_t>(b));
  for (int i = 0; i < b; ++i) entries[static_cast<size_t>(i)] = b - i;
  const foulkes::Tableau worst(foulkes::Partition({(b + 1) / 2, b / 2}),
                               std::move(entries));
  for (auto _ : state) {
    benchmark::DoNotOptimize(foulkes::detail::straighten_impl(worst));
  }
}
BENCHMARK(BM_Straighten)->Arg(6)->Arg(8)->Arg(10);

void BM_Plethysm(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const foulkes::Partition nu = foulkes::Partition::single_row(b);
  for (auto _ : state) {
    benchmark::DoNotOptimize(foulkes::detail::plethysm_h_impl(nu, a, foulkes::kDefaultBounds));
  }
}
BENCHMARK(BM_Plethysm)->Args({2, 4})->Args({3, 3})->Args({3, 4})->Args({2, 6});

void BM_OracleTrace(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  const int b = static_cast<int>(state.range(1));
  const foulkes::OracleModule module(a, b, foulkes::Partition::single_row(b));
  const foulkes::Permutation g =
      foulkes::Permutation::from_cycle_type(foulkes::Partition({a * b}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(module.trace(g));
  }
}
BENCHMARK(BM_OracleTrace)->Args({2, 3})->Args({2, 4})->Args({3, 2});

}  // namespace

BENCHMARK_MAIN();
