#include <numeric>

#include <benchmark/benchmark.h>

#include "posetff/adversary.hpp"
#include "posetff/ff_homomorphism.hpp"
#include "posetff/first_fit.hpp"
#include "posetff/generators.hpp"
#include "posetff/interval_extension.hpp"

using namespace posetff;

static void BM_BuildPoset(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poset src = gen_random_dag(1, n, 0.05);
  const auto rel = src.cover_relations();
  for (auto _ : state) benchmark::DoNotOptimize(Poset::build(n, rel));
}
BENCHMARK(BM_BuildPoset)->Arg(64)->Arg(256)->Arg(1024);

static void BM_Width(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poset p = gen_random_dag(2, n, 0.05);
  for (auto _ : state) benchmark::DoNotOptimize(width_with_witness(p));
}
BENCHMARK(BM_Width)->Arg(64)->Arg(256)->Arg(1024);

static void BM_FirstFitStacked(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const auto sp = stacked(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(first_fit_chains(sp.poset, sp.order));
}
BENCHMARK(BM_FirstFitStacked)->Arg(5)->Arg(10)->Arg(20);

static void BM_FirstFitRandomOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poset p = gen_interval_order_of_width(3, n, 8);
  std::vector<Id> ids(n);
  std::iota(ids.begin(), ids.end(), Id{0});
  Rng rng(4);
  rng.shuffle(ids);
  const PresentationOrder order(ids);
  for (auto _ : state) benchmark::DoNotOptimize(first_fit_chains(p, order));
}
BENCHMARK(BM_FirstFitRandomOrder)->Arg(128)->Arg(1024);

static void BM_KkSearch(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Poset p = stacked(k, 4).poset;
  for (auto _ : state) benchmark::DoNotOptimize(find_k_plus_k(p, k));
}
BENCHMARK(BM_KkSearch)->Arg(3)->Arg(4)->Arg(5);

static void BM_IntervalExtension(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Poset p = gen_interval_order(5, n, static_cast<long long>(n));
  for (auto _ : state) benchmark::DoNotOptimize(interval_order_of(p, 2));
}
BENCHMARK(BM_IntervalExtension)->Arg(60)->Arg(240);

static void BM_GrundySweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_graph(6, n, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(grundy_number(g, n));
}
BENCHMARK(BM_GrundySweep)->Arg(6)->Arg(8)->Arg(10);

static void BM_PathwidthExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_graph(7, n, 0.35);
  for (auto _ : state) benchmark::DoNotOptimize(pathwidth_exact(g));
}
BENCHMARK(BM_PathwidthExact)->Arg(8)->Arg(12)->Arg(14);
BENCHMARK_MAIN();
