#include <benchmark/benchmark.h>

#include "hyperspec/bounds.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/spectra.hpp"
#include "hyperspec/structure.hpp"

using namespace hyperspec;

static void BM_Energy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto h = random_hypergraph(n, 2 * n, {2, 5}, 7);
  for (auto _ : state) benchmark::DoNotOptimize(energy_value(h));
}
BENCHMARK(BM_Energy)->Arg(16)->Arg(64)->Arg(256);

static void BM_CharPolyExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = adjacency_matrix(random_hypergraph(n, 2 * n, {2, 4}, 11));
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_exact(a));
}
BENCHMARK(BM_CharPolyExact)->Arg(8)->Arg(16)->Arg(32);

static void BM_WeakCut(benchmark::State& state) {
  const auto t = random_hypertree(static_cast<std::size_t>(state.range(0)), {2, 4}, 3);
  const Vertex v = t.edge(0).front();
  const WeakCutSpec cut{split_off(t, 0, std::span(&v, 1))};
  for (auto _ : state) benchmark::DoNotOptimize(is_weak_cut(t, cut));
}
BENCHMARK(BM_WeakCut)->Arg(8)->Arg(64);

static void BM_BoundsReport(benchmark::State& state) {
  const auto h = complete_kgraph(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(full_report(h));
}
BENCHMARK(BM_BoundsReport)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
