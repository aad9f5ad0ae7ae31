#include "kexclude/almost_structures.hpp"
#include "kexclude/exact_oracle.hpp"
#include "kexclude/generators.hpp"
#include "kexclude/poly_excluder.hpp"

#include <benchmark/benchmark.h>

using namespace kex;

static void BM_MaxCliqueThrough(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_gnp(n, 0.5, 7);
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_through(g, 0).size);
}
BENCHMARK(BM_MaxCliqueThrough)->Arg(100)->Arg(150)->Arg(200);

static void BM_ClassifyAll4pd(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_4pd(d).graph;
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(g, d + 2).excluding.size());
}
BENCHMARK(BM_ClassifyAll4pd)->DenseRange(2, 8, 3);

static void BM_KOfNLabeled(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_of_n_exhaustive(n, EnumerationMode::Labeled).k_of_n);
}
BENCHMARK(BM_KOfNLabeled)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_KOfNCanonical(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(k_of_n_exhaustive(n, EnumerationMode::Canonical).k_of_n);
}
BENCHMARK(BM_KOfNCanonical)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_FindAcceptable(benchmark::State& state) {
  const Graph g = gen_planted(100, 0.3, 20, StructureKind::Clique, 3).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_acceptable_graph(g, 20, Rational(1, 4)).index());
}
BENCHMARK(BM_FindAcceptable);

static void BM_PolyExcluderGnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_gnp(n, 0.5, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(find_excluding_poly(g, n / 3, Rational(1)).outcome.index());
}
BENCHMARK(BM_PolyExcluderGnp)->Arg(150)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_PolyExcluderPlanted(benchmark::State& state) {
  const Graph g = gen_planted(160, 0.5, 55, StructureKind::Clique, 8).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(find_excluding_poly(g, 55, Rational(1)).outcome.index());
}
BENCHMARK(BM_PolyExcluderPlanted)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
