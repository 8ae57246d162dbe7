#include <benchmark/benchmark.h>

#include <random>

#include "sparse_ramsey/canonical.hpp"
#include "sparse_ramsey/containment.hpp"
#include "sparse_ramsey/enumeration.hpp"
#include "sparse_ramsey/families.hpp"
#include "sparse_ramsey/independence.hpp"
#include "sparse_ramsey/ramsey.hpp"
#include "sparse_ramsey/structure.hpp"

using namespace sparse_ramsey;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

void BM_CanonicalForm(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 1);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(9)->Arg(16)->Arg(32);

void BM_CanonicalRegular(benchmark::State& state) {
  const Graph g = families::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRegular);

void BM_ExtendLevel(benchmark::State& state) {
  const int parent = static_cast<int>(state.range(0));
  const auto& parents = canonical_codes(parent);
  for (auto _ : state) benchmark::DoNotOptimize(extend_by_vertex(parents, parent));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parents.size()));
}
BENCHMARK(BM_ExtendLevel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_ContainsPath(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 2.5 / n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(contains_path(g, n / 2));
}
BENCHMARK(BM_ContainsPath)->Arg(20)->Arg(40)->Arg(64);

void BM_IndependenceNumber(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_IndependenceNumber)->Arg(30)->Arg(60)->Arg(100);

void BM_AlphaPrime(benchmark::State& state) {
  const Graph g = families::spider(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_prime(g));
}
BENCHMARK(BM_AlphaPrime);

void BM_RamseyPathPath(benchmark::State& state) {
  canonical_codes(8);
  for (auto _ : state) benchmark::DoNotOptimize(ramsey_number(families::path(6), Target::path(6)));
}
BENCHMARK(BM_RamseyPathPath)->Unit(benchmark::kMillisecond);

void BM_RamseyAtlasScan(benchmark::State& state) {
  RamseyOptions o;
  o.method = RamseyMethod::kAtlasScan;
  canonical_codes(8);
  for (auto _ : state) benchmark::DoNotOptimize(ramsey_number(families::path(6), Target::path(6), o));
}
BENCHMARK(BM_RamseyAtlasScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
