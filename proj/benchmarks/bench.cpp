#include <benchmark/benchmark.h>

#include "nimrep/canonical.hpp"
#include "nimrep/cells.hpp"
#include "nimrep/classifier.hpp"
#include "nimrep/knowledge.hpp"

using namespace nimrep;

static void BM_StructureConstants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const KLAlgebra alg(n);
    benchmark::DoNotOptimize(StructureConstantTable(alg));
  }
}
BENCHMARK(BM_StructureConstants)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

static void BM_Cells(benchmark::State& state) {
  const KLAlgebra alg(static_cast<int>(state.range(0)));
  const StructureConstantTable table(alg);
  for (auto _ : state) benchmark::DoNotOptimize(compute_cells(table));
}
BENCHMARK(BM_Cells)->DenseRange(4, 12, 4)->Unit(benchmark::kMicrosecond);

static void BM_CanonicalKey(benchmark::State& state) {
  const std::size_t r = static_cast<std::size_t>(state.range(0));
  IntMatrix s(r, r), t(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      s(i, j) = (3 * i + j) % 4;
      t(i, j) = (i + 2 * j) % 3;
    }
  const MatrixPair pair(4, s, t);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(pair));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_Classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Classifier c(n, KnowledgeTable::load_default());
  ClassifierConfig cfg;
  cfg.entry_bound = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(c.report(cfg));
}
BENCHMARK(BM_Classify)->ArgsProduct({{4, 6}, {4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
