// Serial reference versus OpenMP for the two parallel kernels: the corpus
// runner and the bound grid. Run with OMP_NUM_THREADS set to compare.

#include <benchmark/benchmark.h>

#include "conebound/analysis.hpp"
#include "conebound/bounds.hpp"

using namespace conebound;

namespace {

std::vector<InstanceSpec> bench_corpus() {
  auto corpus = monomial_corpus(0, 100);
  auto binomials = binomial_corpus(0, 50);
  corpus.insert(corpus.end(), binomials.begin(), binomials.end());
  return corpus;
}

void BM_Corpus(benchmark::State& state, Execution mode) {
  const auto corpus = bench_corpus();
  for (auto _ : state) {
    auto summary = corpus_run(corpus, mode);
    benchmark::DoNotOptimize(summary.verdicts);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(corpus.size()));
}

void BM_BoundGrid(benchmark::State& state, Execution mode) {
  GridSpec spec;
  spec.max_d = 5;
  spec.max_e = static_cast<long>(state.range(0));
  spec.max_I = 6;
  spec.max_i = 4;
  spec.max_n = 40;
  for (auto _ : state) {
    auto rows = bound_grid(spec, mode);
    benchmark::DoNotOptimize(rows.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Corpus, serial, Execution::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Corpus, openmp, Execution::Parallel)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BoundGrid, serial, Execution::Serial)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_BoundGrid, openmp, Execution::Parallel)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
