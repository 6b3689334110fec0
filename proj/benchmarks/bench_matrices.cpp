#include <benchmark/benchmark.h>

#include "alpert/recurrences.hpp"
#include "alpert/refinement.hpp"
#include "alpert/waveletsolve.hpp"

namespace {

void BM_BuildHalfArgument(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    alpert::CoeffMatrixPair pair = alpert::build_refinement_pair(n);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_BuildHalfArgument)->Arg(4)->Arg(8)->Arg(12);

void BM_BuildOracle(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    alpert::CoeffMatrixPair pair = alpert::build_refinement_pair(n, alpert::BuildPath::Oracle);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_BuildOracle)->Arg(4)->Arg(8)->Arg(12);

void BM_RegenerateViaRecurrence(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    alpert::CoeffMatrixPair pair = alpert::regenerate_via_recurrence(n);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_RegenerateViaRecurrence)->Arg(8)->Arg(12);

void BM_WaveletSolve(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(n);
  for (auto _ : state) {
    alpert::WaveletMatrixPair pair = alpert::solve_wavelet_pair(coeff);
    benchmark::DoNotOptimize(pair);
  }
}
BENCHMARK(BM_WaveletSolve)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
