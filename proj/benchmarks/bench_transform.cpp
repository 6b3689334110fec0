#include <benchmark/benchmark.h>

#include <random>

#include "alpert/transform.hpp"

namespace {

alpert::BlockRow random_blocks(int order, int level) {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  alpert::BlockRow out(static_cast<size_t>(1) << level,
                       alpert::Block(static_cast<size_t>(order) + 1));
  for (alpert::Block& b : out)
    for (double& v : b) v = dist(rng);
  return out;
}

void BM_Analyze(benchmark::State& state) {
  int order = 3;
  int level = static_cast<int>(state.range(0));
  alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(order);
  alpert::FilterBank bank = alpert::make_filter_bank(coeff, alpert::solve_wavelet_pair(coeff));
  alpert::BlockRow finest = random_blocks(order, level);
  for (auto _ : state) {
    alpert::SignalTree tree = alpert::make_tree_from_finest(order, level, finest);
    alpert::analyze(tree, bank);
    benchmark::DoNotOptimize(tree);
  }
  state.SetItemsProcessed(state.iterations() * (1 << level) * (order + 1));
}
BENCHMARK(BM_Analyze)->Arg(6)->Arg(10)->Arg(14);

void BM_RoundTrip(benchmark::State& state) {
  int order = 3;
  int level = static_cast<int>(state.range(0));
  alpert::CoeffMatrixPair coeff = alpert::build_refinement_pair(order);
  alpert::FilterBank bank = alpert::make_filter_bank(coeff, alpert::solve_wavelet_pair(coeff));
  alpert::BlockRow finest = random_blocks(order, level);
  for (auto _ : state) {
    alpert::SignalTree tree = alpert::make_tree_from_finest(order, level, finest);
    alpert::analyze(tree, bank);
    alpert::BlockRow rebuilt = alpert::synthesize(tree, bank);
    benchmark::DoNotOptimize(rebuilt);
  }
}
BENCHMARK(BM_RoundTrip)->Arg(6)->Arg(10);

void BM_ProjectPolynomial(benchmark::State& state) {
  alpert::PolyExact f({alpert::Rational(1, 3), alpert::Rational(-2), alpert::Rational(5, 7),
                       alpert::Rational(1)});
  for (auto _ : state) {
    alpert::BlockRow blocks = alpert::project_polynomial(f, 3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(blocks);
  }
}
BENCHMARK(BM_ProjectPolynomial)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
