#include <benchmark/benchmark.h>

#include <cmath>

#include "mexlet/kernel.hpp"

using namespace mexlet;

namespace {
FilterParams params(int j, Summation) {
  return {2.0, j, 1, SeriesVariant::HalfInteger, WeightVariant::SquaredArgument};
}
}  // namespace

// cost of one profile evaluation; compensated (double-double terms) vs plain
static void BM_ProfileCompensated(benchmark::State& state) {
  int j = static_cast<int>(state.range(0));
  ProfileEvaluator eval(params(j, Summation::Compensated), 1e-30, Summation::Compensated);
  double theta = 2.0 * std::pow(2.0, -j);
  for (auto _ : state) benchmark::DoNotOptimize(eval(theta));
  state.SetItemsProcessed(state.iterations() * (eval.l_max() + 1));
}
BENCHMARK(BM_ProfileCompensated)->Arg(2)->Arg(4)->Arg(6);

static void BM_ProfilePlain(benchmark::State& state) {
  int j = static_cast<int>(state.range(0));
  ProfileEvaluator eval(params(j, Summation::Plain), 1e-30, Summation::Plain);
  double theta = 2.0 * std::pow(2.0, -j);
  for (auto _ : state) benchmark::DoNotOptimize(eval(theta));
  state.SetItemsProcessed(state.iterations() * (eval.l_max() + 1));
}
BENCHMARK(BM_ProfilePlain)->Arg(2)->Arg(4)->Arg(6);

static void BM_KappaDirect(benchmark::State& state) {
  double eps = std::pow(2.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_direct(eps, 1, 1.1));
}
BENCHMARK(BM_KappaDirect)->Arg(2)->Arg(4);

static void BM_KappaPsf(benchmark::State& state) {
  double eps = std::pow(2.0, -static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_psf(eps, 1, 1.1, 3));
}
BENCHMARK(BM_KappaPsf)->Arg(2)->Arg(4);

static void BM_TruncationDegree(benchmark::State& state) {
  FilterParams p = params(static_cast<int>(state.range(0)), Summation::Compensated);
  for (auto _ : state) benchmark::DoNotOptimize(truncation_degree(p, 1e-30));
}
BENCHMARK(BM_TruncationDegree)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
