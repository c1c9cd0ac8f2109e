#include <benchmark/benchmark.h>

#include <cmath>

#include "mexlet/cubature.hpp"
#include "mexlet/needlet_field.hpp"
#include "mexlet/pixelization.hpp"
#include "mexlet/summation.hpp"

using namespace mexlet;

static void BM_BuildPartition(benchmark::State& state) {
  int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Pixelization pix = build_partition(2.0, j);
    benchmark::DoNotOptimize(pix.cells.data());
  }
}
BENCHMARK(BM_BuildPartition)->Arg(3)->Arg(6)->Arg(9);

static void BM_Locate(benchmark::State& state) {
  Pixelization pix = build_partition(2.0, static_cast<int>(state.range(0)));
  UnitVector v = UnitVector::normalized(0.3, -0.4, 0.87);
  for (auto _ : state) benchmark::DoNotOptimize(pix.locate(v));
}
BENCHMARK(BM_Locate)->Arg(4)->Arg(8);

static void BM_GaussLegendre(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    GaussLegendreRule gl = gauss_legendre(n);
    benchmark::DoNotOptimize(gl.nodes.data());
  }
}
BENCHMARK(BM_GaussLegendre)->Arg(64)->Arg(512);

static void BM_AnalyzeExact(benchmark::State& state) {
  FilterParams p{2.0, static_cast<int>(state.range(0)), 1, SeriesVariant::Integer,
                 WeightVariant::SquaredArgument};
  Pixelization pix = build_partition(2.0, p.j);
  ZonalMixture F{{{4, UnitVector::normalized(0.3, -0.2, 0.93), 1.0},
                  {9, UnitVector::normalized(-0.55, 0.8, 0.1), 0.8}}};
  for (auto _ : state) {
    NeedletCoefficients beta = analyze_exact(F, p, pix);
    benchmark::DoNotOptimize(beta.values.data());
  }
  state.SetItemsProcessed(state.iterations() * pix.size());
}
BENCHMARK(BM_AnalyzeExact)->Arg(3)->Arg(5);

// compensated accumulation over a sign-alternating series
static void BM_NeumaierSum(benchmark::State& state) {
  std::vector<double> xs(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = (i % 2 ? -1.0 : 1.0) * std::sqrt(static_cast<double>(i + 1));
  for (auto _ : state) {
    NeumaierSum acc;
    for (double x : xs) acc.add(x);
    benchmark::DoNotOptimize(acc.value());
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_NeumaierSum)->Arg(1024)->Arg(65536);
