#include <benchmark/benchmark.h>

#include <cmath>

#include "radpoin/coefficients.hpp"
#include "radpoin/harness.hpp"
#include "radpoin/hypgeom.hpp"
#include "radpoin/library.hpp"
#include "radpoin/quadrature.hpp"
#include "radpoin/sharpness.hpp"

using namespace radpoin;

static void BM_BallVolume(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double r = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypgeom::ball_volume_G(r, n));
    r = r > 8 ? 0.01 : r * 1.1;
  }
}
BENCHMARK(BM_BallVolume)->Arg(3)->Arg(9);

static void BM_InverseF(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double t = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypgeom::ball_volume_inverse_F(t, n));
    t = t > 1e12 ? 1e-6 : t * 3.1;
  }
}
BENCHMARK(BM_InverseF)->Arg(3)->Arg(9);

static void BM_JetOrder(benchmark::State& state) {
  const auto u = nabla_r_k(library::oscillating_bump(6, 1, 4), 2, 7);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u.taylor(2.3, order));
}
BENCHMARK(BM_JetOrder)->DenseRange(0, 6, 2);

static void BM_WeightedIntegral(benchmark::State& state) {
  const auto u = library::default_library()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(quad::integrate_hn_radial(u, 9, {2.0}));
}
BENCHMARK(BM_WeightedIntegral)->Arg(0)->Arg(7)->Arg(10);

static void BM_XiTable(benchmark::State& state) {
  const int beta = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coeff::xi_table(41, 0, beta));
}
BENCHMARK(BM_XiTable)->Arg(2)->Arg(8);

static void BM_CTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coeff::c_table(41, k, 0));
}
BENCHMARK(BM_CTable)->Arg(4)->Arg(8);

static void BM_VIteration(benchmark::State& state) {
  const sharp::SequenceParams p{1.0, std::exp(10.0), 0.01, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(sharp::VIteration(p, 5));
}
BENCHMARK(BM_VIteration)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Suite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_suite("all", 9));
}
BENCHMARK(BM_Suite)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK_MAIN();
