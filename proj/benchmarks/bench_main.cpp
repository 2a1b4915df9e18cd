#include <benchmark/benchmark.h>

#include "spinitc/asymptotics.hpp"
#include "spinitc/geometry.hpp"
#include "spinitc/itc.hpp"
#include "spinitc/spectral.hpp"

namespace {

using namespace spinitc;

void BM_AnalyticSpectrum(benchmark::State& state) {
  const ChainSpec spec{static_cast<int>(state.range(0)), 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_spectrum(spec));
  }
}
BENCHMARK(BM_AnalyticSpectrum)->Arg(51)->Arg(201)->Arg(1001);

void BM_NumericSpectrum(benchmark::State& state) {
  const Hamiltonian1 h = build_hamiltonian({static_cast<int>(state.range(0)), 100.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(numeric_spectrum(h));
  }
}
BENCHMARK(BM_NumericSpectrum)->Arg(51)->Arg(201)->Arg(501);

void BM_ItcMatrix(benchmark::State& state) {
  const ChainSpec spec{static_cast<int>(state.range(0)), 0.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(itc_matrix(spec));
  }
}
BENCHMARK(BM_ItcMatrix)->Arg(51)->Arg(201);

void BM_PtMatrix(benchmark::State& state) {
  const ChainSpec spec{static_cast<int>(state.range(0)), 0.0};
  const SpectralDecomposition dec = analytic_spectrum(spec);
  double t = 0.0;
  for (auto _ : state) {
    t += 0.05;
    benchmark::DoNotOptimize(p_t_matrix(dec, t));
  }
}
BENCHMARK(BM_PtMatrix)->Arg(31)->Arg(101);

void BM_SemiInfiniteSeries(benchmark::State& state) {
  const ReducedPair pair = reduce_pair(3, 7, Frame::kSemiInfinite);
  for (auto _ : state) {
    benchmark::DoNotOptimize(semi_infinite_pmax_series(pair, 1e-10));
  }
}
BENCHMARK(BM_SemiInfiniteSeries);

void BM_FourPointDelta(benchmark::State& state) {
  const ITCMatrix m = itc_matrix({static_cast<int>(state.range(0)), 0.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(four_point_delta(m.distance));
  }
}
BENCHMARK(BM_FourPointDelta)->Arg(21)->Arg(41);

}  // namespace

BENCHMARK_MAIN();
