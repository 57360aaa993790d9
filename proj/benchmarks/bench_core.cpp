#include <benchmark/benchmark.h>

#include "cavitybec/damping.hpp"
#include "cavitybec/spectrum.hpp"

using namespace cavitybec;

static void BM_PhononDiagonalize(benchmark::State& state) {
  const ModelParams p;
  const QuadraticForm f = build_phonon_matrix(0.31, p);
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_diagonalize(f));
}
BENCHMARK(BM_PhononDiagonalize);

static void BM_PolaritonDiagonalize(benchmark::State& state) {
  ModelParams p;
  p.eta = 0.8 * critical_coupling(p);
  const QuadraticForm f = build_polariton_matrix(p);
  for (auto _ : state) benchmark::DoNotOptimize(symplectic_diagonalize(f));
}
BENCHMARK(BM_PolaritonDiagonalize);

static void BM_BandStructure(benchmark::State& state) {
  ModelParams p;
  p.zone_points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(band_structure(p));
}
BENCHMARK(BM_BandStructure)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_DampingModelSetup(benchmark::State& state) {
  const ModelParams p;
  for (auto _ : state) benchmark::DoNotOptimize(DampingModel(p));
}
BENCHMARK(BM_DampingModelSetup)->Unit(benchmark::kMillisecond);

static void BM_SweepPoint(benchmark::State& state) {
  const ModelParams p;
  const DampingModel model(p);
  const double eta = 0.8 * critical_coupling(p);
  for (auto _ : state) benchmark::DoNotOptimize(model.evaluate(eta));
}
BENCHMARK(BM_SweepPoint)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
