#include <benchmark/benchmark.h>

#include <cmath>

#include "qrma/qrma.hpp"

namespace {

void BM_SolveBlock(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qrma::TridiagonalBlock block = qrma::build_parity_block({1.0, 1.0, 0.8}, qrma::Parity::even(), n);
    for (auto _ : state) benchmark::DoNotOptimize(qrma::solve_block(block, 0));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveBlock)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

void BM_GroundStateAuto(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(qrma::ground_state({1.0, 1.0, 0.6}));
}
BENCHMARK(BM_GroundStateAuto);

void BM_SqueezeMatrix(benchmark::State& state) {
    const qrma::SqueezeSpec spec{std::sqrt(2.0), static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(qrma::squeeze_matrix(spec));
}
BENCHMARK(BM_SqueezeMatrix)->Arg(64)->Arg(128)->Arg(256);

void BM_EvolveInversion(benchmark::State& state) {
    const qrma::Projection proj = qrma::project_initial({1.0, 1.0, 0.2}, qrma::InitialCondition{5.0});
    const qrma::TimeGrid grid{100.0, static_cast<std::size_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(qrma::evolve_inversion(proj, grid));
}
BENCHMARK(BM_EvolveInversion)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_FourierSpectrum(benchmark::State& state) {
    const qrma::TimeSeries ts =
        qrma::rwa_time_series({1.0, 0.0, 0.02}, qrma::InitialCondition{5.0}, qrma::TimeGrid{100.0, 4096});
    for (auto _ : state) benchmark::DoNotOptimize(qrma::fourier_spectrum(ts));
}
BENCHMARK(BM_FourierSpectrum);

}  // namespace

BENCHMARK_MAIN();
