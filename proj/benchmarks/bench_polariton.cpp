#include "polariton/bogoliubov.hpp"
#include "polariton/entanglement.hpp"
#include "polariton/gaussian.hpp"
#include "polariton/hopfield.hpp"
#include "polariton/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace polariton;

namespace {

constexpr double w0 = 169.1;

SystemParams params_at(double g_ratio) {
    return {w0, w0, PhononCoupling{g_ratio * w0}, std::nullopt};
}

void bm_spectrum(benchmark::State& state) {
    const SystemParams p = params_at(0.5);
    for (auto _ : state) benchmark::DoNotOptimize(polariton_spectrum(p));
}
BENCHMARK(bm_spectrum);

void bm_full_report(benchmark::State& state) {
    const SystemParams p = params_at(0.5);
    for (auto _ : state) {
        const PolaritonSpectrum s = polariton_spectrum(p);
        const GroundStateGaussian gs = ground_state(p, s);
        benchmark::DoNotOptimize(entanglement_report(gs, covariance_from_ground_state(gs)));
    }
}
BENCHMARK(bm_full_report);

void bm_build_hamiltonian(benchmark::State& state) {
    const SystemParams p = params_at(0.5);
    const FockTruncation t{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(build_hamiltonian(p, t));
}
BENCHMARK(bm_build_hamiltonian)->Arg(10)->Arg(20)->Arg(30);

void bm_ground_state_numeric(benchmark::State& state) {
    const SystemParams p = params_at(0.5);
    const FockTruncation t{static_cast<int>(state.range(0))};
    const DenseMatrix h = build_hamiltonian(p, t);
    for (auto _ : state) benchmark::DoNotOptimize(ground_state_numeric(h, t));
}
BENCHMARK(bm_ground_state_numeric)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void bm_log_negativity_numeric(benchmark::State& state) {
    const SystemParams p = params_at(0.5);
    const FockTruncation t{static_cast<int>(state.range(0))};
    const NumericalGroundState gs = ground_state_numeric(build_hamiltonian(p, t), t);
    for (auto _ : state) benchmark::DoNotOptimize(log_negativity_numeric(gs));
}
BENCHMARK(bm_log_negativity_numeric)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
