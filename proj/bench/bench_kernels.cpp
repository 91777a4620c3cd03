// Serial reference vs OpenMP kernels on the three batch workloads.
#include "echarge/generators.hpp"
#include "echarge/parallel.hpp"
#include "echarge/reference.hpp"

#include <benchmark/benchmark.h>
#include <cmath>
#include <numbers>

using namespace echarge;

namespace {

Ensemble two_state_qubit(double overlap_angle) {
    ComplexVector a(2), b(2);
    a << 1.0, 0.0;
    b << std::cos(overlap_angle), std::sin(overlap_angle);
    return Ensemble({1, 2}, {{0.5, validate_state({1, 2}, a)}, {0.5, validate_state({1, 2}, b)}});
}

std::vector<Ensemble> batch(int n) {
    std::vector<Ensemble> out;
    for(int i = 0; i < n; ++i) {
        const double t = (std::numbers::pi / 2) * i / (n - 1);
        out.push_back(rotated_basis(t, uniform_probs(4)));
    }
    return out;
}

void BM_Optimizer_Serial(benchmark::State &state) {
    const auto      e = two_state_qubit(std::numbers::pi / 8);
    OptimizerConfig cfg;
    cfg.restarts = static_cast<int>(state.range(0));
    for(auto _ : state) benchmark::DoNotOptimize(reference::estimate_accessible_info(e, cfg));
}

void BM_Optimizer_OpenMP(benchmark::State &state) {
    const auto      e = two_state_qubit(std::numbers::pi / 8);
    OptimizerConfig cfg;
    cfg.restarts = static_cast<int>(state.range(0));
    for(auto _ : state) benchmark::DoNotOptimize(estimate_accessible_info(e, cfg));
}

void BM_Sweep_Serial(benchmark::State &state) {
    const auto grid  = theta_grid(0.0, std::numbers::pi / 2, static_cast<int>(state.range(0)));
    const auto probs = uniform_probs(4);
    for(auto _ : state) benchmark::DoNotOptimize(reference::sweep_rotated(grid, probs));
}

void BM_Sweep_OpenMP(benchmark::State &state) {
    const auto grid  = theta_grid(0.0, std::numbers::pi / 2, static_cast<int>(state.range(0)));
    const auto probs = uniform_probs(4);
    for(auto _ : state) benchmark::DoNotOptimize(sweep_rotated(grid, probs));
}

void BM_AnalyzeBatch_Serial(benchmark::State &state) {
    const auto ensembles = batch(static_cast<int>(state.range(0)));
    for(auto _ : state) benchmark::DoNotOptimize(reference::analyze_batch(ensembles));
}

void BM_AnalyzeBatch_OpenMP(benchmark::State &state) {
    const auto ensembles = batch(static_cast<int>(state.range(0)));
    for(auto _ : state) benchmark::DoNotOptimize(analyze_batch(ensembles));
}

} // namespace

BENCHMARK(BM_Optimizer_Serial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Optimizer_OpenMP)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep_Serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep_OpenMP)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeBatch_Serial)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeBatch_OpenMP)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
