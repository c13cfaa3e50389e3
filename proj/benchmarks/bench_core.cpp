#include <qroulette/classical.hpp>
#include <qroulette/quantum.hpp>
#include <qroulette/rng.hpp>

#include <benchmark/benchmark.h>

#include <cstdint>

using namespace qroulette;

static void BM_WalshHadamard(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    auto s = quantum::uniform_state(n_qubits);
    for (auto _ : state) {
        s = quantum::walsh_hadamard(std::move(s));
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n_qubits));
}
BENCHMARK(BM_WalshHadamard)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_GroverIteration(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    auto s = quantum::uniform_state(n_qubits);
    for (auto _ : state) {
        s = quantum::grover_iteration(std::move(s), 0);
        benchmark::DoNotOptimize(s.amplitudes.data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n_qubits));
}
BENCHMARK(BM_GroverIteration)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_AntIteration(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto w = classical::new_uniform_wheel(n, 1.0, 0);
    for (auto _ : state) {
        w = classical::ant_iteration(std::move(w));
        benchmark::DoNotOptimize(w.counts.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AntIteration)->Arg(256)->Arg(4096)->Arg(65536);

static void BM_ReducedStep(benchmark::State& state) {
    classical::ReducedState s{1.0, 1.0, 1u << 20};
    for (auto _ : state) {
        s = classical::reduced_step(s);
        benchmark::DoNotOptimize(s.gamma);
        if (s.beta < 1e-300) s = classical::ReducedState{1.0, 1.0, 1u << 20};
    }
}
BENCHMARK(BM_ReducedStep);

static void BM_WheelSpin(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto w = classical::new_uniform_wheel(n, 1.0, 0);
    SplitMix64 rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical::spin(w, rng));
    }
}
BENCHMARK(BM_WheelSpin)->Arg(256)->Arg(4096)->Arg(65536);

static void BM_Measure(benchmark::State& state) {
    const int n_qubits = static_cast<int>(state.range(0));
    auto s = quantum::uniform_state(n_qubits);
    for (int k = 0; k < 3; ++k) s = quantum::grover_iteration(std::move(s), 0);
    const auto sampler = quantum::measurement_sampler(s);
    SplitMix64 rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.sample(rng));
    }
}
BENCHMARK(BM_Measure)->Arg(8)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
