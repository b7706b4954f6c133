#include <benchmark/benchmark.h>

#include "qsig/qsim.hpp"

static void BM_PauliRotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    qsig::Statevector psi(n);
    qsig::PauliString s(n);
    for (int q = 0; q < n; ++q) s.set_letter(q, static_cast<qsig::Letter>(1 + q % 3));
    for (auto _ : state) {
        qsig::apply_pauli_rotation(psi, s, 0.01);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PauliRotation)->DenseRange(8, 20, 4);

static void BM_CircuitTrace(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ops = qsig::sample_pauli_ensemble(n, n, 1, 5);
    Eigen::MatrixXd inc(1, 1);
    inc << 1.0;
    const auto c = qsig::build_trotter_circuit(qsig::Path::from_increments(inc), ops, 8);
    for (auto _ : state) benchmark::DoNotOptimize(qsig::circuit_trace_exact(c));
}
BENCHMARK(BM_CircuitTrace)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_QsigKerShots(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Eigen::MatrixXd inc(1, 1);
    inc << 1.0;
    const auto p = qsig::Path::from_increments(inc);
    const qsig::QuantumParams params{n, n, 32, 100};
    for (auto _ : state) benchmark::DoNotOptimize(qsig::qsigker_run(p, params, 7));
    state.SetItemsProcessed(state.iterations() * params.M);
}
BENCHMARK(BM_QsigKerShots)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
