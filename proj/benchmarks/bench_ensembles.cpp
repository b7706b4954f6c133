#include <benchmark/benchmark.h>

#include "qsig/ensembles.hpp"
#include "qsig/pauli.hpp"

static void BM_SampleGue(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qsig::sample_gue(N, 2, seed++));
}
BENCHMARK(BM_SampleGue)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

static void BM_TridiagonalEigenvalues(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(qsig::sample_gue_eigenvalues(N, seed++));
}
BENCHMARK(BM_TridiagonalEigenvalues)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

static void BM_DevelopTruncated(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto t = qsig::sample_gue(N, 2, 1);
    Eigen::MatrixXd inc(2, 2);
    inc << 0.5, -0.2, 0.1, 0.4;
    const auto p = qsig::Path::from_increments(inc);
    for (auto _ : state) benchmark::DoNotOptimize(qsig::develop_truncated(t, p, 64));
}
BENCHMARK(BM_DevelopTruncated)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_DevelopExact(benchmark::State& state) {
    const int N = static_cast<int>(state.range(0));
    const auto t = qsig::sample_gue(N, 2, 1);
    Eigen::MatrixXd inc(2, 2);
    inc << 0.5, -0.2, 0.1, 0.4;
    const auto p = qsig::Path::from_increments(inc);
    for (auto _ : state) benchmark::DoNotOptimize(qsig::develop_exact(t, p));
}
BENCHMARK(BM_DevelopExact)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMillisecond);

static void BM_SparseWordTrace(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto ops = qsig::sample_pauli_ensemble(20, m, 2, 3);
    const qsig::Word w{1, 2, 1, 2, 2, 1};
    for (auto _ : state) benchmark::DoNotOptimize(qsig::sparse_word_trace(ops, w));
}
BENCHMARK(BM_SparseWordTrace)->RangeMultiplier(2)->Range(4, 32);

BENCHMARK_MAIN();
