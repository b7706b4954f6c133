#include <benchmark/benchmark.h>

#include <random>

#include "qsig/kernels.hpp"
#include "qsig/paths.hpp"

namespace {

qsig::Path random_path(int d, int L, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 0.5);
    Eigen::MatrixXd inc(d, L);
    for (int i = 0; i < d; ++i)
        for (int l = 0; l < L; ++l) inc(i, l) = n(rng);
    return qsig::Path::from_increments(inc);
}

}  // namespace

static void BM_TruncatedSignature(benchmark::State& state) {
    const auto p = random_path(3, 16, 1);
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::truncated_signature(p, depth));
}
BENCHMARK(BM_TruncatedSignature)->DenseRange(2, 8, 2);

static void BM_SignatureKernelPde(benchmark::State& state) {
    const auto s = random_path(2, 4, 2), t = random_path(2, 4, 3);
    const double h = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::signature_kernel_pde(s, t, h));
}
BENCHMARK(BM_SignatureKernelPde)->RangeMultiplier(2)->Range(32, 512);

static void BM_SignatureKernelSeries(benchmark::State& state) {
    const auto s = random_path(2, 4, 2), t = random_path(2, 4, 3);
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::signature_kernel_series(s, t, depth));
}
BENCHMARK(BM_SignatureKernelSeries)->DenseRange(4, 12, 4);

BENCHMARK_MAIN();
