#include <benchmark/benchmark.h>

#include "qsig/nclaw.hpp"

static void BM_SchwingerDysonQuartic(benchmark::State& state) {
    const qsig::Potential V{1, {{qsig::Word{1, 1, 1, 1}, 0.01}}};
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::solve_schwinger_dyson(V, degree));
}
BENCHMARK(BM_SchwingerDysonQuartic)->DenseRange(8, 20, 4)->Unit(benchmark::kMicrosecond);

static void BM_SemicircularTwoLetters(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::solve_schwinger_dyson(qsig::Potential::quadratic(2), degree));
}
BENCHMARK(BM_SemicircularTwoLetters)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_LimitingDevelopment(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    const auto law = qsig::semicircular_law(2, depth);
    Eigen::MatrixXd inc(2, 3);
    inc << 0.5, -0.2, 0.3, 0.1, 0.4, -0.3;
    const auto p = qsig::Path::from_increments(inc);
    for (auto _ : state) benchmark::DoNotOptimize(qsig::limiting_development(law, p, depth));
}
BENCHMARK(BM_LimitingDevelopment)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_GueIntegralEquation(benchmark::State& state) {
    Eigen::MatrixXd inc(2, 3);
    inc << 0.5, -0.2, 0.3, 0.1, 0.4, -0.3;
    const auto p = qsig::Path::from_increments(inc);
    const double h = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qsig::gue_integral_equation_solve(p, h).terminal());
}
BENCHMARK(BM_GueIntegralEquation)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
