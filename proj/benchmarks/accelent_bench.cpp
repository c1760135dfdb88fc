#include <complex>
#include <random>

#include <benchmark/benchmark.h>

#include "accelent/accelent.hpp"

using namespace accelent;

static void BM_ComplexGamma(benchmark::State& state) {
    double mu2 = 0.05;
    for (auto _ : state) {
        benchmark::DoNotOptimize(complex_gamma({0.5, mu2}));
        mu2 = mu2 < 5.0 ? mu2 + 0.01 : 0.05;
    }
}
BENCHMARK(BM_ComplexGamma);

static void BM_HermitianEigenvalues(benchmark::State& state) {
    const auto n = static_cast<Eigen::Index>(state.range(0));
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = {g(rng), g(rng)};
    const auto sparse = SparseMatrix::from_dense(0.5 * (a + a.adjoint()));
    for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(sparse));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(16)->Arg(64)->Arg(256);

static void BM_FermionSweep(benchmark::State& state) {
    SweepConfig cfg;
    cfg.scenario = state.range(0) ? ScenarioKind::FermionBoth : ScenarioKind::FermionOne;
    cfg.max = 1.5707963267948966;
    cfg.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(BM_FermionSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_ScalarPoint(benchmark::State& state) {
    SweepConfig cfg;
    cfg.scenario = state.range(0) ? ScenarioKind::ScalarBoth : ScenarioKind::ScalarOne;
    for (auto _ : state) benchmark::DoNotOptimize(evaluate_point(cfg, 0.8));
}
BENCHMARK(BM_ScalarPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
