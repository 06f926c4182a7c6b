#include <benchmark/benchmark.h>

#include "models.hpp"
#include "qkwall/central_charge.hpp"
#include "qkwall/integrals.hpp"

using namespace qkwall;
using namespace qkwall::testmodels;

static const QContext ctx(cplx(0.1), 60);

static void BM_theta(benchmark::State& state) {
    const cplx x(0.7, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(theta(x, ctx));
}
BENCHMARK(BM_theta);

static void BM_log_gamma_q(benchmark::State& state) {
    const GLSMData m = quintic();
    const cplx s(0.8, 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(log_gamma_q(m, s, ctx));
}
BENCHMARK(BM_log_gamma_q);

static void BM_hk_coefficient(benchmark::State& state) {
    const GLSMData m = n3r2();
    const LevelStructure R = v_plus_dual(m);
    const cplx s(1.1, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hk_coefficient(m, Rat(3), R, s, ctx));
}
BENCHMARK(BM_hk_coefficient);

static void BM_residue_tower(benchmark::State& state) {
    const GLSMData m = n3r2();
    const BraneExpr B = geometric_basis_brane(m, 0);
    const cplx z = 0.05 * std::exp(cplx(0.0, 0.4));
    for (auto _ : state)
        benchmark::DoNotOptimize(residue_sum(m, B, +1, Rat(2), z, ctx).total);
}
BENCHMARK(BM_residue_tower);

static void BM_pairing_series(benchmark::State& state) {
    const GLSMData m = n3r2();
    const BraneExpr B = geometric_basis_brane(m, 1);
    const LevelStructure R = v_plus_dual(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(pairing_central_charge_series(m, B, R, Rat(4), ctx));
}
BENCHMARK(BM_pairing_series);

BENCHMARK_MAIN();
