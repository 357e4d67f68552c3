#include <benchmark/benchmark.h>

#include "cmsdef/diagram.hpp"
#include "cmsdef/quasi.hpp"
#include "cmsdef/spectral.hpp"

using namespace cmsdef;

static void bm_ratk_mul(benchmark::State& state) {
    RatK a(KPoly::parse("3*k^4-k^2+7"), KPoly::parse("k^3+2"));
    RatK b(KPoly::parse("k^5+k+1"), KPoly::parse("2*k^2-3"));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_ratk_mul);

static void bm_integral_apply(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    LaurentPoly f = deformed_power_sum(1, 2, 1) * deformed_power_sum(-1, 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(integral_apply(r, f));
}
BENCHMARK(bm_integral_apply)->Arg(1)->Arg(2)->Arg(3);

static void bm_bernoulli_routes(benchmark::State& state) {
    Weight w(2, 2, {3, 1, -1, -2});
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(b_gen_eval(r, w));
        benchmark::DoNotOptimize(b_gen_geo(r, w));
    }
}
BENCHMARK(bm_bernoulli_routes)->Arg(2)->Arg(6);

static void bm_eq_class(benchmark::State& state) {
    Weight w(2, 2, {1, 0, 0, -1});
    for (auto _ : state) benchmark::DoNotOptimize(eq_class(w));
}
BENCHMARK(bm_eq_class);

static void bm_quasi_space(benchmark::State& state) {
    auto sup = standard_support(Weight(2, 1, {0, 0, 0}));
    for (auto _ : state) benchmark::DoNotOptimize(quasi_space(sup, 2, 1));
}
BENCHMARK(bm_quasi_space);

static void bm_gen_eigenspace_11(benchmark::State& state) {
    Weight w(1, 1, {0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(gen_eigenspace(w));
}
BENCHMARK(bm_gen_eigenspace_11);

BENCHMARK_MAIN();
