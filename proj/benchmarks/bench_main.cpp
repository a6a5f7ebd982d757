#include <benchmark/benchmark.h>

#include "lzeta/oracle.hpp"
#include "lzeta/zetafun.hpp"

using namespace lzeta;

namespace {

void BM_parse(benchmark::State& state) {
    for (auto _ : state) {
        auto f = parse("(y^-1 + x)^12 + y^7 - 3/4*x^2*y^-5");
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_parse);

void BM_newton_polytope(benchmark::State& state) {
    auto f = parse("(y^-1 + x)^12 + y^7 - 3/4*x^2*y^-5");
    for (auto _ : state) {
        auto P = newton_polytope(f);
        benchmark::DoNotOptimize(P);
    }
}
BENCHMARK(BM_newton_polytope);

void BM_torus_zero_count(benchmark::State& state) {
    long long p = state.range(0);
    FpLaurent g = reduce_mod_p(parse("x^3 + y^2"), p);
    for (auto _ : state) {
        long long n = torus_zero_count(g);
        benchmark::DoNotOptimize(n);
    }
    state.SetItemsProcessed(state.iterations() * (p - 1) * (p - 1));
}
BENCHMARK(BM_torus_zero_count)->Arg(101)->Arg(1009)->Arg(4001);

void BM_assemble(benchmark::State& state) {
    auto g = parse("x^-3 + y^-2 + y^4");
    for (auto _ : state) {
        ZetaFunction Z = assemble(g, 7);
        benchmark::DoNotOptimize(Z);
    }
}
BENCHMARK(BM_assemble);

void BM_unit_torus_integral(benchmark::State& state) {
    auto g = parse("x^-3 + y^-2 + y^4");
    int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IntegralEstimate est = unit_torus_integral(g, 7, 0.2, depth);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_unit_torus_integral)->Arg(2)->Arg(3)->Arg(4);

void BM_truncated_Z0(benchmark::State& state) {
    auto g = parse("x^-3 + y^-2 + y^4");
    int M = static_cast<int>(state.range(0));
    for (auto _ : state) {
        IntegralEstimate est = truncated_Z0(g, 7, 0.2, M, 3);
        benchmark::DoNotOptimize(est);
    }
}
BENCHMARK(BM_truncated_Z0)->Arg(10)->Arg(20)->Arg(40);

void BM_make_simple(benchmark::State& state) {
    ConicalPartition part;
    part.rays = {{1, 0}, {34, 55}};
    part.cones = {Cone{{{1, 0}, {34, 55}}, "", Face{0, {LatticePoint{0, 0}}, {}}}};
    for (auto _ : state) {
        SimpleFan fan = make_simple(part);
        benchmark::DoNotOptimize(fan);
    }
}
BENCHMARK(BM_make_simple);

}  // namespace

BENCHMARK_MAIN();
