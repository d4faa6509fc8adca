#include <benchmark/benchmark.h>

#include "boxbound/eigensolve.hpp"
#include "boxbound/jackson.hpp"
#include "boxbound/moments.hpp"
#include "boxbound/testfns.hpp"

using namespace boxbound;

static void BM_JacksonCoefficients(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(jackson_coefficients(r));
    }
}
BENCHMARK(BM_JacksonCoefficients)->Arg(16)->Arg(64)->Arg(256);

static void BM_AssemblePencil(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const ChebPoly& f = lookup("motzkin", 2).cheb;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_pencil(f, 0, r));
    }
}
BENCHMARK(BM_AssemblePencil)->Arg(12)->Arg(24)->Arg(48);

static void BM_SchmudgenBound(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const ChebPoly& f = lookup("motzkin", 2).cheb;
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmudgen_bound(f, r, /*extract_density=*/false).value);
    }
}
BENCHMARK(BM_SchmudgenBound)->Arg(12)->Arg(24)->Arg(48);

static void BM_SosLebesgueBound(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const ChebPoly& f = lookup("booth", 2).cheb;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sos_lebesgue_bound(f, r, false).value);
    }
}
BENCHMARK(BM_SosLebesgueBound)->Arg(12)->Arg(24)->Arg(40);

static void BM_DensityExtraction(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const ChebPoly& f = lookup("motzkin", 2).cheb;
    for (auto _ : state) {
        benchmark::DoNotOptimize(schmudgen_bound(f, r).density.term_count());
    }
}
BENCHMARK(BM_DensityExtraction)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
