// Microbenchmarks for the hot paths: exact verification, construction,
// completion, canonicalization, and the two integral search engines on a
// small box. Run manually: build/benchmarks/twist_bench

#include <benchmark/benchmark.h>

#include "twist/construction.hpp"
#include "twist/identity.hpp"
#include "twist/rational.hpp"
#include "twist/search.hpp"

namespace {

using twist::Rational;
using twist::SolutionTuple;
using twist::make_rational;

const SolutionTuple kLead{make_rational(8), make_rational(3), make_rational(5),
                          make_rational(15), make_rational(21)};
const SolutionTuple kFractional{make_rational(16, 9), make_rational(1),
                                make_rational(7), make_rational(11),
                                make_rational(19)};

void BM_VerifyExact(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(twist::verify_exact(kLead));
}
BENCHMARK(BM_VerifyExact);

void BM_VerifyExactFractional(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::verify_exact(kFractional));
}
BENCHMARK(BM_VerifyExactFractional);

void BM_Construct(benchmark::State& state) {
    const twist::SeedParams seed(make_rational(3), make_rational(4),
                                 make_rational(1), make_rational(3));
    for (auto _ : state) benchmark::DoNotOptimize(twist::construct(seed));
}
BENCHMARK(BM_Construct);

void BM_RecoverM(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(twist::recover_m(kLead));
}
BENCHMARK(BM_RecoverM);

void BM_SolveForY(benchmark::State& state) {
    const Rational t = make_rational(3), h = make_rational(2),
                   z = make_rational(58), x = make_rational(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::solve_for_y(t, h, z, x));
}
BENCHMARK(BM_SolveForY);

void BM_Canonicalize(benchmark::State& state) {
    const SolutionTuple scrambled{make_rational(8), make_rational(3, 2),
                                  make_rational(21, 2), make_rational(5, 2),
                                  make_rational(15, 2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::canonicalize(scrambled));
}
BENCHMARK(BM_Canonicalize);

void BM_SearchFastBox(benchmark::State& state) {
    twist::IntegralBounds b;
    b.t_min = 3;
    b.t_max = 3;
    b.h_max = 2;
    b.v_max = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::search_integral_fast(b));
}
BENCHMARK(BM_SearchFastBox)->Arg(30)->Arg(60);

void BM_SearchNaiveBox(benchmark::State& state) {
    twist::IntegralBounds b;
    b.t_min = 3;
    b.t_max = 3;
    b.h_max = 2;
    b.v_max = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::search_integral_naive(b));
}
BENCHMARK(BM_SearchNaiveBox)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_SearchParametricGrid(benchmark::State& state) {
    twist::SeedGrid g;
    g.h_values = {make_rational(1), make_rational(2), make_rational(3)};
    g.t_min = 1;
    g.t_max = 10;
    g.z_offset_min = 1;
    g.z_offset_max = 3;
    g.m_numerator_max = 5;
    g.m_denominator_max = 3;
    for (auto _ : state)
        benchmark::DoNotOptimize(twist::search_parametric(g));
}
BENCHMARK(BM_SearchParametricGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
