#include "antialg/axioms.hpp"
#include "antialg/catalog.hpp"
#include "antialg/cohomology.hpp"
#include "antialg/geometry.hpp"
#include "antialg/matrix.hpp"
#include "antialg/representations.hpp"
#include "antialg/superization.hpp"

#include <benchmark/benchmark.h>

using namespace antialg;

static void BM_AxiomsAK1(benchmark::State& st)
{
    const AlgebraTable a = build_AK1(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(check_axioms(a).evaluations);
}
BENCHMARK(BM_AxiomsAK1)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RankRandom(benchmark::State& st)
{
    const std::size_t n = static_cast<std::size_t>(st.range(0));
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, Rational(static_cast<long>((i * 7 + j * 13) % 11) - 5, static_cast<long>(j % 3) + 1));
    for (auto _ : st)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRandom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

static void BM_Superize(benchmark::State& st)
{
    const AlgebraTable a = build_asl2();
    for (auto _ : st)
        benchmark::DoNotOptimize(superize(a).algebra.dim_even());
}
BENCHMARK(BM_Superize)->Unit(benchmark::kMicrosecond);

static void BM_CheckFRep(benchmark::State& st)
{
    const MatrixRep r = build_FRep(st.range(0), st.range(0) + 3);
    for (auto _ : st)
        benchmark::DoNotOptimize(check_rep(r).evaluations);
}
BENCHMARK(BM_CheckFRep)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_DeltaMatrix(benchmark::State& st)
{
    const AntiModule m = adjoint_module(build_asl2());
    const int k = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(delta_matrix(m, k).rows());
}
BENCHMARK(BM_DeltaMatrix)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_InvariantBivectors(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(invariant_bivector_space(st.range(0)).size());
}
BENCHMARK(BM_InvariantBivectors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Gamma(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(verify_gamma(st.range(0)).unknowns);
}
BENCHMARK(BM_Gamma)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
