// Parallel kernels against their serial references.

#include <pgq/bounds.hpp>
#include <pgq/graph.hpp>
#include <pgq/incidence.hpp>
#include <pgq/scan.hpp>

#include <benchmark/benchmark.h>

using namespace pgq;

static void BM_scan_serial(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_serial({2, state.range(0)}));
}
BENCHMARK(BM_scan_serial)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_scan_parallel(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(scan({2, state.range(0)}));
}
BENCHMARK(BM_scan_parallel)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_sweep_serial(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_four_term_bound_serial(state.range(0)));
}
BENCHMARK(BM_sweep_serial)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_sweep_parallel(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(optimal_four_term_bound(state.range(0)));
}
BENCHMARK(BM_sweep_parallel)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_claw_serial(benchmark::State & state)
{
    auto g = gen_symplectic_w3();
    for (auto _ : state)
        benchmark::DoNotOptimize(claw_numbers_serial(g));
}
BENCHMARK(BM_claw_serial)->Unit(benchmark::kMillisecond);

static void BM_claw_parallel(benchmark::State & state)
{
    auto g = gen_symplectic_w3();
    for (auto _ : state)
        benchmark::DoNotOptimize(claw_numbers(g));
}
BENCHMARK(BM_claw_parallel)->Unit(benchmark::kMillisecond);

static void BM_verify_srg_serial(benchmark::State & state)
{
    auto g = gen_rook(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_srg_serial(g));
}
BENCHMARK(BM_verify_srg_serial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_verify_srg_parallel(benchmark::State & state)
{
    auto g = gen_rook(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_srg(g));
}
BENCHMARK(BM_verify_srg_parallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
