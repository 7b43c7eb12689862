// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/interval.hpp"
#include "robin/spectral.hpp"
#include "robin/specfun.hpp"
#include "robin/transform.hpp"

#include <benchmark/benchmark.h>

using namespace robin;

static void BM_EigRoots(benchmark::State& st)
{
    const int k = static_cast<int>(st.range(0));
    for (auto _ : st)
        benchmark::DoNotOptimize(eig_roots(1.0, RobinParam{1.0}, k));
    st.SetItemsProcessed(st.iterations() * k);
}
BENCHMARK(BM_EigRoots)->Arg(4)->Arg(100)->Arg(1000);

static void BM_DensityDouble(benchmark::State& st)
{
    const DensityVariant v{DensityTag::rho_per, 1.0, 1.0, static_cast<int>(st.range(0))};
    double w = 3.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(density_eval(v, w, Precision::double_only));
        w += 1e-9;
    }
}
BENCHMARK(BM_DensityDouble)->Arg(6)->Arg(20)->Arg(40);

static void BM_DensityExtended(benchmark::State& st)
{
    const DensityVariant v{DensityTag::rho_per, 1.0, 1.0, static_cast<int>(st.range(0))};
    double w = 0.1;
    for (auto _ : st) {
        benchmark::DoNotOptimize(density_eval(v, w, Precision::extended));
        w += 1e-9;
    }
}
BENCHMARK(BM_DensityExtended)->Arg(6)->Arg(20)->Arg(40);

static void BM_PoisTotal(benchmark::State& st)
{
    const DensityVariant v{DensityTag::pois_total, 1.0, 1.0, 20};
    double w = 1.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(density_eval(v, w));
        w += 1e-6;
    }
}
BENCHMARK(BM_PoisTotal);

static void BM_WaveKernelInterval(benchmark::State& st)
{
    const double t = static_cast<double>(st.range(0));
    const int n = required_nmax(t, 1.0);
    for (auto _ : st)
        benchmark::DoNotOptimize(wave_kernel_interval(t, 0.3, 0.6, 1.0, RobinParam{1.0}, n));
}
BENCHMARK(BM_WaveKernelInterval)->Arg(1)->Arg(7)->Arg(30);

static void BM_WaveTraceInterval(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(wave_trace_interval(7.3, 1.0, RobinParam{1.0}, 5));
}
BENCHMARK(BM_WaveTraceInterval);

static void BM_HeatTrace(benchmark::State& st)
{
    double t = 0.1;
    for (auto _ : st) {
        benchmark::DoNotOptimize(heat_trace_boundary(t, RobinParam{1.0}, 1));
        t += 1e-9;
    }
}
BENCHMARK(BM_HeatTrace);

static void BM_HeatKernel(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(heat_kernel_halfline(0.3, 0.7, 1.1, RobinParam{1.0}));
}
BENCHMARK(BM_HeatKernel);

static void BM_SchrodingerClosed(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(schrodinger_boundary_closed(0.5, 0.4, 0.9, RobinParam{1.0}));
}
BENCHMARK(BM_SchrodingerClosed);

static void BM_Erfcx(benchmark::State& st)
{
    double x = 0.5;
    for (auto _ : st) {
        benchmark::DoNotOptimize(erfcx(x));
        x += 1e-7;
    }
}
BENCHMARK(BM_Erfcx);

static void BM_ErfcxComplex(benchmark::State& st)
{
    ComplexValue z(1.5, -2.0);
    for (auto _ : st) {
        benchmark::DoNotOptimize(erfc_scaled_complex(z));
        z += 1e-7;
    }
}
BENCHMARK(BM_ErfcxComplex);

BENCHMARK_MAIN();
