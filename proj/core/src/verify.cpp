// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

// Verification suites, one per acceptance criterion. Each compares module
// operations against an independent route and times itself.

#include "robin/harness.hpp"

#include "robin/interval.hpp"
#include "robin/oracles.hpp"
#include "robin/spectral.hpp"
#include "robin/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace robin {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void c1(VerifyReport& r)
{
    const auto t0 = Clock::now();
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 4);
    const double secs = since(t0);
    const double ref[] = {2.0288, 4.9132, 7.9787, 11.0855};
    for (int k = 0; k < 4; ++k) {
        r.near("omega_" + std::to_string(k + 1), ref[k], s.omegas[k], 5e-5);
        r.below("residual_" + std::to_string(k + 1), std::abs(s.residuals[k]), 1e-12);
    }
    r.below("runtime_s", secs, 1.0);
}

void c2(VerifyReport& r)
{
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 50);
    r.below("n=4", std::abs(eig_perturbative(4) - s.omegas[3]), 2e-4);
    double worst = 0.0;
    for (int n = 10; n <= 50; ++n)
        worst = std::max(worst, std::abs(eig_perturbative(n) - s.omegas[n - 1]));
    r.below("max n in [10,50]", worst, 1e-6);
}

void c3(VerifyReport& r)
{
    const auto t0 = Clock::now();
    for (double t : {0.1, 1.0, 10.0}) {
        const double closed = heat_trace_boundary(t, RobinParam{1.0}, 1);
        const double quad = heat_trace_quadrature(t, RobinParam{1.0});
        r.below("rel err t=" + format_number(t), std::abs(closed - quad) / std::abs(quad), 1e-8);
    }
    const double t = 0.01;  // kappa^2 t = 0.01
    r.below("series order 10", std::abs(heat_trace_series(t, RobinParam{1.0}, 10) -
                                        heat_trace_boundary(t, RobinParam{1.0}, 1)),
            1e-12);
    r.below("runtime_s", since(t0), 10.0);
}

void c4(VerifyReport& r)
{
    std::mt19937 gen(20260401u);
    std::uniform_int_distribution<int> num(1, 400), den(1, 37);
    int exact = 0;
    for (int i = 0; i < 20; ++i) {
        const Rational t(num(gen), den(gen));
        const Rational kappa(num(gen), den(gen));
        const ExpLinear e = halfline_tail_trace_exact(t, kappa);
        if (e.constant == Rational(-1, 2) && e.exp_coeff == Rational(1, 2))
            ++exact;
    }
    r.near("exact matches of 1/2(e^{-kt} - 1)", 20.0, exact, 0.0);
}

void c5(VerifyReport& r)
{
    const auto t0 = Clock::now();
    int same = 0, total = 0;
    for (double y : {0.3, 0.5, 0.77}) {
        const PulseTrain a = build_kernel_by_reflection(7.0, 1.0, RobinParam{1.0}, y);
        const PulseTrain b = kernel_pulses_closed_form(7.0, 1.0, RobinParam{1.0}, y);
        ++total;
        if (same_pulse_multiset(a, b, 1e-12))
            ++same;
    }
    r.near("identical multisets", total, same, 0.0);
    r.below("runtime_s", since(t0), 5.0);
}

void c6(VerifyReport& r)
{
    std::vector<double> grid(200);
    for (int i = 0; i < 200; ++i)
        grid[i] = 0.1 + (20.0 - 0.1) * i / 199.0;
    double bdry = 0.0, bou = 0.0, per = 0.0, naive = 0.0;
    for (int n = 1; n <= 12; ++n) {
        const auto res = termwise_identity_check(n, grid);
        per = std::max(per, res[0].max_abs_diff);
        bdry = std::max(bdry, res[1].max_abs_diff);
        bou = std::max(bou, res[2].max_abs_diff);
        naive = std::max(naive, res[3].max_abs_diff);
    }
    r.below("pois_bdry vs rho_bdry", bdry, 1e-10);
    r.below("pois_bou vs bou_posttrace", bou, 1e-10);
    r.below("pois_per vs rho_N+rho_per", per, 1e-10);
    r.above("bou_naive vs bou_pretrace differ", naive, 1e-2);
}

void c7(VerifyReport& r)
{
    const auto t0 = Clock::now();
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 4);
    const DensityVariant total{DensityTag::pois_total, 1.0, 1.0, 20};
    const DensityVariant per{DensityTag::pois_per, 1.0, 1.0, 20};
    for (int k = 1; k <= 4; ++k) {
        const double w = s.omegas[k - 1];
        const double a = 1.0 / (1.0 + 1.0 / (w * w + 1.0));
        r.near("pois_total k=" + std::to_string(k), 1.0, peak_strength(total, k, 0.5), 0.05);
        r.near("pois_per k=" + std::to_string(k), a, peak_strength(per, k, 0.5), 0.05);
    }
    r.below("runtime_s", since(t0), 30.0);
}

void c8(VerifyReport& r)
{
    std::vector<double> pois, pre;
    for (int n : {10, 20, 40}) {
        pois.push_back(integrate_density({{DensityTag::pois_per, 1.0, 1.0, n},
                                          {DensityTag::pois_bdry, 1.0, 1.0, n}},
                                         0.0, 0.3));
        pre.push_back(integrate_density({{DensityTag::rho_N, 1.0, 1.0, n},
                                         {DensityTag::rho_per, 1.0, 1.0, n},
                                         {DensityTag::bou_pretrace, 1.0, 1.0, n}},
                                        0.0, 0.3));
    }
    r.truth("pois increasing over n_max 10,20,40", pois[0] < pois[1] && pois[1] < pois[2]);
    r.near("pois n_max=40 toward 1/2", 0.5, pois[2], 0.1);
    const double worst = std::max({std::abs(pre[0]), std::abs(pre[1]), std::abs(pre[2])});
    r.below("pretrace assembly |integral|", worst, 0.1);
}

void c9(VerifyReport& r)
{
    ScalarField1D gauss{[](double w) { return std::exp(-w * w); }, Decay::exponential, 10.0};
    r.near("phi(0)=1", kPi / 2.0, telescoping_delta_demo(200, gauss), 0.02);
    ScalarField1D away{[](double w) {
                           if (w <= 0.5 || w >= 3.0)
                               return 0.0;
                           return std::exp(-1.0 / ((w - 0.5) * (3.0 - w)));
                       },
                       Decay::compact, 3.0};
    r.near("support away from 0", 0.0, telescoping_delta_demo(200, away), 0.02);
    r.near("shifted index form", 0.0, telescoping_partial_sum(200, 0.7, true), 0.0);
}

void c10(VerifyReport& r)
{
    std::mt19937 gen(7u);
    std::uniform_real_distribution<double> ut(0.2, 3.0), ux(0.0, 2.0), uk(0.2, 3.0), sgn(0.0, 1.0);
    double schro = 0.0, cyl = 0.0, deriv = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t = (sgn(gen) < 0.3 ? -1.0 : 1.0) * ut(gen);
        const double x = ux(gen), y = ux(gen);
        const RobinParam kp{uk(gen)};
        schro = std::max(schro, std::abs(schrodinger_boundary_closed(t, x, y, kp) -
                                         schrodinger_boundary_quadrature(t, x, y, kp)));
    }
    for (int i = 0; i < 10; ++i) {
        const double t = ut(gen), x = ux(gen), y = ux(gen);
        const RobinParam kp{uk(gen)};
        cyl = std::max(cyl, std::abs(cylinder_boundary_closed(t, x, y, kp) -
                                     cylinder_boundary_quadrature(t, x, y, kp)));
        const double h = 1e-4;
        const double fd = (cylinder_kernel_neumann_data(t + h, x, y, kp) -
                           cylinder_kernel_neumann_data(t - h, x, y, kp)) /
                          (2.0 * h);
        deriv = std::max(deriv, std::abs(fd - cylinder_kernel_halfline(t, x, y, kp)));
    }
    r.below("schrodinger closed vs quadrature", schro, 1e-6);
    r.below("cylinder closed vs quadrature", cyl, 1e-6);
    r.below("cylinder d/dt relation", deriv, 1e-5);
}

void c11(VerifyReport& r)
{
    const double sigma = 0.5, c = 3.0, t = 6.0;
    ScalarField1D f{[=](double x) { return std::exp(-0.5 * (x - c) * (x - c) / (sigma * sigma)); },
                    Decay::exponential, c + 10.0 * sigma};
    const RobinParam kp{1.0};
    const FdWaveResult fd = fd_wave_robin(f, kp.kappa, 12.0, 2048, t);
    std::vector<double> exact(fd.x.size());
    parallel_for(fd.x.size(), [&](std::size_t i) { exact[i] = wave_solve_halfline(t, fd.x[i], f, kp); });
    double e2 = 0.0;
    for (std::size_t i = 0; i < fd.x.size(); ++i) {
        const double w = (i == 0 || i + 1 == fd.x.size()) ? 0.5 * fd.h : fd.h;
        e2 += w * (fd.u[i] - exact[i]) * (fd.u[i] - exact[i]);
    }
    r.below("L2 error vs finite differences", std::sqrt(e2), 1e-3);
    r.below("Robin energy drift (relative)", fd.max_energy_drift, 1e-3);
}

struct Suite {
    const char* name;
    const char* title;
    void (*run)(VerifyReport&);
};

constexpr Suite kSuites[] = {
    {"c1", "eigenvalues", c1},
    {"c2", "perturbative overlap", c2},
    {"c3", "heat trace", c3},
    {"c4", "wave trace identity (exact)", c4},
    {"c5", "interval kernel equivalence", c5},
    {"c6", "termwise identities", c6},
    {"c7", "peak strengths", c7},
    {"c8", "delta at zero", c8},
    {"c9", "telescoping demo", c9},
    {"c10", "schrodinger and cylinder dual evaluation", c10},
    {"c11", "finite-difference wave check", c11},
};

}  // namespace

const std::vector<std::string>& verify_suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& s : kSuites)
            v.emplace_back(s.name);
        return v;
    }();
    return names;
}

VerifyReport run_verify_suite(const std::string& name)
{
    for (const auto& s : kSuites) {
        if (name != s.name)
            continue;
        VerifyReport r;
        r.suite = s.name;
        r.title = s.title;
        const auto t0 = Clock::now();
        try {
            s.run(r);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        r.seconds = since(t0);
        return r;
    }
    throw usage_error("unknown verify suite '" + name + "'");
}

std::vector<VerifyReport> run_verify(const std::string& name)
{
    std::vector<VerifyReport> out;
    if (name == "all") {
        for (const auto& s : kSuites)
            out.push_back(run_verify_suite(s.name));
    } else {
        out.push_back(run_verify_suite(name));
    }
    return out;
}

}  // namespace robin
