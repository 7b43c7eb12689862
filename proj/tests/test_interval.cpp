// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/interval.hpp"
#include "robin/oracles.hpp"
#include "robin/quadrature.hpp"
#include "robin/spectral.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace robin;

namespace {

double bump(double x)
{
    const double a = 0.2, b = 0.8;
    if (x <= a || x >= b)
        return 0.0;
    return std::exp(-1.0 / ((x - a) * (b - x)));
}

// u(t, x) = int_0^L G(t, x, y) f(y) dy from the pulse list: impulses are
// picked up at y*, tails are integrated.
double solution_by_pulses(double t, double x, double L, RobinParam kp)
{
    const PulseTrain train = kernel_pulses_closed_form(t + 2.0 * L, L, kp, 0.0);
    double u = 0.0;
    std::set<double> cuts{0.2, 0.8};
    for (const auto& p : train.pulses) {
        const double ystar =
            (p.offset * L - t - x_sign(p.orientation) * x) / y_sign(p.orientation);
        if (ystar > 0.2 && ystar < 0.8)
            cuts.insert(ystar);
        if (p.kind == PulseKind::impulse && ystar > 0.0 && ystar < L)
            u += p.sign * p.weight * bump(ystar);
    }
    const int n_max = required_nmax(t, L);
    u += integrate(
        [&](double y) { return wave_kernel_interval(t, x, y, L, kp, n_max).regular * bump(y); },
        std::vector<double>(cuts.begin(), cuts.end()));
    return u;
}

// sum_k cos(w_k t) psi_k(x) <psi_k, f> / |psi_k|^2, psi_k = sin(w_k (L - x)).
struct ModalExpansion {
    double L;
    std::vector<double> omegas, coeffs;

    ModalExpansion(double L_, RobinParam kp, int modes) : L(L_)
    {
        omegas = eig_roots(L, kp, modes).omegas;
        QuadOptions opt;
        opt.abs_tol = 1e-14;
        for (double w : omegas) {
            const double c = integrate([&](double y) { return std::sin(w * (L - y)) * bump(y); },
                                       panels(0.2, 0.8, 0.01), opt);
            coeffs.push_back(c / (0.5 * L - std::sin(2.0 * w * L) / (4.0 * w)));
        }
    }

    double operator()(double t, double x) const
    {
        double u = 0.0;
        for (std::size_t k = 0; k < omegas.size(); ++k)
            u += std::cos(omegas[k] * t) * std::sin(omegas[k] * (L - x)) * coeffs[k];
        return u;
    }
};

PulseTrain select(const PulseTrain& from, Orientation o, int offset)
{
    PulseTrain out = from;
    out.pulses.clear();
    for (const auto& p : from.pulses)
        if (p.orientation == o && p.offset == offset)
            out.pulses.push_back(p);
    return out;
}

}  // namespace

TEST_CASE("robin reflection of a single impulse")
{
    Pulse inc;
    inc.orientation = Orientation::plus_minus;
    const auto out = robin_reflect({inc}, RobinParam{1.5});
    REQUIRE(out.size() == 2);
    const auto imp = std::find_if(out.begin(), out.end(),
                                  [](const Pulse& p) { return p.kind == PulseKind::impulse; });
    const auto tail = std::find_if(out.begin(), out.end(),
                                   [](const Pulse& p) { return p.kind == PulseKind::tail; });
    REQUIRE(imp != out.end());
    REQUIRE(tail != out.end());
    CHECK(imp->orientation == Orientation::minus_minus);
    CHECK(imp->sign * imp->weight == 0.5);
    CHECK(tail->orientation == Orientation::minus_minus);
    CHECK(tail->laguerre_order == 0);
    CHECK(tail->decay == 1.5);
    CHECK(tail->reflections == 1);
    // tail value at argument a: -kappa e^{-kappa a} (for a half-weight impulse)
    CHECK(tail->sign == 1);

    const auto pure = robin_reflect({inc}, RobinParam{0.0});
    REQUIRE(pure.size() == 1);
    CHECK(pure[0].kind == PulseKind::impulse);
}

TEST_CASE("reflection maps each closed-form family member to the next")
{
    const double L = 1.0;
    const RobinParam kp{0.7};
    const PulseTrain train = kernel_pulses_closed_form(40.0, L, kp, 0.3);
    for (int n = 0; n <= 6; ++n) {
        // left movers of index n reflect into right movers of index n + 1
        const PulseTrain a = select(train, Orientation::plus_minus, 2 * n);
        const PulseTrain b = select(train, Orientation::minus_minus, 2 * n);
        PulseTrain ra = a;
        ra.pulses = robin_reflect(a.pulses, kp);
        CAPTURE(n);
        CHECK(same_pulse_multiset(ra, b));

        const PulseTrain c = select(train, Orientation::plus_plus, 2 * (n + 1));
        const PulseTrain d = select(train, Orientation::minus_plus, 2 * (n + 1));
        PulseTrain rc = c;
        rc.pulses = robin_reflect(c.pulses, kp);
        CHECK(same_pulse_multiset(rc, d));
        for (const auto& p : rc.pulses)
            if (p.kind == PulseKind::tail)
                CHECK(p.laguerre_order == n);
    }
}

TEST_CASE("reflection builder and closed form agree")
{
    for (double k : {0.0, 0.4, 1.0, 2.5}) {
        for (double y : {0.1, 0.5, 0.93}) {
            for (double tm : {0.5, 3.0, 7.0}) {
                const auto a = build_kernel_by_reflection(tm, 1.0, RobinParam{k}, y);
                const auto b = kernel_pulses_closed_form(tm, 1.0, RobinParam{k}, y);
                CAPTURE(k);
                CAPTURE(y);
                CAPTURE(tm);
                CHECK(same_pulse_multiset(a, b));
            }
        }
    }
}

TEST_CASE("pulse bookkeeping")
{
    const double L = 1.0, y = 0.5;
    // before any boundary contact only the two free impulses exist
    const auto early = build_kernel_by_reflection(0.2, L, RobinParam{1.0}, y);
    CHECK(early.pulses.size() == 2);

    for (int k = 1; k <= 5; ++k) {
        const auto tr = build_kernel_by_reflection(2.0 * k * L, L, RobinParam{1.0}, y);
        int impulses = 0;
        for (const auto& p : tr.pulses) {
            if (p.kind == PulseKind::impulse)
                ++impulses;
            else
                CHECK(p.laguerre_order == p.reflections - 1);
            CHECK(pulse_activation_time(p, L, y) <= 2.0 * k * L);
        }
        CAPTURE(k);
        CHECK(std::abs(impulses - (4 * k + 2)) <= 1);
    }
}

TEST_CASE("interval kernel: early times, horizon, Neumann-Dirichlet limit")
{
    const double L = 1.0;
    const RobinParam kp{1.0};
    const KernelValue early = wave_kernel_interval(0.05, 0.4, 0.43, L, kp, 2);
    CHECK(early.regular == 0.0);
    REQUIRE(early.impulses.size() == 1);
    CHECK(early.impulses[0].location == doctest::Approx(0.03));

    CHECK_THROWS_AS(wave_kernel_interval(5.0, 0.4, 0.5, L, kp, 2), horizon_error);
    for (double t : {0.3, 1.7, 4.4, 9.1}) {
        const int n = required_nmax(t, L);
        const KernelValue a = wave_kernel_interval(t, 0.3, 0.6, L, kp, n);
        const KernelValue b = wave_kernel_interval(t, 0.3, 0.6, L, kp, n + 5);
        CHECK(a.regular == b.regular);
        CHECK(a.impulses.size() == b.impulses.size());
    }

    // kappa = 0: images only
    const KernelValue nd = wave_kernel_interval(6.3, 0.3, 0.6, L, RobinParam{0.0}, 10);
    CHECK(nd.regular == 0.0);
    for (const auto& imp : nd.impulses)
        CHECK(std::abs(imp.weight) == 0.5);
}

TEST_CASE("interval kernel reproduces the modal expansion")
{
    const double L = 1.0;
    for (double k : {0.0, 1.3}) {
        const RobinParam kp{k};
        const ModalExpansion modes(L, kp, 200);
        for (double t : {0.7, 2.3, 5.1}) {
            for (double x : {0.15, 0.5, 0.9}) {
                const double a = solution_by_pulses(t, x, L, kp);
                const double b = modes(t, x);
                CAPTURE(k);
                CAPTURE(t);
                CAPTURE(x);
                CHECK(std::abs(a - b) < 1e-6);
            }
        }
    }
}

TEST_CASE("trace: regular part against quadrature of the kernel")
{
    const double L = 1.0;
    for (double k : {0.5, 1.0, 3.0}) {
        for (double t : {0.7, 2.5, 5.3, 7.9}) {
            const int n = required_nmax(t, L);
            const TraceDecomposition tr = wave_trace_interval(t, L, RobinParam{k}, n);
            const double q = interval_trace_quadrature(t, L, RobinParam{k}, n);
            CAPTURE(k);
            CAPTURE(t);
            CHECK(std::abs(tr.regular() - q) < 1e-9);
        }
    }
}

TEST_CASE("trace: A is the half-line result, bounce tails give A + B")
{
    const double L = 1.0;
    for (double k : {0.3, 1.0, 4.0}) {
        const RobinParam kp{k};
        for (double t = 0.25; t <= 8.0; t += 0.5) {
            const int n = required_nmax(t, L);
            CHECK(trace_A(t, kp) == doctest::Approx(0.5 * (std::exp(-k * t) - 1.0)));
            const double ab = trace_A(t, kp) + trace_B(t, L, kp, n);
            CHECK(std::abs(bounce_trace_by_pulses(t, L, kp, n) - ab) <= 1e-9 * std::abs(ab));
            const double bc = trace_B(t, L, kp, n, BRoute::coefficients);
            const double bl = trace_B(t, L, kp, n, BRoute::laguerre);
            CHECK(std::abs(bc - bl) < 1e-12);
        }
    }
}

TEST_CASE("trace: delta train and limits")
{
    const double L = 1.0;
    const TraceDecomposition tr = wave_trace_interval(4.5, L, RobinParam{1.0}, 4);
    REQUIRE(tr.N.size() == 3);
    for (int n = 0; n < 3; ++n) {
        CHECK(tr.N[n].location == 2.0 * n);
        CHECK(tr.N[n].weight == (n % 2 == 0 ? 1.0 : -1.0));
    }

    // kappa -> 0: everything but N vanishes
    for (double t : {0.5, 3.3, 7.7}) {
        const auto s = wave_trace_interval(t, L, RobinParam{1e-8}, required_nmax(t, L));
        CHECK(std::abs(s.P) < 1e-6);
        CHECK(std::abs(s.A) < 1e-6);
        CHECK(std::abs(s.B) < 1e-6);
    }

    // kappa -> inf: the Dirichlet trace, -1/2 away from the deltas
    double worst = 0.0;
    for (double t = 0.05; t < 9.0; t += 0.01) {
        if (std::abs(t - 2.0 * std::round(0.5 * t)) < 0.02)
            continue;
        const auto s = wave_trace_interval(t, L, RobinParam{1e6}, required_nmax(t, L));
        worst = std::max(worst, std::abs(s.regular() + 0.5));
    }
    CHECK(worst < 1e-4);
}

TEST_CASE("exact trace identities")
{
    CHECK(coeff_c(1, 1) == 1);
    CHECK(coeff_c(2, 2) == 2);
    CHECK(coeff_c(2, 1) == -1);
    CHECK_THROWS_AS(coeff_c(2, 3), std::domain_error);
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(trace_P_coeffs(n) == periodic_tail_trace_coeffs(n));
    }
    // -L^1_1(2z) = -(2 - 2z)
    const auto r = neg_laguerre1_2z_coeffs(1);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == -2);
    CHECK(r[1] == 2);
}

TEST_CASE("neumann-type traces")
{
    const double L = 1.0;
    CHECK(neumann_trace(3.0, L, BoundaryPair::ND).regular == 0.0);
    CHECK(neumann_trace(3.0, L, BoundaryPair::NN).regular == 0.5);
    CHECK(neumann_trace(3.0, L, BoundaryPair::DD).regular == -0.5);
    const KernelValue nd = neumann_trace(4.5, L, BoundaryPair::ND);
    REQUIRE(nd.impulses.size() == 3);
    CHECK(nd.impulses[1].weight == -1.0);
    for (double t = -7.93; t < 8.0; t += 0.137)
        CHECK(neumann_bounce_sum(t, L, 20) == 0.0);
}
