// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/transform.hpp"

#include "robin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace robin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailCut = 50.0;  // e^{-50} ~ 2e-22
constexpr double kSchrodingerOffset = 1e-12;

void require_nonnegative_kappa(RobinParam kp, const char* who)
{
    if (!(kp.kappa >= 0.0))
        throw std::domain_error(std::string(who) + ": requires kappa >= 0");
}

// Upper truncation for int_0^inf e^{-k e} g(x + e) de.
double decay_cutoff(const ScalarField1D& g, double k, double x)
{
    double upper = kTailCut / k;
    if (g.decay != Decay::bounded)
        upper = std::min(upper, std::max(0.0, g.extent - x));
    return upper;
}

std::vector<double> even_breaks(double a, double b, int n)
{
    std::vector<double> br;
    for (int i = 0; i <= n; ++i)
        br.push_back(a + (b - a) * i / n);
    return br;
}

}  // namespace

double step(double a)
{
    if (a > 0.0)
        return 1.0;
    if (a < 0.0)
        return 0.0;
    return 0.5;
}

double t_apply(const ScalarField1D& f, RobinParam kp, double x)
{
    const double h = std::max(1e-6, 1e-8 * std::abs(x));
    double df;
    if (x - h < 0.0)
        df = (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
    else
        df = (f(x + h) - f(x - h)) / (2.0 * h);
    return df - kp.kappa * f(x);
}

double t_inverse(const ScalarField1D& g, RobinParam kp, double x)
{
    const double k = kp.kappa;
    if (!(k > 0.0))
        throw std::domain_error("t_inverse: requires kappa > 0");
    const double upper = decay_cutoff(g, k, x);
    if (upper <= 0.0)
        return 0.0;
    auto integrand = [&](double e) { return std::exp(-k * e) * g(x + e); };
    return -integrate(integrand, even_breaks(0.0, upper, 8));
}

double t_inverse_neg(const ScalarField1D& g, RobinParam kp, double x)
{
    const double k = kp.kappa;
    if (!(k < 0.0))
        throw std::domain_error("t_inverse_neg: requires kappa < 0");
    // int_0^x e^{k(x-s)} g(s) ds - e^{kx} int_0^inf e^{ks} g(s) ds
    double lower = 0.0;
    double near = 0.0;
    if (x > 0.0) {
        auto f1 = [&](double s) { return std::exp(k * (x - s)) * g(s); };
        double hi = x;
        if (g.decay != Decay::bounded)
            hi = std::min(hi, g.extent);
        lower = std::max(0.0, x + kTailCut / k);  // k < 0: drop e^{k(x-s)} < e^{-50}
        if (hi > lower)
            near = integrate(f1, even_breaks(lower, hi, 8));
    }
    const double upper = decay_cutoff(g, -k, 0.0);
    auto f2 = [&](double s) { return std::exp(k * s) * g(s); };
    const double far = upper > 0.0 ? integrate(f2, even_breaks(0.0, upper, 8)) : 0.0;
    return near - std::exp(k * x) * far;
}

double robin_eigenfunction(double omega, RobinParam kp, double x)
{
    if (!(omega > 0.0))
        throw std::domain_error("robin_eigenfunction: requires omega > 0");
    const double r = std::hypot(omega, kp.kappa);
    return std::sqrt(2.0 / kPi) * (omega * std::cos(omega * x) + kp.kappa * std::sin(omega * x)) / r;
}

KernelValue wave_kernel_halfline(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "wave_kernel_halfline");
    if (!(t > 0.0))
        throw std::domain_error("wave_kernel_halfline: requires t > 0");
    KernelValue kv;
    auto add = [&](double tau, double w) {
        if (tau < 0.0 || tau > t)
            return;
        for (auto& imp : kv.impulses)
            if (imp.location == tau) {
                imp.weight += w;
                return;
            }
        kv.impulses.push_back({tau, w});
    };
    add(x - y, 0.5);
    add(y - x, 0.5);
    add(x + y, 0.5);
    std::sort(kv.impulses.begin(), kv.impulses.end(),
              [](const auto& a, const auto& b) { return a.location < b.location; });
    kv.regular = wightman_jump(t, x, y, kp);
    return kv;
}

double wave_solve_halfline(double t, double x, const ScalarField1D& f, RobinParam kp)
{
    require_nonnegative_kappa(kp, "wave_solve_halfline");
    auto F = [&](double y) { return y < 0.0 ? 0.0 : f(y); };
    double u = 0.5 * (F(x - t) + F(x + t) + F(t - x));
    const double k = kp.kappa;
    if (k == 0.0 || t <= x)
        return u;
    // memory integral over the delay e of the boundary echo
    const double a = t - x;
    double lo = 0.0;
    if (f.decay != Decay::bounded)
        lo = std::max(0.0, a - f.extent);
    const double hi = std::min(a, kTailCut / k);
    if (hi <= lo)
        return u;
    auto g = [&](double e) { return std::exp(-k * e) * F(a - e); };
    const double mem = integrate(g, even_breaks(lo, hi, 4));
    return u - k * step(a) * mem;
}

double heat_kernel_halfline(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "heat_kernel_halfline");
    if (!(t > 0.0))
        throw std::domain_error("heat_kernel_halfline: requires t > 0");
    const double s = x + y, d = x - y;
    const double g0 = 1.0 / std::sqrt(4.0 * kPi * t);
    const double img = std::exp(-s * s / (4.0 * t));
    double G = g0 * (std::exp(-d * d / (4.0 * t)) + img);
    if (kp.kappa != 0.0)
        G -= kp.kappa * img * erfcx(s / std::sqrt(4.0 * t) + kp.kappa * std::sqrt(t));
    return G;
}

double heat_trace_boundary(double t, RobinParam kp, int d)
{
    if (!(t > 0.0))
        throw std::domain_error("heat_trace_boundary: requires t > 0");
    if (d < 1)
        throw std::domain_error("heat_trace_boundary: requires d >= 1");
    const double transverse = std::pow(4.0 * kPi * t, -0.5 * (d - 1));
    return transverse * 0.5 * (erfcx(kp.kappa * std::sqrt(t)) - 1.0);
}

double heat_coeff(int n)
{
    if (n < 1)
        throw std::domain_error("heat_coeff: requires n >= 1");
    if (n % 2 == 0) {
        const int j = n / 2;
        return 0.5 / std::tgamma(j + 1.0);
    }
    const int j = (n - 1) / 2;
    double dfact = 1.0;  // (2j+1)!!
    for (int i = 3; i <= 2 * j + 1; i += 2)
        dfact *= i;
    return -std::ldexp(1.0, j) / (std::sqrt(kPi) * dfact);
}

double heat_trace_series(double t, RobinParam kp, int order)
{
    if (order < 0 || order > 60)
        throw std::domain_error("heat_trace_series: order must lie in [0, 60]");
    const double u = kp.kappa * std::sqrt(t);
    const double u2 = u * u;
    double even = 0.0, term = 1.0;
    for (int j = 1; j <= order; ++j) {
        term *= u2 / j;
        even += term;
    }
    double odd = 0.0;
    term = u;  // 2^j u^{2j+1} / (2j+1)!!
    for (int j = 0; j <= order; ++j) {
        odd += term;
        term *= 2.0 * u2 / (2.0 * j + 3.0);
    }
    return 0.5 * even - odd / std::sqrt(kPi);
}

ComplexValue schrodinger_boundary_closed(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "schrodinger_kernel_halfline");
    if (t == 0.0)
        throw std::domain_error("schrodinger_kernel_halfline: requires t != 0");
    if (kp.kappa == 0.0)
        return 0.0;
    const ComplexValue th(kSchrodingerOffset, t);
    const ComplexValue sq = std::sqrt(th);
    const double s = x + y;
    const ComplexValue z = s / (2.0 * sq) + kp.kappa * sq;
    return -kp.kappa * std::exp(-s * s / (4.0 * th)) * erfc_scaled_complex(z);
}

ComplexValue schrodinger_boundary_quadrature(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "schrodinger_kernel_halfline");
    if (t == 0.0)
        throw std::domain_error("schrodinger_kernel_halfline: requires t != 0");
    if (t < 0.0)
        return std::conj(schrodinger_boundary_quadrature(-t, x, y, kp));
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    const double v0 = (x + y) / t;
    const double vmax = v0 + kTailCut / (k * t);
    auto f = [&](double v) {
        return std::exp(ComplexValue(-k * t * (v - v0), v * v * t / 4.0));
    };
    // one panel per 2 pi of the phase v^2 t / 4
    std::vector<double> br{v0};
    for (int i = 1;; ++i) {
        const double v = std::sqrt(v0 * v0 + 8.0 * kPi * i / t);
        if (v >= vmax)
            break;
        br.push_back(v);
    }
    br.push_back(vmax);
    QuadOptions opt;
    opt.abs_tol = 1e-13;
    const ComplexValue I = integrate(f, br, opt);
    const ComplexValue pref = -2.0 * k * t / std::sqrt(ComplexValue(0.0, 4.0 * kPi * t));
    return pref * I;
}

ComplexValue schrodinger_kernel_halfline(double t, double x, double y, RobinParam kp)
{
    if (t == 0.0)
        throw std::domain_error("schrodinger_kernel_halfline: requires t != 0");
    const ComplexValue th(kSchrodingerOffset, t);
    const ComplexValue g0 = 1.0 / std::sqrt(4.0 * kPi * th);
    const double d = x - y, s = x + y;
    const ComplexValue free = g0 * (std::exp(-d * d / (4.0 * th)) + std::exp(-s * s / (4.0 * th)));
    return free + schrodinger_boundary_closed(t, x, y, kp);
}

ComplexValue schrodinger_kernel_checked(double t, double x, double y, RobinParam kp, double tol)
{
    const ComplexValue a = schrodinger_boundary_closed(t, x, y, kp);
    const ComplexValue b = schrodinger_boundary_quadrature(t, x, y, kp);
    if (std::abs(a - b) > tol)
        throw std::domain_error("schrodinger_kernel_halfline: closed form and quadrature disagree");
    return schrodinger_kernel_halfline(t, x, y, kp);
}

double cylinder_boundary_closed(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "cylinder_kernel_halfline");
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    const ComplexValue zeta(k * (x + y), -k * t);
    return 2.0 * k / kPi * (-e1_scaled(zeta)).imag();
}

double cylinder_boundary_quadrature(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "cylinder_kernel_halfline");
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    const double v0 = (x + y) / t;
    auto f = [&](double v) { return std::exp(-k * t * (v - v0)) / (v * v + 1.0); };
    const double span = kTailCut / (k * t);
    QuadOptions opt;
    opt.abs_tol = 1e-14;
    return -2.0 * k / kPi * integrate(f, even_breaks(v0, v0 + span, 16), opt);
}

double cylinder_kernel_halfline(double t, double x, double y, RobinParam kp)
{
    if (!(t > 0.0))
        throw std::domain_error("cylinder_kernel_halfline: requires t > 0");
    const double d = x - y, s = x + y;
    const double GN = (t / (t * t + d * d) + t / (t * t + s * s)) / kPi;
    return GN + cylinder_boundary_closed(t, x, y, kp);
}

double cylinder_kernel_neumann_data(double t, double x, double y, RobinParam kp)
{
    require_nonnegative_kappa(kp, "cylinder_kernel_neumann_data");
    if (!(t > 0.0))
        throw std::domain_error("cylinder_kernel_neumann_data: requires t > 0");
    if (kp.kappa == 0.0)
        throw std::domain_error("cylinder_kernel_neumann_data: requires kappa > 0");
    const double d = x - y, s = x + y;
    const double GD = (std::log(t * t + d * d) - std::log(t * t + s * s)) / (2.0 * kPi);
    const ComplexValue zeta(kp.kappa * s, -kp.kappa * t);
    return GD + 2.0 / kPi * (-e1_scaled(zeta)).real();
}

double wightman_jump(double t, double x, double y, RobinParam kp)
{
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    const double a = std::abs(t) - x - y;
    const double th = step(a);
    if (th == 0.0)
        return 0.0;
    return -k * std::exp(-k * a) * th;
}

}  // namespace robin
