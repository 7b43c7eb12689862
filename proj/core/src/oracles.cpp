// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/oracles.hpp"

#include "robin/quadrature.hpp"
#include "robin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace robin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// E = 1/2 (u1-u0)^T M (u1-u0)/dt^2 + 1/2 u1^T K u0, conserved by leapfrog.
double staggered_energy(const std::vector<double>& u0, const std::vector<double>& u1, double h,
                        double dt, double kappa)
{
    const std::size_t n = u0.size();
    double kin = 0.0, pot = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double w = i == 0 ? 0.5 * h : h;
        const double v = (u1[i] - u0[i]) / dt;
        kin += w * v * v;
        pot += (u1[i + 1] - u1[i]) * (u0[i + 1] - u0[i]) / h;
    }
    pot += kappa * u1[0] * u0[0];
    return 0.5 * (kin + pot);
}

}  // namespace

FdWaveResult fd_wave_robin(const ScalarField1D& f, double kappa, double X, int N, double t_final,
                           double cfl)
{
    if (N < 4 || !(X > 0.0) || !(t_final > 0.0) || !(cfl > 0.0 && cfl <= 1.0))
        throw std::invalid_argument("fd_wave_robin: bad grid parameters");
    FdWaveResult r;
    r.h = X / N;
    r.steps = static_cast<int>(std::ceil(t_final / (cfl * r.h)));
    r.dt = t_final / r.steps;
    const double lam2 = (r.dt / r.h) * (r.dt / r.h);
    const std::size_t n = static_cast<std::size_t>(N) + 1;

    r.x.resize(n);
    std::vector<double> um(n), u(n), up(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        r.x[i] = static_cast<double>(i) * r.h;
        um[i] = i + 1 < n ? f(r.x[i]) : 0.0;
    }

    auto lap = [&](const std::vector<double>& v, std::size_t i) {
        const double left = i == 0 ? v[1] - 2.0 * r.h * kappa * v[0] : v[i - 1];
        return left - 2.0 * v[i] + v[i + 1];
    };

    // first step from u_t = 0
    for (std::size_t i = 0; i + 1 < n; ++i)
        u[i] = um[i] + 0.5 * lam2 * lap(um, i);
    u[n - 1] = 0.0;

    r.energy_initial = staggered_energy(um, u, r.h, r.dt, kappa);
    for (int s = 1; s < r.steps; ++s) {
        for (std::size_t i = 0; i + 1 < n; ++i)
            up[i] = 2.0 * u[i] - um[i] + lam2 * lap(u, i);
        up[n - 1] = 0.0;
        um.swap(u);
        u.swap(up);
        const double e = staggered_energy(um, u, r.h, r.dt, kappa);
        r.max_energy_drift =
            std::max(r.max_energy_drift, std::abs(e - r.energy_initial) / std::abs(r.energy_initial));
    }
    r.u = u;
    return r;
}

double heat_trace_quadrature(double t, RobinParam kp)
{
    if (!(t > 0.0))
        throw std::domain_error("heat_trace_quadrature: requires t > 0");
    // Boundary term of the kernel on the diagonal, written with std::erfc:
    // -kappa e^{2 kappa x + kappa^2 t} erfc(x/sqrt(t) + kappa sqrt(t)).
    const double k = kp.kappa;
    auto f = [&](double x) {
        const double c = std::erfc(x / std::sqrt(t) + k * std::sqrt(t));
        return c == 0.0 ? 0.0 : -k * std::exp(2.0 * k * x + k * k * t) * c;
    };
    // the integrand lives on the scale sqrt(t) and decays like e^{-x^2/t}
    const double s = std::sqrt(t);
    std::vector<double> br;
    for (double b : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 40.0})
        br.push_back(b * s);
    QuadOptions opt;
    opt.abs_tol = 1e-15;
    opt.rel_tol = 1e-12;
    opt.target = 1e-14;
    return integrate(f, br, opt);
}

ExpLinear halfline_tail_trace_exact(const Rational& t, const Rational& kappa)
{
    if (t <= 0 || kappa <= 0)
        throw std::domain_error("halfline_tail_trace_exact: requires t, kappa > 0");
    // Incident impulse 1/2 delta(t + x - y) hitting the Robin wall.
    Pulse incident;
    incident.kind = PulseKind::impulse;
    incident.weight = 0.5;
    incident.orientation = Orientation::plus_minus;
    const RobinParam kp{kappa.convert_to<double>()};
    const auto reflected = robin_reflect({incident}, kp);

    ExpLinear out{Rational(0), Rational(0)};
    const Rational Z = kappa * t;
    for (const auto& p : reflected) {
        if (p.kind != PulseKind::tail)
            continue;
        if (p.orientation != Orientation::minus_minus || p.offset != 0)
            throw pulse_algebra_error("halfline_tail_trace_exact: unexpected tail orientation");
        // tail = sign * kappa * q(z) e^{-z}, z = kappa (t - 2x); on 0 < x < t/2
        // dx = dz / (2 kappa), so the trace is (sign/2) int_0^Z q(z) e^{-z} dz.
        const auto q = neg_laguerre1_2z_coeffs(p.laguerre_order);
        Rational k_fact = 1;
        for (std::size_t k = 0; k < q.size(); ++k) {
            if (k > 0)
                k_fact *= static_cast<long>(k);
            // int_0^Z z^k e^{-z} dz = k! (1 - e^{-Z} sum_{i<=k} Z^i / i!)
            Rational partial = 0, term = 1;
            for (std::size_t i = 0; i <= k; ++i) {
                if (i > 0)
                    term = term * Z / static_cast<long>(i);
                partial += term;
            }
            const Rational c = Rational(p.sign, 2) * q[k] * k_fact;
            out.constant += c;
            out.exp_coeff -= c * partial;
        }
    }
    return out;
}

double interval_trace_quadrature(double t, double L, RobinParam kp, int n_max)
{
    std::set<double> cuts{0.0, L};
    const int m_top = static_cast<int>(std::ceil((t + 2.0 * L) / L)) + 1;
    for (int m = -m_top; m <= m_top; ++m) {
        for (double c : {(t - m * L) / 2.0, (m * L - t) / 2.0})
            if (c > 0.0 && c < L)
                cuts.insert(c);
    }
    std::vector<double> br(cuts.begin(), cuts.end());
    auto f = [&](double x) { return wave_kernel_interval(t, x, x, L, kp, n_max).regular; };
    QuadOptions opt;
    opt.abs_tol = 1e-12;
    opt.target = 1e-12;
    return integrate(f, br, opt);
}

double damped_trace_transform(double omega, double sigma, double L, RobinParam kp)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("damped_trace_transform: sigma must be positive");
    const double t_max = std::sqrt(2.0 * 40.0) / sigma;
    const int n_max = required_nmax(t_max, L);
    auto damp = [&](double t) { return std::exp(-0.5 * sigma * sigma * t * t); };

    const TraceDecomposition top = wave_trace_interval(t_max, L, kp, n_max);
    double sum = 0.0;
    for (const auto& imp : top.N) {
        const double w = imp.location == 0.0 ? 0.5 : 1.0;  // delta at the endpoint
        sum += w * imp.weight * std::cos(omega * imp.location) * damp(imp.location);
    }

    auto f = [&](double t) {
        return std::cos(omega * t) * damp(t) * wave_trace_interval(t, L, kp, n_max).regular();
    };
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    sum += integrate(f, panels(0.0, t_max, 0.5 * L), opt);
    return 2.0 / kPi * sum;
}

double eigen_gaussian_sum(double omega, double sigma, double L, RobinParam kp)
{
    auto g = [&](double u) {
        return std::exp(-0.5 * u * u / (sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
    };
    const int k_max = static_cast<int>((omega + 12.0 * sigma) * L / kPi) + 2;
    const EigenSpectrum s = eig_roots(L, kp, k_max);
    double sum = 0.0;
    for (double wk : s.omegas)
        sum += g(omega - wk) + g(omega + wk);
    return sum;
}

}  // namespace robin
