// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_TRANSFORM_HPP
#define ROBIN_TRANSFORM_HPP

#include "robin/specfun.hpp"

#include <functional>
#include <limits>
#include <vector>

namespace robin {

struct RobinParam {
    double kappa = 1.0;  // du/dx(0) = kappa u(0)
};

enum class Decay { bounded, exponential, compact };

// A function on [0, inf). For compact/exponential decay, `extent` is where
// the function is (numerically) zero: end of support, or a few decay lengths.
struct ScalarField1D {
    std::function<double(double)> f;
    Decay decay = Decay::bounded;
    double extent = std::numeric_limits<double>::infinity();

    double operator()(double x) const { return f(x); }
};

template <class T>
struct Impulse {
    double location;  // delta(t - location), or a spatial offset
    T weight;
};

// Singular part carried symbolically, regular part sampled.
template <class T>
struct KernelValueT {
    T regular{};
    std::vector<Impulse<T>> impulses;
};

using KernelValue = KernelValueT<double>;

// T f = f' - kappa f, central difference with h = max(1e-6, 1e-8 |x|).
double t_apply(const ScalarField1D& f, RobinParam kp, double x);

// -int_0^inf e^{-kappa e} g(x+e) de, kappa > 0.
double t_inverse(const ScalarField1D& g, RobinParam kp, double x);

// e^{kappa x}[int_0^x e^{-kappa s} g ds - int_0^inf e^{kappa s} g ds],
// kappa < 0. The result is orthogonal to e^{kappa x}.
double t_inverse_neg(const ScalarField1D& g, RobinParam kp, double x);

// sqrt(2/pi) sin(omega x + phi), phi = atan(omega/kappa).
double robin_eigenfunction(double omega, RobinParam kp, double x);

// theta with theta(0) = 1/2.
double step(double a);

// Half-line wave kernel. Impulses are reported as delta(t - tau) for the
// arrival times 0 <= tau <= t of the direct, echo and image fronts.
KernelValue wave_kernel_halfline(double t, double x, double y, RobinParam kp);

// Solution with u(0) = f, u_t(0) = 0, f taken as 0 on y < 0.
double wave_solve_halfline(double t, double x, const ScalarField1D& f, RobinParam kp);

double heat_kernel_halfline(double t, double x, double y, RobinParam kp);

// Robin correction to the trace of the heat kernel, with the transverse
// factor (4 pi t)^{-(d-1)/2}.
double heat_trace_boundary(double t, RobinParam kp, int d);

// Coefficient of kappa^n t^{n/2} in the small-t expansion of the d = 1
// boundary trace.
double heat_coeff(int n);

// Partial sums j <= order of both small-t sub-series.
double heat_trace_series(double t, RobinParam kp, int order);

// Schroedinger propagator (i u_t = -u_xx), continued from the heat kernel
// at t_heat = 1e-12 + i t.
ComplexValue schrodinger_kernel_halfline(double t, double x, double y, RobinParam kp);

// Boundary part only, two ways: closed form and velocity-variable quadrature.
ComplexValue schrodinger_boundary_closed(double t, double x, double y, RobinParam kp);
ComplexValue schrodinger_boundary_quadrature(double t, double x, double y, RobinParam kp);

// Evaluates both routes and throws std::domain_error if they disagree by
// more than tol.
ComplexValue schrodinger_kernel_checked(double t, double x, double y, RobinParam kp,
                                        double tol = 1e-6);

double cylinder_kernel_halfline(double t, double x, double y, RobinParam kp);
double cylinder_boundary_closed(double t, double x, double y, RobinParam kp);
double cylinder_boundary_quadrature(double t, double x, double y, RobinParam kp);

// Kernel for Neumann data at t = 0 (its t-derivative is the cylinder kernel).
double cylinder_kernel_neumann_data(double t, double x, double y, RobinParam kp);

// Jump part of the Robin correction to the Wightman function; even in t.
double wightman_jump(double t, double x, double y, RobinParam kp);

}  // namespace robin

#endif
