// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_ORACLES_HPP
#define ROBIN_ORACLES_HPP

// Independent reference computations used by the verification suites.
// None of these call the closed forms they are compared against.

#include "robin/interval.hpp"
#include "robin/transform.hpp"

#include <vector>

namespace robin {

struct FdWaveResult {
    std::vector<double> x;
    std::vector<double> u;  // at t_final
    double h = 0.0;
    double dt = 0.0;
    int steps = 0;
    double energy_initial = 0.0;
    double max_energy_drift = 0.0;  // relative
};

// Leapfrog for u_tt = u_xx on [0, X] with u_x(0) = kappa u(0) (ghost point)
// and u(X) = 0; u(0, .) = f, u_t(0, .) = 0. N intervals.
FdWaveResult fd_wave_robin(const ScalarField1D& f, double kappa, double X, int N, double t_final,
                           double cfl = 0.5);

// int_0^inf [G_R(t,x,x) - G_N(t,x,x)] dx by quadrature over x (kappa >= 0).
double heat_trace_quadrature(double t, RobinParam kp);

// int_0^inf of the half-line wave tail on the diagonal, in exact arithmetic:
// constant + exp_coeff * e^{-kappa t}. The tail is produced by a Robin
// reflection of the incident impulse.
struct ExpLinear {
    Rational constant;
    Rational exp_coeff;
};

ExpLinear halfline_tail_trace_exact(const Rational& t, const Rational& kappa);

// Regular part of the interval wave trace by quadrature over x of the kernel.
double interval_trace_quadrature(double t, double L, RobinParam kp, int n_max);

// (2/pi) int_0^inf cos(w t) e^{-sigma^2 t^2/2} Tr(t) dt with Tr = N + P + A + B.
double damped_trace_transform(double omega, double sigma, double L, RobinParam kp);

// sum_k [g(w - w_k) + g(w + w_k)], g the normal density of width sigma.
double eigen_gaussian_sum(double omega, double sigma, double L, RobinParam kp);

}  // namespace robin

#endif
