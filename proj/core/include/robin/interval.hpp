// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_INTERVAL_HPP
#define ROBIN_INTERVAL_HPP

#include "robin/transform.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace robin {

using Rational = boost::multiprecision::cpp_rational;

// Wave kernel on (0, L): Robin at x = 0, Dirichlet at x = L.

// Argument t + sx*x + sy*y - offset*L of a pulse.
enum class Orientation {
    plus_minus,   // t + x - y, moving left
    minus_plus,   // t - x + y, moving right
    plus_plus,    // t + x + y, moving left
    minus_minus,  // t - x - y, moving right
};

int x_sign(Orientation o);
int y_sign(Orientation o);
bool moves_left(Orientation o);

enum class PulseKind { impulse, tail };

// impulse: sign * weight * delta(a)
// tail:    sign * (-kappa) L^1_order(2 kappa a) e^{-kappa a} theta(a)
struct Pulse {
    PulseKind kind = PulseKind::impulse;
    int sign = 1;
    double weight = 0.5;
    int offset = 0;  // in units of L
    Orientation orientation = Orientation::plus_minus;
    int laguerre_order = -1;
    double decay = 0.0;
    int reflections = 0;  // Robin reflections
};

struct pulse_algebra_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct horizon_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PulseTrain {
    std::vector<Pulse> pulses;
    double t_max = 0.0;
    double L = 1.0;
    double y = 0.0;
    RobinParam kp;
};

double pulse_argument(const Pulse& p, double t, double x, double y, double L);

// Earliest t >= 0 at which the pulse is active somewhere in [0, L].
double pulse_activation_time(const Pulse& p, double L, double y);

// Robin reflection at x = 0 of one wavefront (all records sharing
// orientation and offset, moving left). Returns the reflected front.
std::vector<Pulse> robin_reflect(const std::vector<Pulse>& front, RobinParam kp);

// Dirichlet image reflection at x = L of a right-moving front.
std::vector<Pulse> dirichlet_reflect(const std::vector<Pulse>& front);

// Pulse train generated from the two free impulses by alternating Robin and
// Dirichlet reflections, up to activation time t_max.
PulseTrain build_kernel_by_reflection(double t_max, double L, RobinParam kp, double y);

// The same train enumerated from the closed-form families.
PulseTrain kernel_pulses_closed_form(double t_max, double L, RobinParam kp, double y);

bool same_pulse_multiset(const PulseTrain& a, const PulseTrain& b, double tol = 1e-12);

// Evaluates a train at (t, x); impulses as delta(t - tau), 0 <= tau <= t.
KernelValue evaluate_pulse_train(const PulseTrain& train, double t, double x);

int required_nmax(double t, double L);

// Closed-form kernel summed over n <= n_max; throws horizon_error if
// n_max < required_nmax(t, L).
KernelValue wave_kernel_interval(double t, double x, double y, double L, RobinParam kp,
                                 int n_max);

struct TraceDecomposition {
    std::vector<Impulse<double>> N;  // L (-1)^n delta(t - 2nL)
    double P = 0.0;
    double A = 0.0;
    double B = 0.0;

    double regular() const { return P + A + B; }
};

enum class BRoute { automatic, coefficients, laguerre };

double trace_P(double t, double L, RobinParam kp, int n_max);
double trace_A(double t, RobinParam kp);
double trace_B(double t, double L, RobinParam kp, int n_max, BRoute route = BRoute::automatic);

TraceDecomposition wave_trace_interval(double t, double L, RobinParam kp, int n_max);

// c(n, m) as an exact rational, 1 <= m <= n.
Rational coeff_c(int n, int m);

// Coefficients r_k of -L^1_m(2z) = sum_k r_k z^k.
std::vector<Rational> neg_laguerre1_2z_coeffs(int m);

// Exact trace over x of the periodic-orbit tails at period 2nL:
// coefficients r_k with  tail = kappa L sum_k r_k (kappa tau)^k e^{-kappa tau}.
std::vector<Rational> periodic_tail_trace_coeffs(int n);

// Same coefficients read off the closed form of P.
std::vector<Rational> trace_P_coeffs(int n);

// Bounce-orbit tails integrated over x in closed form (antiderivatives of
// polynomial times exponential); equals A + B.
double bounce_trace_by_pulses(double t, double L, RobinParam kp, int n_max);

enum class BoundaryPair { ND, NN, DD };

// Trace of the Neumann-type kernels: delta train plus constant.
KernelValue neumann_trace(double t, double L, BoundaryPair variant);

// Sum over |n| <= n_terms of the two step-function families of the ND
// trace, which cancel after reindexing.
double neumann_bounce_sum(double t, double L, int n_terms);

}  // namespace robin

#endif
