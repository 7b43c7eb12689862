// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_SPECFUN_HPP
#define ROBIN_SPECFUN_HPP

#include <complex>
#include <stdexcept>

namespace robin {

using ComplexValue = std::complex<double>;

// Scaled complementary error function e^{x^2} erfc(x).
// Throws std::domain_error below x = -26.6, where e^{x^2} overflows.
double erfcx(double x);

// e^{z^2} erfc(z) for Re z >= -1e-12.
ComplexValue erfc_scaled_complex(ComplexValue z);

// Principal-value exponential integral Ei(x), x != 0.
double ei_pv(double x);

// e^z E1(z) for Re z >= 0, z != 0. E1 has its cut on the negative axis,
// so Ei(w) = -E1(-w) carries the cut on the positive axis.
ComplexValue e1_scaled(ComplexValue z);

// Associated Laguerre polynomial L^1_m(x); L^1_{-1} == 0.
double laguerre1(int m, double x);

// Plain Laguerre polynomial L_n(x).
double laguerre(int n, double x);

// L^1_m(x) as the explicit finite sum over binomials, for cross-checks.
// Loses precision near x ~ 2m; instantiate with an extended type there.
template <class Real>
Real laguerre1_sum(int m, Real x)
{
    if (m < 0)
        return Real(0);
    const int n = m + 1;
    // term_j = C(n,j) (-x)^{j-1} / (j-1)!
    Real term = Real(n);
    Real sum = term;
    for (int j = 1; j < n; ++j) {
        term *= -x * Real(n - j) / Real(j + 1) / Real(j);
        sum += term;
    }
    return sum;
}

}  // namespace robin

#endif
