// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/specfun.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace robin {

namespace {

constexpr double kInvSqrtPi = std::numbers::inv_sqrtpi;
constexpr double kTiny = 1e-300;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Modified Lentz for 1 / (z + (1/2)/(z + 1/(z + (3/2)/(z + ...)))), the
// Laplace continued fraction of sqrt(pi) e^{z^2} erfc(z).
template <class T>
T erfcx_cf(T z, int max_iter = 5000)
{
    T f = z;
    if (std::abs(f) < kTiny)
        f = kTiny;
    T c = f, d = 0.0;
    for (int k = 1; k <= max_iter; ++k) {
        const double a = 0.5 * k;
        d = z + a * d;
        if (std::abs(d) < kTiny)
            d = kTiny;
        c = z + a / c;
        if (std::abs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const T delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 0.5 * kEps)
            return kInvSqrtPi / f;
    }
    throw std::runtime_error("erfcx continued fraction did not converge");
}

// 1/Gamma(n/2 + 1), n = 0..kMaclaurin-1.
constexpr int kMaclaurin = 90;
const std::array<double, kMaclaurin>& inv_gamma_half()
{
    static const std::array<double, kMaclaurin> table = [] {
        std::array<double, kMaclaurin> t{};
        for (int n = 0; n < kMaclaurin; ++n)
            t[n] = 1.0 / std::tgamma(0.5 * n + 1.0);
        return t;
    }();
    return table;
}

ComplexValue erfcx_maclaurin(ComplexValue z)
{
    const auto& g = inv_gamma_half();
    ComplexValue p = 1.0, sum = 0.0;
    for (int n = 0; n < kMaclaurin; ++n) {
        const ComplexValue term = p * g[n];
        sum += term;
        if (n > 4 && std::abs(term) < 1e-17 * std::abs(sum))
            break;
        p *= -z;
    }
    return sum;
}

// (2/sqrt(pi)) int_0^inf exp(-s^2 - 2 z s) ds, Re z >= 0, moderate |z|.
ComplexValue erfcx_laplace_integral(ComplexValue z)
{
    using boost::math::quadrature::gauss;
    constexpr double s_max = 6.3;
    constexpr int panels = 48;
    const double h = s_max / panels;
    ComplexValue sum = 0.0;
    auto f = [z](double s) { return std::exp(ComplexValue(-s * s, 0.0) - 2.0 * z * s); };
    for (int i = 0; i < panels; ++i)
        sum += gauss<double, 20>::integrate(f, i * h, (i + 1) * h);
    return 2.0 * kInvSqrtPi * sum;
}

}  // namespace

double erfcx(double x)
{
    if (std::isnan(x))
        throw std::domain_error("erfcx: NaN argument");
    if (x < -26.6)
        throw std::domain_error("erfcx: argument below -26.6 overflows");
    if (x < 0.0) {
        // 2 e^{x^2} - erfcx(-x), with x^2 split exactly into hi + lo
        const double hi = x * x;
        const double lo = std::fma(x, x, -hi);
        return 2.0 * std::exp(hi) * (1.0 + lo) - erfcx(-x);
    }
    if (x < 5.0) {
        const double hi = x * x;
        const double lo = std::fma(x, x, -hi);
        return std::erfc(x) * std::exp(hi) * (1.0 + lo);
    }
    if (x > 1e8)
        return kInvSqrtPi / x;
    return erfcx_cf(x);
}

ComplexValue erfc_scaled_complex(ComplexValue z)
{
    if (std::isnan(z.real()) || std::isnan(z.imag()))
        throw std::domain_error("erfc_scaled_complex: NaN argument");
    if (z.real() < -1e-12)
        throw std::domain_error("erfc_scaled_complex: Re z < 0 is outside the supported domain");
    if (z.imag() == 0.0)
        return erfcx(z.real());
    if (z.imag() < 0.0)
        return std::conj(erfc_scaled_complex(std::conj(z)));
    const double r = std::abs(z);
    if (r < 2.0)
        return erfcx_maclaurin(z);
    if (r >= 6.0)
        return erfcx_cf(z);
    return erfcx_laplace_integral(z);
}

double ei_pv(double x)
{
    if (std::isnan(x))
        throw std::domain_error("ei_pv: NaN argument");
    if (x == 0.0)
        throw std::domain_error("ei_pv: logarithmic singularity at 0");
    if (x < -1.0) {
        // Ei(x) = -E1(-x), E1 by continued fraction
        return -std::exp(x) * e1_scaled(ComplexValue(-x, 0.0)).real();
    }
    if (x <= 40.0) {
        double term = 1.0, sum = 0.0;
        for (int k = 1; k < 500; ++k) {
            term *= x / k;
            const double add = term / k;
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum))
                break;
        }
        return std::numbers::egamma + std::log(std::abs(x)) + sum;
    }
    // e^x/x sum k!/x^k, stopped at the smallest term
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double next = term * k / x;
        if (next > term || next < 1e-17)
            break;
        term = next;
        sum += term;
    }
    return std::exp(x) / x * sum;
}

ComplexValue e1_scaled(ComplexValue z)
{
    if (z.real() < 0.0)
        throw std::domain_error("e1_scaled: Re z < 0");
    if (z == ComplexValue(0.0))
        throw std::domain_error("e1_scaled: logarithmic singularity at 0");
    if (std::abs(z) < 2.5) {
        ComplexValue term = 1.0, sum = 0.0;
        for (int k = 1; k < 200; ++k) {
            term *= -z / double(k);
            const ComplexValue add = term / double(k);
            sum += add;
            if (std::abs(add) < 1e-17 * std::abs(sum))
                break;
        }
        const ComplexValue e1 = -std::numbers::egamma - std::log(z) - sum;
        return std::exp(z) * e1;
    }
    // 1/(z+1 - 1/(z+3 - 4/(z+5 - ...))), modified Lentz
    ComplexValue b = z + 1.0;
    ComplexValue c = 1.0 / kTiny;
    ComplexValue d = 1.0 / b;
    ComplexValue h = d;
    for (int k = 1; k < 20000; ++k) {
        const double a = -double(k) * double(k);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const ComplexValue delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 0.5 * kEps)
            return h;
    }
    throw std::runtime_error("e1_scaled continued fraction did not converge");
}

double laguerre1(int m, double x)
{
    if (m < 0)
        return 0.0;
    double prev = 1.0;
    if (m == 0)
        return prev;
    double cur = 2.0 - x;
    // (k+1) L_{k+1} = (2k + 2 - x) L_k - (k + 1) L_{k-1}   (alpha = 1)
    for (int k = 1; k < m; ++k) {
        const double next = ((2.0 * k + 2.0 - x) * cur - (k + 1.0) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double laguerre(int n, double x)
{
    if (n < 0)
        return 0.0;
    double prev = 1.0;
    if (n == 0)
        return prev;
    double cur = 1.0 - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace robin
