// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/interval.hpp"

#include "robin/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <tuple>

namespace robin {

namespace {

using Poly = std::vector<Rational>;

int parity_sign(int n) { return n % 2 == 0 ? 1 : -1; }

Rational binomial(int n, int k)
{
    if (k < 0 || k > n)
        return Rational(0);
    boost::multiprecision::cpp_int num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return Rational(num, den);
}

Rational factorial(int n)
{
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return Rational(f);
}

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

Pulse make_impulse(Orientation o, int offset, int sign, int reflections)
{
    Pulse p;
    p.kind = PulseKind::impulse;
    p.sign = sign;
    p.weight = 0.5;
    p.offset = offset;
    p.orientation = o;
    p.reflections = reflections;
    return p;
}

Pulse make_tail(Orientation o, int offset, int sign, int order, double kappa, int reflections)
{
    Pulse p;
    p.kind = PulseKind::tail;
    p.sign = sign;
    p.weight = kappa;
    p.offset = offset;
    p.orientation = o;
    p.laguerre_order = order;
    p.decay = kappa;
    p.reflections = reflections;
    return p;
}

// One closed-form family member: impulse plus its tail (if any).
void push_member(std::vector<Pulse>& out, Orientation o, int offset, int sign, int reflections,
                 double kappa)
{
    out.push_back(make_impulse(o, offset, sign, reflections));
    if (reflections >= 1 && kappa != 0.0)
        out.push_back(make_tail(o, offset, sign, reflections - 1, kappa, reflections));
}

double tail_value(const Pulse& p, double a)
{
    const double th = step(a);
    if (th == 0.0)
        return 0.0;
    const double k = p.decay;
    return -p.sign * k * laguerre1(p.laguerre_order, 2.0 * k * a) * std::exp(-k * a) * th;
}

// Antiderivative coefficients: int P(z) e^{-z} dz = -e^{-z} Q(z), Q = sum_k P^{(k)}.
std::vector<double> exp_antiderivative(const Poly& P)
{
    const int deg = static_cast<int>(P.size()) - 1;
    std::vector<double> Q(P.size(), 0.0);
    for (int i = 0; i <= deg; ++i) {
        Rational acc = 0;
        Rational fall = 1;  // (i+k)!/i!
        for (int k = 0; i + k <= deg; ++k) {
            if (k > 0)
                fall *= i + k;
            acc += P[i + k] * fall;
        }
        Q[i] = to_double(acc);
    }
    return Q;
}

double horner(const std::vector<double>& c, double z)
{
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        s = s * z + *it;
    return s;
}

// int_{z0}^{z1} P(z) e^{-z} dz over the part with z >= 0.
double exp_poly_integral(const std::vector<double>& Q, double z0, double z1)
{
    z0 = std::max(z0, 0.0);
    if (z1 <= z0)
        return 0.0;
    auto F = [&](double z) { return -std::exp(-z) * horner(Q, z); };
    return F(z1) - F(z0);
}

// c(n, m) for n <= 12 as doubles.
constexpr int kExactC = 12;
const std::array<std::array<double, kExactC + 1>, kExactC + 1>& c_table()
{
    static const auto table = [] {
        std::array<std::array<double, kExactC + 1>, kExactC + 1> t{};
        for (int n = 1; n <= kExactC; ++n)
            for (int m = 1; m <= n; ++m)
                t[n][m] = to_double(coeff_c(n, m));
        return t;
    }();
    return table;
}

}  // namespace

int x_sign(Orientation o)
{
    return (o == Orientation::plus_minus || o == Orientation::plus_plus) ? 1 : -1;
}

int y_sign(Orientation o)
{
    return (o == Orientation::minus_plus || o == Orientation::plus_plus) ? 1 : -1;
}

bool moves_left(Orientation o) { return x_sign(o) > 0; }

double pulse_argument(const Pulse& p, double t, double x, double y, double L)
{
    return t + x_sign(p.orientation) * x + y_sign(p.orientation) * y - p.offset * L;
}

double pulse_activation_time(const Pulse& p, double L, double y)
{
    // arg = 0  <=>  t = offset L - sx x - sy y, minimized over x in [0, L]
    const double x = x_sign(p.orientation) > 0 ? L : 0.0;
    const double t = p.offset * L - x_sign(p.orientation) * x - y_sign(p.orientation) * y;
    return std::max(0.0, t);
}

std::vector<Rational> neg_laguerre1_2z_coeffs(int m)
{
    if (m < 0)
        return {};
    // L^1_k(x) as polynomials in x via (k+1) L_{k+1} = (2k+2-x) L_k - (k+1) L_{k-1}
    Poly prev{Rational(1)};
    Poly cur{Rational(2), Rational(-1)};
    if (m == 0)
        cur = prev;
    for (int k = 1; k < m; ++k) {
        Poly next(cur.size() + 1, Rational(0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
            next[i] += Rational(2 * k + 2) * cur[i];
            next[i + 1] -= cur[i];
        }
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= Rational(k + 1) * prev[i];
        for (auto& c : next)
            c /= (k + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    // substitute x = 2z and negate
    Rational scale = 1;
    for (auto& c : cur) {
        c = -c * scale;
        scale *= 2;
    }
    return cur;
}

std::vector<Pulse> robin_reflect(const std::vector<Pulse>& front, RobinParam kp)
{
    if (front.empty())
        return {};
    const Orientation o = front.front().orientation;
    const int offset = front.front().offset;
    if (!moves_left(o))
        throw pulse_algebra_error("robin_reflect: front is not moving toward x = 0");
    Rational w = 0;
    Poly q;
    int reflections = 0;
    for (const auto& p : front) {
        if (p.orientation != o || p.offset != offset)
            throw pulse_algebra_error("robin_reflect: records belong to different fronts");
        reflections = std::max(reflections, p.reflections);
        if (p.kind == PulseKind::impulse) {
            w += Rational(p.sign) * Rational(p.weight);
        } else {
            if (p.decay != kp.kappa)
                throw pulse_algebra_error("robin_reflect: tail decay differs from kappa");
            Poly c = neg_laguerre1_2z_coeffs(p.laguerre_order);
            if (q.size() < c.size())
                q.resize(c.size(), Rational(0));
            for (std::size_t k = 0; k < c.size(); ++k)
                q[k] += Rational(p.sign) * c[k];
        }
    }
    const Orientation out = o == Orientation::plus_minus ? Orientation::minus_minus
                                                         : Orientation::minus_plus;
    std::vector<Pulse> result;
    if (w != 0) {
        if (abs(w) != Rational(1, 2))
            throw pulse_algebra_error("robin_reflect: impulse weight is not 1/2");
        result.push_back(make_impulse(out, offset, w > 0 ? 1 : -1, reflections + 1));
    }
    if (kp.kappa == 0.0) {
        if (!q.empty())
            throw pulse_algebra_error("robin_reflect: tail present with kappa = 0");
        return result;
    }
    // q -> q - 2w - 2 int_0 q   (polynomials in z = kappa a)
    Poly r(q.size() + 1, Rational(0));
    for (std::size_t k = 0; k < q.size(); ++k) {
        r[k] += q[k];
        r[k + 1] -= 2 * q[k] / Rational(static_cast<long>(k + 1));
    }
    r[0] -= 2 * w;
    trim(r);
    if (r.empty())
        return result;
    const int order = static_cast<int>(r.size()) - 1;
    const Poly ref = neg_laguerre1_2z_coeffs(order);
    const Rational s = r.back() / ref.back();
    if (abs(s) != 1)
        throw pulse_algebra_error("robin_reflect: reflected tail is not a Laguerre tail");
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] != s * ref[k])
            throw pulse_algebra_error("robin_reflect: reflected tail is not a Laguerre tail");
    result.push_back(make_tail(out, offset, s > 0 ? 1 : -1, order, kp.kappa, reflections + 1));
    return result;
}

std::vector<Pulse> dirichlet_reflect(const std::vector<Pulse>& front)
{
    std::vector<Pulse> out;
    for (const auto& p : front) {
        if (moves_left(p.orientation))
            throw pulse_algebra_error("dirichlet_reflect: front is not moving toward x = L");
        Pulse q = p;
        q.orientation = p.orientation == Orientation::minus_minus ? Orientation::plus_minus
                                                                  : Orientation::plus_plus;
        q.offset = p.offset + 2;
        q.sign = -p.sign;
        out.push_back(q);
    }
    return out;
}

PulseTrain build_kernel_by_reflection(double t_max, double L, RobinParam kp, double y)
{
    PulseTrain train;
    train.t_max = t_max;
    train.L = L;
    train.y = y;
    train.kp = kp;
    std::deque<std::vector<Pulse>> queue;
    queue.push_back({make_impulse(Orientation::plus_minus, 0, 1, 0)});
    queue.push_back({make_impulse(Orientation::minus_plus, 0, 1, 0)});
    while (!queue.empty()) {
        auto front = std::move(queue.front());
        queue.pop_front();
        if (front.empty())
            continue;
        train.pulses.insert(train.pulses.end(), front.begin(), front.end());
        auto next = moves_left(front.front().orientation) ? robin_reflect(front, kp)
                                                          : dirichlet_reflect(front);
        if (!next.empty() && pulse_activation_time(next.front(), L, y) <= t_max)
            queue.push_back(std::move(next));
    }
    return train;
}

PulseTrain kernel_pulses_closed_form(double t_max, double L, RobinParam kp, double y)
{
    PulseTrain train;
    train.t_max = t_max;
    train.L = L;
    train.y = y;
    train.kp = kp;
    const double k = kp.kappa;
    auto active = [&](Orientation o, int offset) {
        return pulse_activation_time(make_impulse(o, offset, 1, 0), L, y) <= t_max;
    };
    const int n_top = static_cast<int>(std::ceil(t_max / (2.0 * L))) + 2;
    for (int n = 0; n <= n_top; ++n) {
        const int s = parity_sign(n);
        if (active(Orientation::plus_minus, 2 * n))
            push_member(train.pulses, Orientation::plus_minus, 2 * n, s, n, k);
        if (active(Orientation::minus_plus, 2 * n))
            push_member(train.pulses, Orientation::minus_plus, 2 * n, s, n, k);
        if (active(Orientation::plus_plus, 2 * (n + 1)))
            push_member(train.pulses, Orientation::plus_plus, 2 * (n + 1), -s, n, k);
        if (n >= 1 && active(Orientation::minus_minus, 2 * (n - 1)))
            push_member(train.pulses, Orientation::minus_minus, 2 * (n - 1), -s, n, k);
    }
    return train;
}

bool same_pulse_multiset(const PulseTrain& a, const PulseTrain& b, double tol)
{
    if (a.pulses.size() != b.pulses.size())
        return false;
    auto key = [](const Pulse& p) {
        return std::make_tuple(static_cast<int>(p.kind), static_cast<int>(p.orientation),
                               p.offset, p.laguerre_order, p.sign, p.reflections);
    };
    auto sorted = [&](std::vector<Pulse> v) {
        std::sort(v.begin(), v.end(),
                  [&](const Pulse& x, const Pulse& y) { return key(x) < key(y); });
        return v;
    };
    const auto sa = sorted(a.pulses), sb = sorted(b.pulses);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (key(sa[i]) != key(sb[i]))
            return false;
        if (std::abs(sa[i].weight - sb[i].weight) > tol || std::abs(sa[i].decay - sb[i].decay) > tol)
            return false;
    }
    return true;
}

KernelValue evaluate_pulse_train(const PulseTrain& train, double t, double x)
{
    KernelValue kv;
    std::map<double, double> imp;
    for (const auto& p : train.pulses) {
        const double a = pulse_argument(p, t, x, train.y, train.L);
        if (p.kind == PulseKind::impulse) {
            const double tau = t - a;
            if (tau >= 0.0 && tau <= t)
                imp[tau] += p.sign * p.weight;
        } else {
            kv.regular += tail_value(p, a);
        }
    }
    for (auto [tau, w] : imp)
        kv.impulses.push_back({tau, w});
    return kv;
}

int required_nmax(double t, double L) { return static_cast<int>(std::ceil(t / (2.0 * L))) + 1; }

KernelValue wave_kernel_interval(double t, double x, double y, double L, RobinParam kp, int n_max)
{
    if (!(t >= 0.0))
        throw std::domain_error("wave_kernel_interval: requires t >= 0");
    if (!(L > 0.0) || !(x > 0.0 && x < L) || !(y > 0.0 && y < L))
        throw std::domain_error("wave_kernel_interval: requires 0 < x, y < L");
    if (n_max < required_nmax(t, L))
        throw horizon_error("wave_kernel_interval: n_max below ceil(t/2L) + 1");
    PulseTrain train;
    train.L = L;
    train.y = y;
    train.kp = kp;
    train.t_max = t;
    for (int n = 0; n <= n_max; ++n) {
        const int s = parity_sign(n);
        push_member(train.pulses, Orientation::plus_minus, 2 * n, s, n, kp.kappa);
        push_member(train.pulses, Orientation::minus_plus, 2 * n, s, n, kp.kappa);
        push_member(train.pulses, Orientation::plus_plus, 2 * (n + 1), -s, n, kp.kappa);
        if (n >= 1)
            push_member(train.pulses, Orientation::minus_minus, 2 * (n - 1), -s, n, kp.kappa);
    }
    return evaluate_pulse_train(train, t, x);
}

double trace_P(double t, double L, RobinParam kp, int n_max)
{
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double tau = t - 2.0 * n * L;
        const double th = step(tau);
        if (th == 0.0)
            break;
        sum += parity_sign(n) * laguerre1(n - 1, 2.0 * k * tau) * std::exp(-k * tau) * th;
    }
    return -2.0 * k * L * sum;
}

double trace_A(double t, RobinParam kp) { return 0.5 * std::expm1(-kp.kappa * t); }

double trace_B(double t, double L, RobinParam kp, int n_max, BRoute route)
{
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    const auto& ct = c_table();
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        const double tau = t - 2.0 * n * L;
        if (tau <= 0.0)
            break;  // every term carries tau^m, m >= 1
        const double z = k * tau;
        const double ez = std::exp(-z);
        const bool use_coeffs = route == BRoute::coefficients ||
                                (route == BRoute::automatic && n <= kExactC);
        if (use_coeffs) {
            double inner = 0.0, pw = 1.0;
            for (int m = 1; m <= n; ++m) {
                pw *= z / m;
                const double c = n <= kExactC ? ct[n][m] : to_double(coeff_c(n, m));
                inner += c * pw;
            }
            sum += inner * ez;
        } else {
            // closed form of the inner sum via plain Laguerre polynomials
            const double inner =
                0.5 * parity_sign(n - 1) * (laguerre(n - 1, 2.0 * z) - laguerre(n, 2.0 * z));
            sum += inner * ez;
        }
    }
    return sum;
}

TraceDecomposition wave_trace_interval(double t, double L, RobinParam kp, int n_max)
{
    if (!(t > 0.0))
        throw std::domain_error("wave_trace_interval: requires t > 0");
    if (n_max < required_nmax(t, L))
        throw horizon_error("wave_trace_interval: n_max below ceil(t/2L) + 1");
    TraceDecomposition tr;
    for (int n = 0; 2.0 * n * L <= t; ++n)
        tr.N.push_back({2.0 * n * L, L * parity_sign(n)});
    tr.P = trace_P(t, L, kp, n_max);
    tr.A = trace_A(t, kp);
    tr.B = trace_B(t, L, kp, n_max);
    return tr;
}

Rational coeff_c(int n, int m)
{
    if (n < 1 || m < 1 || m > n)
        throw std::domain_error("coeff_c: requires 1 <= m <= n");
    Rational sum = 0;
    boost::multiprecision::cpp_int pow2 = 1;
    pow2 <<= (m - 1);
    for (int j = m; j <= n; ++j) {
        sum += Rational(parity_sign(n - j)) * Rational(pow2) * Rational(2 * n - j, n) *
               binomial(n, j);
        pow2 <<= 1;
    }
    return sum;
}

std::vector<Rational> periodic_tail_trace_coeffs(int n)
{
    if (n < 1)
        return {};
    // y is irrelevant on the diagonal; any interior value will do
    const double L = 1.0;
    const PulseTrain train = build_kernel_by_reflection(2.0 * n * L + L, L, RobinParam{1.0}, 0.5 * L);
    Poly sum;
    for (const auto& p : train.pulses) {
        if (p.kind != PulseKind::tail || p.offset != 2 * n)
            continue;
        if (p.orientation != Orientation::plus_minus && p.orientation != Orientation::minus_plus)
            continue;
        const Poly c = neg_laguerre1_2z_coeffs(p.laguerre_order);
        if (sum.size() < c.size())
            sum.resize(c.size(), Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k)
            sum[k] += Rational(p.sign) * c[k];
    }
    return sum;
}

std::vector<Rational> trace_P_coeffs(int n)
{
    if (n < 1)
        return {};
    // -2 (-1)^n L^1_{n-1}(2z),  L^1_{n-1}(x) = sum_{j=1}^n C(n,j) (-x)^{j-1}/(j-1)!
    Poly r(n);
    for (int j = 1; j <= n; ++j) {
        Rational c = binomial(n, j) / factorial(j - 1);
        Rational pw = 1;
        for (int i = 0; i < j - 1; ++i)
            pw *= -2;
        r[j - 1] = Rational(-2 * parity_sign(n)) * c * pw;
    }
    return r;
}

double bounce_trace_by_pulses(double t, double L, RobinParam kp, int n_max)
{
    const double k = kp.kappa;
    if (k == 0.0)
        return 0.0;
    double sum = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        // tails of order n-1 on the two bounce families
        const std::vector<double> Q = exp_antiderivative(neg_laguerre1_2z_coeffs(n - 1));
        // t + x + y - 2(n+1)L family (index n), sign (-1)^{n+1}
        sum += 0.5 * -parity_sign(n) *
               exp_poly_integral(Q, k * (t - 2.0 * (n + 1) * L), k * (t - 2.0 * n * L));
        // t - x - y - 2(n-1)L family (index n), sign (-1)^{n-1}
        sum += 0.5 * parity_sign(n - 1) *
               exp_poly_integral(Q, k * (t - 2.0 * n * L), k * (t - 2.0 * (n - 1) * L));
    }
    return sum;
}

KernelValue neumann_trace(double t, double L, BoundaryPair variant)
{
    KernelValue kv;
    const int dir = t >= 0.0 ? 1 : -1;
    for (int n = 0; std::abs(2.0 * n * L) <= std::abs(t); ++n) {
        const int idx = dir * n;
        const double w = variant == BoundaryPair::ND ? L * parity_sign(idx) : L;
        kv.impulses.push_back({2.0 * idx * L, w});
    }
    kv.regular = variant == BoundaryPair::NN ? 0.5 : variant == BoundaryPair::DD ? -0.5 : 0.0;
    return kv;
}

double neumann_bounce_sum(double t, double L, int n_terms)
{
    auto inside = [](double v, double a, double b) { return (v > a && v < b) ? 1.0 : 0.0; };
    double sum = 0.0;
    for (int n = -n_terms; n <= n_terms; ++n) {
        const double s = parity_sign(n < 0 ? -n : n);
        sum += s * (-0.25 * inside(-t / 2 + (n + 1) * L, 0.0, L) -
                    0.25 * inside(t / 2 - (n - 1) * L, 0.0, L));
    }
    return sum;
}

}  // namespace robin
