// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/spectral.hpp"

#include "robin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace robin {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct TagName {
    DensityTag tag;
    const char* name;
};

constexpr TagName kTagNames[] = {
    {DensityTag::rho_N, "rho_N"},
    {DensityTag::rho_av, "rho_av"},
    {DensityTag::rho_per, "rho_per"},
    {DensityTag::rho_bdry, "rho_bdry"},
    {DensityTag::bou_naive, "bou_naive"},
    {DensityTag::bou_pretrace, "bou_pretrace"},
    {DensityTag::bou_posttrace, "bou_posttrace"},
    {DensityTag::pois_total, "pois_total"},
    {DensityTag::pois_per, "pois_per"},
    {DensityTag::pois_bou, "pois_bou"},
    {DensityTag::pois_bdry, "pois_bdry"},
};

template <class Real>
struct Cx {
    Real re, im;
};

template <class Real>
Cx<Real> mul(const Cx<Real>& a, const Cx<Real>& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class Real>
Real pi_value()
{
    return boost::math::constants::pi<Real>();
}

void validate(const DensityVariant& v)
{
    if (v.n_max < 1)
        throw std::invalid_argument("density: n_max must be >= 1");
    if (!(v.L > 0.0))
        throw std::invalid_argument("density: L must be positive");
    if (!(v.kappa >= 0.0))
        throw std::invalid_argument("density: kappa must be >= 0");
}

// Terms of the partial sum, ascending n. E = e^{2iLw}, F = e^{i phi},
// phi = atan(w/kappa), r = sqrt(w^2 + kappa^2).
template <class Real>
std::vector<Real> terms_impl(const DensityVariant& v, const Real& w)
{
    using std::atan2;
    using std::cos;
    using std::sin;
    using std::sqrt;

    validate(v);
    const Real L = v.L;
    const Real k = v.kappa;
    const Real pi = pi_value<Real>();
    const int N = v.n_max;
    std::vector<Real> out(static_cast<std::size_t>(N) + 1, Real(0));

    const Real r2 = w * w + k * k;
    const Real r = sqrt(r2);
    const Cx<Real> F{k / r, w / r};
    const Cx<Real> E{cos(2 * L * w), sin(2 * L * w)};
    const Cx<Real> H{cos(L * w), sin(L * w)};

    auto par = [](int n) { return n % 2 == 0 ? 1 : -1; };

    switch (v.tag) {
    case DensityTag::rho_av:
        out[0] = k / (pi * r2);
        return out;
    case DensityTag::rho_N: {
        Cx<Real> En{Real(1), Real(0)};
        out[0] = L / pi;
        for (int n = 1; n <= N; ++n) {
            En = mul(En, E);
            out[n] = 2 * L / pi * par(n) * En.re;
        }
        return out;
    }
    case DensityTag::pois_per:
    case DensityTag::pois_bou:
    case DensityTag::pois_bdry:
    case DensityTag::pois_total: {
        const Real per = L / pi;
        const Real bou = k / (pi * r2);
        const Real pre = v.tag == DensityTag::pois_per   ? per
                         : v.tag == DensityTag::pois_total ? per + bou
                                                           : bou;
        const Cx<Real> step = mul(E, mul(F, F));
        Cx<Real> Sn{Real(1), Real(0)};
        out[0] = v.tag == DensityTag::pois_bdry ? Real(0) : pre;
        for (int n = 1; n <= N; ++n) {
            Sn = mul(Sn, step);
            out[n] = 2 * pre * Sn.re;
        }
        return out;
    }
    default:
        break;
    }

    // j-sum variants. P[j] = (kappa/r)^j F^j for j = 0..N+1.
    std::vector<Cx<Real>> P(static_cast<std::size_t>(N) + 2);
    const Cx<Real> q{F.re * k / r, F.im * k / r};
    P[0] = {Real(1), Real(0)};
    for (int j = 1; j <= N + 1; ++j)
        P[j] = mul(P[j - 1], q);

    // Binomial rows built by Pascal's rule in Real.
    std::vector<Real> row{Real(1)};  // row n-1 at loop start
    std::vector<Real> next;
    Cx<Real> En{Real(1), Real(0)};

    for (int n = 0; n <= N; ++n) {
        // row holds C(n, .) after this block
        if (n > 0) {
            next.assign(static_cast<std::size_t>(n) + 1, Real(0));
            next[0] = 1;
            next[n] = 1;
            for (int j = 1; j < n; ++j)
                next[j] = row[j - 1] + row[j];
            // keep C(n-1, .) for rho_bdry before overwriting
        }
        const std::vector<Real>& prev = row;  // C(n-1, .) when n > 0
        const std::vector<Real>& cur = n > 0 ? next : row;
        if (n > 0)
            En = mul(En, E);

        Real s = 0;
        switch (v.tag) {
        case DensityTag::rho_per:
            if (n >= 1) {
                Real m2 = 1;
                for (int j = 1; j <= n; ++j) {
                    m2 *= -2;
                    const Cx<Real> z = mul(En, P[j]);
                    s += cur[j] * m2 * z.re;
                }
                s *= 2 * L / pi * par(n);
            }
            break;
        case DensityTag::rho_bdry:
            // c(n, j-1) kappa^{j-1} r^{-j} = (-1)^{n-j+1} 2^{j-2} C(n-1, j-2) (kappa/r)^{j-1} / r
            if (n >= 1) {
                Real p2 = 1;
                for (int j = 2; j <= n + 1; ++j) {
                    const Cx<Real> z = mul(En, mul(P[j - 1], F));
                    s += par(n - j + 1) * p2 * prev[j - 2] * z.re;
                    p2 *= 2;
                }
                s *= 2 / (pi * r);
            }
            break;
        case DensityTag::bou_naive:
            if (n >= 1) {
                Real m2 = 1;
                for (int j = 1; j <= n; ++j) {
                    m2 *= -2;
                    const Cx<Real> z = mul(En, P[j]);
                    s += cur[j] * m2 * z.re;
                }
                s *= par(n - 1) * sin(2 * L * w) / (pi * w);
            }
            break;
        case DensityTag::bou_pretrace: {
            const Cx<Real> Hn = mul(En, H);
            Real m2 = 1;
            for (int j = 1; j <= n + 1; ++j) {
                m2 *= -2;
                const Cx<Real> z = mul(Hn, P[j]);
                s += cur[j - 1] * m2 * z.re;
            }
            s *= par(n) * sin(L * w) / (pi * w);
            break;
        }
        case DensityTag::bou_posttrace: {
            Real m2 = 1;
            for (int j = 1; j <= n + 1; ++j) {
                m2 *= -2;
                const Real f = n == 0 ? Real(1) : Real(2 * n - j + 1) / n;
                const Cx<Real> z = mul(En, P[j]);
                s += cur[j - 1] * f * m2 * z.im;
            }
            s *= Real(par(n - 1)) / (2 * pi * w);
            break;
        }
        default:
            break;
        }
        out[n] = s;
        if (n > 0)
            row.swap(next);
    }
    return out;
}

template <class Real>
Real sum_terms(const std::vector<Real>& t)
{
    Real s = 0;
    for (const auto& x : t)
        s += x;
    return s;
}

double eval_double(const DensityVariant& v, double w) { return sum_terms(terms_impl<double>(v, w)); }

double eval_extended(const DensityVariant& v, double w)
{
    return sum_terms(terms_impl<Extended>(v, Extended(w))).convert_to<double>();
}

bool wants_extended(const DensityVariant& v, double w)
{
    if (!has_j_sums(v.tag))
        return false;
    if (w < 0.2 * v.kappa)
        return true;
    const double r = std::hypot(w, v.kappa);
    const double growth = v.n_max * std::log1p(2.0 * v.kappa / r);
    return growth > std::log(1e5);
}

// Right limit at omega = 0.
constexpr double kZeroOmega = 1e-30;

}  // namespace

EigenSpectrum eig_roots(double L, RobinParam kp, int k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("eig_roots: k_max must be >= 1");
    if (!(L > 0.0) || !(kp.kappa >= 0.0))
        throw std::invalid_argument("eig_roots: requires L > 0, kappa >= 0");
    const double kap = kp.kappa;
    EigenSpectrum s;
    s.L = L;
    s.kappa = kap;
    for (int k = 1; k <= k_max; ++k) {
        const double target = k * kPi;
        if (kap == 0.0) {
            s.omegas.push_back((k - 0.5) * kPi / L);
            s.residuals.push_back(0.0);
            s.newton_steps.push_back(0);
            continue;
        }
        auto f = [&](double w) { return L * w + std::atan2(w, kap) - target; };
        auto df = [&](double w) { return L + kap / (w * w + kap * kap); };
        double lo = (k - 0.5) * kPi / L, hi = k * kPi / L;
        while (hi - lo > 1e-3) {
            const double mid = 0.5 * (lo + hi);
            (f(mid) < 0.0 ? lo : hi) = mid;
        }
        double w = 0.5 * (lo + hi);
        int steps = 0;
        for (; steps < 60; ++steps) {
            const double fw = f(w);
            if (fw == 0.0)
                break;
            (fw < 0.0 ? lo : hi) = w;
            double nw = w - fw / df(w);
            if (!(nw > lo && nw < hi))
                nw = 0.5 * (lo + hi);
            if (std::abs(nw - w) <= 4.0 * std::numeric_limits<double>::epsilon() * w) {
                w = nw;
                ++steps;
                break;
            }
            w = nw;
        }
        s.omegas.push_back(w);
        s.residuals.push_back(f(w));
        s.newton_steps.push_back(steps);
    }
    return s;
}

double eig_perturbative(int n, int corrections)
{
    if (n < 2)
        throw std::invalid_argument("eig_perturbative: n must be >= 2");
    if (corrections < 0 || corrections > 4)
        throw std::invalid_argument("eig_perturbative: corrections in 0..4");
    const double a = (n - 0.5) * kPi;
    const double c[] = {1.0, -4.0 / 3.0, 53.0 / 15.0, -1226.0 / 105.0};
    double w = a, p = a;  // p = a^{2i+1}
    for (int i = 0; i < corrections; ++i) {
        w += c[i] / p;
        p *= a * a;
    }
    return w;
}

const std::vector<DensityTag>& all_density_tags()
{
    static const std::vector<DensityTag> tags = [] {
        std::vector<DensityTag> t;
        for (const auto& e : kTagNames)
            t.push_back(e.tag);
        return t;
    }();
    return tags;
}

std::string to_string(DensityTag tag)
{
    for (const auto& e : kTagNames)
        if (e.tag == tag)
            return e.name;
    return "unknown";
}

std::optional<DensityTag> parse_density_tag(const std::string& name)
{
    for (const auto& e : kTagNames)
        if (name == e.name)
            return e.tag;
    return std::nullopt;
}

bool has_j_sums(DensityTag tag)
{
    switch (tag) {
    case DensityTag::rho_per:
    case DensityTag::rho_bdry:
    case DensityTag::bou_naive:
    case DensityTag::bou_pretrace:
    case DensityTag::bou_posttrace:
        return true;
    default:
        return false;
    }
}

DeltaLedger delta_ledger(const DensityVariant& v)
{
    DeltaLedger d;
    if ((v.tag == DensityTag::rho_av && v.kappa != 0.0) || v.tag == DensityTag::pois_total)
        d.explicit_delta_weight_at_zero = -0.5;
    return d;
}

std::vector<double> density_terms(const DensityVariant& v, double omega)
{
    return terms_impl<double>(v, omega);
}

std::vector<Extended> density_terms(const DensityVariant& v, const Extended& omega)
{
    return terms_impl<Extended>(v, omega);
}

double density_eval(const DensityVariant& v, double omega, Precision p)
{
    if (!(omega >= 0.0))
        throw std::domain_error("density_eval: omega must be >= 0");
    if (omega == 0.0) {
        if (v.tag == DensityTag::rho_N || v.tag == DensityTag::pois_per)
            return eval_double(v, 0.0);
        return eval_extended(v, kZeroOmega);
    }
    switch (p) {
    case Precision::double_only:
        return eval_double(v, omega);
    case Precision::extended:
        return eval_extended(v, omega);
    case Precision::checked: {
        const DensityCheck c = density_eval_checked(v, omega);
        if (c.unstable)
            throw std::runtime_error("density_eval: double and extended paths diverge at omega = " +
                                     std::to_string(omega));
        return c.extended_path;
    }
    case Precision::automatic:
        break;
    }
    return wants_extended(v, omega) ? eval_extended(v, omega) : eval_double(v, omega);
}

DensityCheck density_eval_checked(const DensityVariant& v, double omega, double tol)
{
    DensityCheck c;
    c.double_path = eval_double(v, omega);
    c.extended_path = eval_extended(v, omega);
    const double diff = std::abs(c.double_path - c.extended_path);
    c.unstable = !(diff <= tol * std::max(1.0, std::abs(c.extended_path)));
    return c;
}

double density_eval_sum(const std::vector<DensityVariant>& vs, double omega, Precision p)
{
    double s = 0.0;
    for (const auto& v : vs)
        s += density_eval(v, omega, p);
    return s;
}

double integrate_density(const std::vector<DensityVariant>& vs, double a, double b,
                         const std::function<double(double)>& phi)
{
    if (vs.empty())
        return 0.0;
    if (!(b > a) || !(a >= 0.0))
        throw std::invalid_argument("integrate_density: requires 0 <= a < b");
    double freq = 0.0;
    for (const auto& v : vs)
        freq = std::max(freq, 2.0 * v.n_max * v.L);
    // one panel per period of the fastest cosine
    const double h = std::min(b - a, 2.0 * kPi / freq);
    QuadOptions opt;
    opt.abs_tol = 1e-8;
    opt.rel_tol = 1e-8;
    opt.target = 1e-10;
    auto f = [&](double w) {
        const double d = density_eval_sum(vs, w);
        return phi ? d * phi(w) : d;
    };
    return integrate(f, panels(a, b, h), opt);
}

double mollified_density(const std::vector<DensityVariant>& vs, double omega, double sigma)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("mollified_density: sigma must be positive");
    auto g = [&](double u) {
        return std::exp(-0.5 * u * u / (sigma * sigma)) / (sigma * std::sqrt(2.0 * kPi));
    };
    const double reach = 9.0 * sigma;
    const double a = std::max(0.0, omega - reach);
    double sum = integrate_density(vs, a, omega + reach,
                                   [&](double w) { return g(omega - w) + g(omega + w); });
    if (a > 0.0 && a < 2.0 * reach)  // reflected kernel g(omega + w) on [0, a)
        sum += integrate_density(vs, 0.0, a, [&](double w) { return g(omega + w); });
    double delta = 0.0;
    for (const auto& v : vs)
        delta += delta_ledger(v).explicit_delta_weight_at_zero;
    return sum + 2.0 * delta * g(omega);
}

double staircase_av(double omega, RobinParam kp)
{
    if (kp.kappa == 0.0)
        throw std::domain_error("staircase_av: kappa must be nonzero");
    return std::atan(omega / kp.kappa) / kPi - 0.5;
}

double density_av_dim(double omega, RobinParam kp, int d, double measure)
{
    const double k = kp.kappa;
    switch (d) {
    case 1:
        return measure * k / (kPi * (omega * omega + k * k));
    case 2:
        return measure / (2.0 * kPi) * (omega / std::hypot(omega, k) - 1.0);
    case 3:
        return measure * omega / (2.0 * kPi * kPi) * (std::atan2(omega, k) - kPi / 2.0);
    default:
        throw std::invalid_argument("density_av_dim: d must be 1, 2 or 3");
    }
}

double cosine_transform_term(int j, double delta_phase, RobinParam kp, double omega)
{
    if (j < 1)
        throw std::invalid_argument("cosine_transform_term: j must be >= 1");
    const double r = std::hypot(omega, kp.kappa);
    const double phi = std::atan2(omega, kp.kappa);
    return std::tgamma(static_cast<double>(j)) * std::pow(r, -j) * std::cos(j * phi + delta_phase);
}

double peak_strength(const DensityVariant& v, int k, double halfwidth)
{
    validate(v);
    if (k < 1 || !(halfwidth > 0.0))
        throw std::invalid_argument("peak_strength: requires k >= 1, halfwidth > 0");
    const EigenSpectrum s = eig_roots(v.L, RobinParam{v.kappa}, k + 1);
    const double wk = s.omegas[k - 1];
    const double below = k > 1 ? s.omegas[k - 2] : 0.0;
    const double above = s.omegas[k];
    if (!(halfwidth < 0.5 * (wk - below)) || !(halfwidth < 0.5 * (above - wk)))
        throw std::invalid_argument("peak_strength: halfwidth exceeds half the eigenvalue gap");
    return integrate_density({v}, wk - halfwidth, wk + halfwidth);
}

std::vector<IdentityResult> termwise_identity_check(int n, const std::vector<double>& omega_grid,
                                                    double L, double kappa)
{
    if (n < 0 || n > 12)
        throw std::invalid_argument("termwise_identity_check: n must be in 0..12");
    auto term = [&](DensityTag tag, const Extended& w) {
        DensityVariant v{tag, L, kappa, std::max(n, 1)};
        return terms_impl<Extended>(v, w)[static_cast<std::size_t>(n)];
    };
    std::vector<IdentityResult> res = {
        {"pois_per vs rho_N+rho_per", n, 0.0},
        {"pois_bdry vs rho_bdry", n, 0.0},
        {"pois_bou vs bou_posttrace", n, 0.0},
        {"bou_naive vs bou_pretrace", n, 0.0},
    };
    for (double wd : omega_grid) {
        const Extended w(wd);
        const Extended d[] = {
            term(DensityTag::pois_per, w) - term(DensityTag::rho_N, w) - term(DensityTag::rho_per, w),
            term(DensityTag::pois_bdry, w) - term(DensityTag::rho_bdry, w),
            term(DensityTag::pois_bou, w) - term(DensityTag::bou_posttrace, w),
            term(DensityTag::bou_naive, w) - term(DensityTag::bou_pretrace, w),
        };
        for (int i = 0; i < 4; ++i)
            res[i].max_abs_diff = std::max(res[i].max_abs_diff, std::abs(d[i].convert_to<double>()));
    }
    return res;
}

double telescoping_delta_demo(int N, const ScalarField1D& testfn)
{
    if (N < 1)
        throw std::invalid_argument("telescoping_delta_demo: N must be >= 1");
    double extent = testfn.extent;
    if (!std::isfinite(extent)) {
        if (testfn.decay == Decay::bounded)
            throw std::invalid_argument("telescoping_delta_demo: test function needs decay or finite extent");
        extent = 50.0;
    }
    auto f = [&](double w) { return std::sin(N * w) / w * testfn(w); };
    QuadOptions opt;
    opt.abs_tol = 1e-9;
    return integrate(f, panels(0.0, extent, kPi / N), opt);
}

double telescoping_partial_sum(int N, double omega, bool shifted)
{
    if (!(omega > 0.0))
        throw std::domain_error("telescoping_partial_sum: omega must be > 0");
    double s = 0.0;
    for (int n = 0; n < N; ++n) {
        if (shifted)
            s += (std::sin(n * omega) - std::sin(n * omega)) / omega;
        else
            s += (std::sin((n + 1) * omega) - std::sin(n * omega)) / omega;
    }
    return s;
}

}  // namespace robin
