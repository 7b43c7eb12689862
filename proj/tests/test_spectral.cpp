// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#include "robin/interval.hpp"
#include "robin/oracles.hpp"
#include "robin/quadrature.hpp"
#include "robin/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace robin;

namespace {

constexpr double kPi = 3.14159265358979323846;

// (2/pi) int_0^inf cos(w t) e^{-sigma^2 t^2/2} f(t) dt, truncated where the
// Gaussian is below e^{-40}; kinks at multiples of L.
template <class F>
double damped_cosine(double omega, double sigma, double L, F&& f)
{
    const double t_max = std::sqrt(80.0) / sigma;
    QuadOptions opt;
    opt.abs_tol = 1e-11;
    const double q = integrate(
        [&](double t) { return std::cos(omega * t) * std::exp(-0.5 * sigma * sigma * t * t) * f(t); },
        panels(0.0, t_max, 0.5 * L), opt);
    return 2.0 / kPi * q;
}

}  // namespace

TEST_CASE("eigenvalues: reference values and invariants")
{
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 4);
    const double ref[] = {2.0288, 4.9132, 7.9787, 11.0855};
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(s.omegas[k] - ref[k]) < 5e-5);

    for (double L : {0.5, 1.0, 3.0}) {
        for (double k : {0.01, 1.0, 40.0}) {
            const EigenSpectrum e = eig_roots(L, RobinParam{k}, 60);
            REQUIRE(e.omegas.size() == 60);
            for (int i = 1; i <= 60; ++i) {
                const double w = e.omegas[i - 1];
                CHECK(std::abs(L * w + std::atan(w / k) - i * kPi) < 1e-12 * i);
                CHECK(std::abs(e.residuals[i - 1]) < 1e-12 * i);
                CHECK(w > (i - 0.5) * kPi / L);
                CHECK(w < i * kPi / L);
            }
        }
    }

    const EigenSpectrum lo = eig_roots(1.0, RobinParam{1e-12}, 10);
    const EigenSpectrum hi = eig_roots(1.0, RobinParam{1e9}, 10);
    for (int i = 1; i <= 10; ++i) {
        CHECK(std::abs(lo.omegas[i - 1] - (i - 0.5) * kPi) < 1e-9);
        CHECK(std::abs(hi.omegas[i - 1] - i * kPi) < 1e-6);
    }
    CHECK(eig_roots(1.0, RobinParam{0.0}, 3).omegas[2] == 2.5 * kPi);
}

TEST_CASE("perturbative eigenvalues")
{
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 50);
    CHECK(std::abs(eig_perturbative(4) - 11.0855) < 5e-5);
    CHECK(std::abs(eig_perturbative(2) - s.omegas[1]) < 2e-4);
    for (int n = 5; n <= 50; ++n) {
        const double a = (n - 0.5) * kPi;
        CAPTURE(n);
        // first omitted term is 1226/(105 a^7), about 11.7/a^7; beyond n ~ 25
        // that is below the spacing of doubles near w_n
        const double ulp = std::numeric_limits<double>::epsilon() * s.omegas[n - 1];
        CHECK(std::abs(eig_perturbative(n) - s.omegas[n - 1]) < 12.0 / std::pow(a, 7) + 4.0 * ulp);
    }
    // each extra correction helps for large n
    for (int c = 0; c < 3; ++c)
        CHECK(std::abs(eig_perturbative(30, c + 1) - s.omegas[29]) <
              std::abs(eig_perturbative(30, c) - s.omegas[29]));
}

TEST_CASE("density tags round trip")
{
    CHECK(all_density_tags().size() == 11);
    for (DensityTag t : all_density_tags()) {
        const auto back = parse_density_tag(to_string(t));
        REQUIRE(back.has_value());
        CHECK(*back == t);
    }
    CHECK_FALSE(parse_density_tag("nope").has_value());
    CHECK(has_j_sums(DensityTag::rho_per));
    CHECK_FALSE(has_j_sums(DensityTag::pois_total));
}

TEST_CASE("averaged density and the Poisson ratio")
{
    const DensityVariant av{DensityTag::rho_av, 1.0, 1.0, 20};
    CHECK(density_eval(av, 1.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(delta_ledger(av).explicit_delta_weight_at_zero == -0.5);
    CHECK(delta_ledger({DensityTag::pois_total, 1.0, 1.0, 20}).explicit_delta_weight_at_zero == -0.5);
    CHECK(delta_ledger({DensityTag::rho_per, 1.0, 1.0, 20}).explicit_delta_weight_at_zero == 0.0);

    for (double L : {1.0, 2.0}) {
        for (double k : {0.5, 1.5}) {
            for (double w : {0.37, 2.0, 9.1}) {
                const double per = density_eval({DensityTag::pois_per, L, k, 8}, w);
                const double bou = density_eval({DensityTag::pois_bou, L, k, 8}, w);
                const double bdry = density_eval({DensityTag::pois_bdry, L, k, 8}, w);
                const double total = density_eval({DensityTag::pois_total, L, k, 8}, w);
                // bou/per = (1 - a)/a = (kappa/L)/(w^2 + kappa^2), a the share of pois_per;
                // bdry is bou without its n = 0 term
                const double ratio = (k / L) / (w * w + k * k);
                const double scale = std::abs(per) + std::abs(bou) + 1.0;
                CHECK(std::abs(bou - ratio * per) < 1e-12 * scale);
                CHECK(std::abs(bou - bdry - k / (kPi * (w * w + k * k))) < 1e-12 * scale);
                CHECK(std::abs(total - per - bou) < 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("staircase and dimensional densities")
{
    const RobinParam kp{1.3};
    CHECK(staircase_av(kp.kappa, kp) == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(std::abs(staircase_av(1e12, kp)) < 1e-12);
    for (double w : {0.2, 1.0, 4.0}) {
        const double h = 1e-5;
        const double fd = (staircase_av(w + h, kp) - staircase_av(w - h, kp)) / (2.0 * h);
        CHECK(std::abs(fd - density_av_dim(w, kp, 1)) < 1e-8);
    }
    CHECK(std::abs(density_av_dim(1e9, kp, 2)) < 1e-15);
    for (double w : {0.5, 2.0, 6.0}) {
        // d = 3: (w / 2 pi) times the d = 1 staircase
        const double q = integrate([&](double s) { return density_av_dim(s, kp, 1); }, 0.0, w);
        const double expect = w / (2.0 * kPi) * (q - 0.5);
        CHECK(std::abs(density_av_dim(w, kp, 3) - expect) < 1e-6 * std::abs(expect));
        CHECK(density_av_dim(w, kp, 2, 3.0) == doctest::Approx(3.0 * density_av_dim(w, kp, 2)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(density_av_dim(1.0, kp, 4), std::invalid_argument);
}

TEST_CASE("averaged density is the Laplace dual of the heat trace")
{
    for (double k : {0.5, 2.0}) {
        for (double t : {0.1, 1.0}) {
            const RobinParam kp{k};
            QuadOptions opt;
            opt.abs_tol = 1e-13;
            const double q = integrate(
                [&](double w) { return density_av_dim(w, kp, 1) * std::exp(-w * w * t); }, 0.0,
                std::numeric_limits<double>::infinity(), opt);
            const double ledger = delta_ledger({DensityTag::rho_av, 1.0, k, 1}).explicit_delta_weight_at_zero;
            const double h = heat_trace_boundary(t, kp, 1);
            CHECK(std::abs(q + ledger - h) < 1e-5 * std::abs(h));
        }
    }
}

TEST_CASE("cosine transform building blocks")
{
    const RobinParam kp{1.0};
    CHECK(cosine_transform_term(1, 0.0, RobinParam{2.0}, 3.0) == doctest::Approx(2.0 / 13.0));
    CHECK(cosine_transform_term(2, 0.0, RobinParam{2.0}, 0.0) == doctest::Approx(0.25));
    for (double delta : {0.0, 0.8}) {
        const double w = 2.2;
        QuadOptions opt;
        opt.abs_tol = 1e-13;
        const double q = integrate(
            [&](double tau) { return tau * tau * std::exp(-tau) * std::cos(w * tau + delta); },
            panels(0.0, 80.0, 1.0), opt);
        CHECK(std::abs(cosine_transform_term(3, delta, kp, w) - q) < 1e-9);
    }
}

TEST_CASE("rho_N and the Poisson limit at kappa = 0")
{
    // Neumann-Dirichlet spectrum: (k - 1/2) pi
    const DensityVariant v{DensityTag::rho_N, 1.0, 0.0, 40};
    CHECK(std::abs(peak_strength(v, 1, 0.5) - 1.0) < 0.05);
    CHECK(std::abs(peak_strength(v, 3, 0.5) - 1.0) < 0.05);
    CHECK_THROWS_AS(peak_strength(v, 1, 2.0), std::invalid_argument);
}

TEST_CASE("peak strengths of the Poisson density")
{
    const EigenSpectrum s = eig_roots(1.0, RobinParam{1.0}, 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(std::abs(peak_strength({DensityTag::pois_total, 1.0, 1.0, 20}, k, 0.5) - 1.0) < 0.05);
        const double w = s.omegas[k - 1];
        const double a = 1.0 / (1.0 + 1.0 / (w * w + 1.0));
        CHECK(std::abs(peak_strength({DensityTag::pois_per, 1.0, 1.0, 20}, k, 0.5) - a) < 0.05);
    }
}

TEST_CASE("precision paths")
{
    const DensityVariant v{DensityTag::rho_per, 1.0, 1.0, 40};
    const DensityCheck small = density_eval_checked(v, 0.01);
    CHECK(small.unstable);
    CHECK_THROWS_AS(density_eval(v, 0.01, Precision::checked), std::runtime_error);
    CHECK(density_eval(v, 0.01) == density_eval(v, 0.01, Precision::extended));

    const DensityVariant w{DensityTag::rho_per, 1.0, 1.0, 6};
    const DensityCheck big = density_eval_checked(w, 5.0);
    CHECK_FALSE(big.unstable);
    CHECK(std::abs(big.double_path - big.extended_path) < 1e-12);
    CHECK(density_eval(w, 5.0) == density_eval(w, 5.0, Precision::double_only));

    // omega = 0 is the right limit
    const DensityVariant b{DensityTag::rho_bdry, 1.0, 1.0, 5};
    CHECK(std::abs(density_eval(b, 0.0) - density_eval(b, 1e-7, Precision::extended)) < 1e-5);
    CHECK_THROWS_AS(density_eval(b, -1.0), std::domain_error);

    // ascending partial sums
    const auto terms = density_terms(w, 2.0);
    REQUIRE(terms.size() == 7);
    double s = 0.0;
    for (double t : terms)
        s += t;
    CHECK(s == doctest::Approx(density_eval(w, 2.0, Precision::double_only)).epsilon(1e-14));
}

TEST_CASE("termwise identities")
{
    std::vector<double> grid;
    for (int i = 0; i < 60; ++i)
        grid.push_back(0.1 + 0.33 * i);
    const auto r1 = termwise_identity_check(1, grid);
    REQUIRE(r1.size() == 4);
    CHECK(r1[0].max_abs_diff < 1e-12);
    CHECK(r1[1].max_abs_diff < 1e-12);
    const auto r3 = termwise_identity_check(3, grid);
    CHECK(r3[2].max_abs_diff < 1e-12);
    const auto r2 = termwise_identity_check(2, grid);
    CHECK(r2[3].max_abs_diff > 0.01);
    // a different box
    const auto rb = termwise_identity_check(5, grid, 2.0, 0.3);
    for (int i = 0; i < 3; ++i)
        CHECK(rb[i].max_abs_diff < 1e-12);
}

TEST_CASE("each density piece is the cosine transform of its trace piece")
{
    const double L = 1.0, sigma = 0.3;
    const RobinParam kp{1.0};
    const int n_max = 20;
    for (double w : {0.4, 3.0}) {
        CAPTURE(w);
        // N: delta train, the t = 0 delta counts half
        double nd = 0.5 * L;
        for (int n = 1; n <= n_max; ++n)
            nd += L * (n % 2 ? -1.0 : 1.0) * std::cos(2.0 * n * L * w) *
                  std::exp(-0.5 * sigma * sigma * 4.0 * n * n * L * L);
        nd *= 2.0 / kPi;
        CHECK(std::abs(mollified_density({{DensityTag::rho_N, L, kp.kappa, n_max}}, w, sigma) - nd) <
              1e-6);

        const double pa = damped_cosine(w, sigma, L, [&](double t) { return trace_A(t, kp); });
        CHECK(std::abs(mollified_density({{DensityTag::rho_av, L, kp.kappa, n_max}}, w, sigma) - pa) <
              1e-6);

        const double pp =
            damped_cosine(w, sigma, L, [&](double t) { return trace_P(t, L, kp, n_max); });
        CHECK(std::abs(mollified_density({{DensityTag::rho_per, L, kp.kappa, n_max}}, w, sigma) - pp) <
              1e-6);

        const double pb =
            damped_cosine(w, sigma, L, [&](double t) { return trace_B(t, L, kp, n_max); });
        CHECK(std::abs(mollified_density({{DensityTag::rho_bdry, L, kp.kappa, n_max}}, w, sigma) - pb) <
              1e-6);
    }
}

TEST_CASE("density, trace and spectrum agree after smoothing")
{
    const double L = 1.0, sigma = 0.3, w = 3.0;
    const RobinParam kp{1.0};
    const double tr = damped_trace_transform(w, sigma, L, kp);
    const double de = mollified_density({{DensityTag::pois_total, L, kp.kappa, 20}}, w, sigma);
    const double ei = eigen_gaussian_sum(w, sigma, L, kp);
    CHECK(std::abs(tr - de) < 5e-2 * std::abs(ei));
    CHECK(std::abs(ei - de) < 5e-2 * std::abs(ei));
    CHECK(std::abs(ei - tr) < 5e-2 * std::abs(ei));
}

TEST_CASE("reordering: bounce series agree away from zero")
{
    ScalarField1D phi{[](double w) {
                          if (w <= 0.5 || w >= 6.0)
                              return 0.0;
                          return std::exp(-1.0 / ((w - 0.5) * (6.0 - w)));
                      },
                      Decay::compact, 6.0};
    auto pair = [&](DensityTag tag, int n) {
        return integrate_density({{tag, 1.0, 1.0, n}}, 0.5, 6.0, phi.f);
    };
    double v40[3];
    const DensityTag tags[] = {DensityTag::bou_naive, DensityTag::bou_pretrace,
                               DensityTag::bou_posttrace};
    for (int i = 0; i < 3; ++i) {
        const double a = pair(tags[i], 20), b = pair(tags[i], 40);
        CAPTURE(to_string(tags[i]));
        CHECK(std::abs(a - b) < 0.01);
        v40[i] = b;
    }
    CHECK(std::abs(v40[0] - v40[1]) < 0.02);
    CHECK(std::abs(v40[0] - v40[2]) < 0.02);
    CHECK(std::abs(v40[1] - v40[2]) < 0.02);
}

TEST_CASE("delta at zero: Poisson route versus pretrace route")
{
    std::vector<double> pois, pre;
    for (int n : {10, 20, 40}) {
        pois.push_back(integrate_density(
            {{DensityTag::pois_per, 1.0, 1.0, n}, {DensityTag::pois_bdry, 1.0, 1.0, n}}, 0.0, 0.3));
        pre.push_back(integrate_density({{DensityTag::rho_N, 1.0, 1.0, n},
                                         {DensityTag::rho_per, 1.0, 1.0, n},
                                         {DensityTag::bou_pretrace, 1.0, 1.0, n}},
                                        0.0, 0.3));
    }
    CHECK(pois[0] < pois[1]);
    CHECK(pois[1] < pois[2]);
    CHECK(std::abs(pois[2] - 0.5) < 0.1);
    for (double p : pre)
        CHECK(std::abs(p) < 0.1);
}

TEST_CASE("telescoping sums")
{
    ScalarField1D gauss{[](double w) { return std::exp(-w * w); }, Decay::exponential, 10.0};
    CHECK(std::abs(telescoping_delta_demo(200, gauss) - kPi / 2.0) < 0.02);
    ScalarField1D away{[](double w) {
                           if (w <= 0.5 || w >= 3.0)
                               return 0.0;
                           return std::exp(-1.0 / ((w - 0.5) * (3.0 - w)));
                       },
                       Decay::compact, 3.0};
    CHECK(std::abs(telescoping_delta_demo(200, away)) < 0.02);
    for (double w : {0.3, 1.1, 2.9}) {
        CHECK(telescoping_partial_sum(50, w, true) == 0.0);
        CHECK(telescoping_partial_sum(50, w, false) == doctest::Approx(std::sin(50 * w) / w));
    }
}
