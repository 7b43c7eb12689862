// Copyright 2026 robin-kernels developers
// SPDX-License-Identifier: Apache-2.0

#ifndef ROBIN_SPECTRAL_HPP
#define ROBIN_SPECTRAL_HPP

#include "robin/transform.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace robin {

using Extended = boost::multiprecision::cpp_bin_float_50;

// Roots of tan(L w) = -w/kappa, i.e. L w + atan(w/kappa) = k pi.
struct EigenSpectrum {
    std::vector<double> omegas;
    double L = 1.0;
    double kappa = 1.0;
    std::vector<double> residuals;  // L w_k + atan(w_k/kappa) - k pi
    std::vector<int> newton_steps;
};

EigenSpectrum eig_roots(double L, RobinParam kp, int k_max);

// Large-n expansion of w_n for L = kappa = 1 in a = (n - 1/2) pi:
// a + 1/a - 4/(3a^3) + 53/(15a^5) - 1226/(105a^7), truncated after
// `corrections` terms beyond a (0..4).
double eig_perturbative(int n, int corrections = 3);

enum class DensityTag {
    rho_N,
    rho_av,
    rho_per,
    rho_bdry,
    bou_naive,
    bou_pretrace,
    bou_posttrace,
    pois_total,
    pois_per,
    pois_bou,
    pois_bdry,
};

const std::vector<DensityTag>& all_density_tags();
std::string to_string(DensityTag tag);
std::optional<DensityTag> parse_density_tag(const std::string& name);

// Whether the series carries inner sums over j (binomial cancellation).
bool has_j_sums(DensityTag tag);

struct DensityVariant {
    DensityTag tag = DensityTag::pois_total;
    double L = 1.0;
    double kappa = 1.0;
    int n_max = 20;
};

// Weight of an explicit delta(omega) not carried by the regular part.
struct DeltaLedger {
    double explicit_delta_weight_at_zero = 0.0;
};

DeltaLedger delta_ledger(const DensityVariant& v);

// Terms n = 0..n_max of the partial sum (ascending n, no resummation).
std::vector<double> density_terms(const DensityVariant& v, double omega);
std::vector<Extended> density_terms(const DensityVariant& v, const Extended& omega);

enum class Precision { automatic, double_only, extended, checked };

// Regular part of the density; at omega = 0 the right limit.
// automatic: extended precision when omega < 0.2 kappa or when the binomial
// growth (1 + 2 kappa/r)^n_max exceeds 1e5. checked: both paths, throws
// std::runtime_error if they differ by more than 1e-6.
double density_eval(const DensityVariant& v, double omega, Precision p = Precision::automatic);

struct DensityCheck {
    double double_path = 0.0;
    double extended_path = 0.0;
    bool unstable = false;
};

DensityCheck density_eval_checked(const DensityVariant& v, double omega, double tol = 1e-6);

// Sum of several variants at one omega.
double density_eval_sum(const std::vector<DensityVariant>& vs, double omega,
                        Precision p = Precision::automatic);

// int_a^b sum(vs)(w) phi(w) dw, panels at the finest oscillation scale.
double integrate_density(const std::vector<DensityVariant>& vs, double a, double b,
                         const std::function<double(double)>& phi = {});

// Gaussian-smoothed density: int_0^inf rho(w') [g(w - w') + g(w + w')] dw'
// with g the normal density of width sigma; ledger deltas at 0 included.
double mollified_density(const std::vector<DensityVariant>& vs, double omega, double sigma = 0.05);

double staircase_av(double omega, RobinParam kp);

// Averaged boundary density in dimension d with boundary measure
// (count, perimeter, surface area).
double density_av_dim(double omega, RobinParam kp, int d, double measure = 1.0);

// int_0^inf tau^{j-1} e^{-kappa tau} cos(omega tau + delta) dtau
double cosine_transform_term(int j, double delta_phase, RobinParam kp, double omega);

double peak_strength(const DensityVariant& v, int k, double halfwidth);

struct IdentityResult {
    std::string pair;
    int n = 0;
    double max_abs_diff = 0.0;
};

// Per-term differences at index n in extended precision for
// pois_per vs rho_N + rho_per, pois_bdry vs rho_bdry, pois_bou vs bou_posttrace,
// and bou_naive vs bou_pretrace (the last pair is not an identity).
std::vector<IdentityResult> termwise_identity_check(int n, const std::vector<double>& omega_grid,
                                                    double L = 1.0, double kappa = 1.0);

// int_0^inf sin(N w)/w phi(w) dw; phi.extent bounds the support.
double telescoping_delta_demo(int N, const ScalarField1D& testfn);

// sum_{n<N} [sin((n+1)w) - sin(n w)]/w, or the index-shifted form.
double telescoping_partial_sum(int N, double omega, bool shifted);

}  // namespace robin

#endif
