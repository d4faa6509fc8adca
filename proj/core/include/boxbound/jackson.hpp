#pragma once

#include <span>
#include <vector>

#include "boxbound/cheb_poly.hpp"

namespace boxbound {

/// Jackson kernel coefficients g_0..g_r for one smoothing degree r.
/// Invariants: g[0] = 1, g[1] = cos(theta), |g[k]| <= 1.
struct JacksonCoefficients {
    int r = 0;
    std::vector<double> g;  // size r + 1
    double theta = 0.0;     // pi / (r + 2)
};

/// g[k] = ((r+2-k) T_k(cos theta) + U_{k-1}(cos theta) cos theta) / (r+2).
/// The polynomial form avoids the sin-ratio singularity of the trigonometric
/// expression at k = 0.
JacksonCoefficients jackson_coefficients(int r);

/// A polynomial density concentrated at a point of the box: the Jackson
/// smoothed Dirac delta. Nonnegative on the box and of unit mass under the
/// product Chebyshev measure.
struct DeltaDensity {
    std::vector<double> center;
    std::vector<int> degrees;
    ChebPoly poly{1};
};

/// h_r = 1 + 2 sum_{k=1..r} g_k T_k(x_star) T_k. Requires |x_star| <= 1.
DeltaDensity delta_density(double x_star, int r);

/// Tensor product of univariate factors: the coefficient of T_alpha is the
/// product of the factor coefficients of T_{alpha_i}.
DeltaDensity delta_density(std::span<const double> x_star, std::span<const int> degrees);

/// Split a total budget r into per-coordinate smoothing degrees
/// (r_1,...,r_n) with sum r_i = r - n, as balanced as possible
/// (the first n_0 entries get s+1 where r - n = s n + n_0). Requires r >= n.
std::vector<int> degree_split(int r, int n);

/// Closed form of the expectation of f under the density of H_degrees
/// centered at x_star: sum_alpha f_alpha T_alpha(x_star) prod_i g_{alpha_i}^{r_i}.
/// Requires every degrees[i] >= deg f. An upper bound on f_min when x_star is
/// a global minimizer.
double jackson_bound(const ChebPoly& f, std::span<const double> x_star,
                     std::span<const int> degrees);

/// Index of the extremal monomial-basis coefficient of T_k:
/// 0 for k <= 4, ceil((4k - 5 - sqrt(8k^2 - 7))/8) for k >= 4.
int psi(int k);

/// max_i |t_i^(k)|, the largest monomial-basis coefficient of T_k (k >= 2):
/// 2^(k-1-2 psi(k)) k (k-psi(k)-1)! / (psi(k)! (k-2 psi(k))!).
/// Exact integer arithmetic for k <= 20, log-gamma beyond.
double max_cheb_coeff(int k);

/// Constants of the convergence-rate estimate for one polynomial:
/// c_d the extremal Chebyshev coefficient, C_d = d^2 (1 + 2 c_d), and
/// C_f = (sum of |f_alpha|) C_d pi^2 / 2 (the constant term is excluded from
/// the sum in the univariate case). d is the largest per-coordinate index in
/// the support of f, which is what the coefficient-decay estimate acts on.
struct ErrorConstants {
    int d = 0;
    int psi_d = 0;
    double c_d = 0.0;
    double C_d = 0.0;
    double C_f = 0.0;
};

/// Requires a nonconstant f. c_1 = 1 by convention (so C_1 = 3).
ErrorConstants error_constants(const ChebPoly& f);

/// One sample of the smoothed delta against its Gaussian limit shape.
struct OverlayRow {
    double x = 0.0;
    double delta_kpm = 0.0;  // h_r(x) / (pi sqrt(1 - x^2))
    double gaussian = 0.0;   // N(x_star, sigma^2) density
};

/// Samples of delta_KPM^(r)(x - x_star) and the matching Gaussian with
/// sigma^2 = (pi/(r+1))^2 [1 - x_star^2 + (3 x_star^2 - 2)/(r+1)].
/// Grid points at +-1 are skipped (weight singularity); if `excluded` is
/// non-null the skipped abscissas are reported there.
std::vector<OverlayRow> gaussian_overlay(double x_star, int r, std::span<const double> grid,
                                         std::vector<double>* excluded = nullptr);

}  // namespace boxbound
