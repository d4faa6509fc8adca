#include "boxbound/jackson.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace boxbound {

namespace {

constexpr double kPi = std::numbers::pi;

void check_center(double x_star) {
    if (!(std::abs(x_star) <= 1.0))
        throw std::domain_error("delta density center must lie in [-1,1]");
}

}  // namespace

JacksonCoefficients jackson_coefficients(int r) {
    if (r < 0) throw std::invalid_argument("jackson_coefficients: r must be >= 0");
    JacksonCoefficients out;
    out.r = r;
    out.theta = kPi / static_cast<double>(r + 2);
    out.g.resize(static_cast<std::size_t>(r) + 1);
    const double c = std::cos(out.theta);
    for (int k = 0; k <= r; ++k) {
        out.g[static_cast<std::size_t>(k)] =
            (static_cast<double>(r + 2 - k) * cheb_eval(k, c) + chebu_eval(k - 1, c) * c) /
            static_cast<double>(r + 2);
    }
    out.g[0] = 1.0;  // exact normalization
    return out;
}

DeltaDensity delta_density(double x_star, int r) {
    check_center(x_star);
    const double center[] = {x_star};
    const int degrees[] = {r};
    return delta_density(center, degrees);
}

DeltaDensity delta_density(std::span<const double> x_star, std::span<const int> degrees) {
    if (x_star.size() != degrees.size() || x_star.empty())
        throw std::invalid_argument("delta_density: center/degree size mismatch");
    const int n = static_cast<int>(x_star.size());
    for (double c : x_star) check_center(c);
    for (int r : degrees) {
        if (r < 0) throw std::invalid_argument("delta_density: degrees must be >= 0");
    }

    // Per-coordinate factor coefficients of h_{r_i}: 1 on T_0 and
    // 2 g_k T_k(x_star_i) on T_k.
    std::vector<std::vector<double>> factor(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int r = degrees[static_cast<std::size_t>(i)];
        const auto jc = jackson_coefficients(r);
        auto& fi = factor[static_cast<std::size_t>(i)];
        fi.resize(static_cast<std::size_t>(r) + 1);
        fi[0] = 1.0;
        for (int k = 1; k <= r; ++k) {
            fi[static_cast<std::size_t>(k)] =
                2.0 * jc.g[static_cast<std::size_t>(k)] * cheb_eval(k, x_star[static_cast<std::size_t>(i)]);
        }
    }

    DeltaDensity out;
    out.center.assign(x_star.begin(), x_star.end());
    out.degrees.assign(degrees.begin(), degrees.end());
    out.poly = ChebPoly(n);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    // Tensor expansion over the full index box {0..r_1} x ... x {0..r_n}.
    while (true) {
        double c = 1.0;
        for (int i = 0; i < n; ++i)
            c *= factor[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        out.poly.add_term(MultiIndex(idx), c);
        int i = 0;
        for (; i < n; ++i) {
            if (++idx[static_cast<std::size_t>(i)] <= degrees[static_cast<std::size_t>(i)]) break;
            idx[static_cast<std::size_t>(i)] = 0;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<int> degree_split(int r, int n) {
    if (n < 1) throw std::invalid_argument("degree_split: n must be >= 1");
    if (r < n) throw std::invalid_argument("degree_split: requires r >= n");
    const int s = (r - n) / n;
    const int n0 = (r - n) % n;
    std::vector<int> out(static_cast<std::size_t>(n), s);
    for (int i = 0; i < n0; ++i) out[static_cast<std::size_t>(i)] = s + 1;
    return out;
}

double jackson_bound(const ChebPoly& f, std::span<const double> x_star,
                     std::span<const int> degrees) {
    const int n = f.dimension();
    if (static_cast<int>(x_star.size()) != n || static_cast<int>(degrees.size()) != n)
        throw std::invalid_argument("jackson_bound: dimension mismatch");
    const int d = f.degree();
    for (int r : degrees) {
        if (r < d)
            throw std::invalid_argument("jackson_bound: every degree must be >= deg f (" +
                                        std::to_string(d) + ")");
    }

    std::vector<JacksonCoefficients> jc;
    jc.reserve(degrees.size());
    for (int r : degrees) jc.push_back(jackson_coefficients(r));

    double sum = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        double term = c;
        for (int i = 0; i < n; ++i) {
            term *= cheb_eval(alpha[i], x_star[static_cast<std::size_t>(i)]);
            term *= jc[static_cast<std::size_t>(i)].g[static_cast<std::size_t>(alpha[i])];
        }
        sum += term;
    }
    return sum;
}

int psi(int k) {
    if (k < 0) throw std::invalid_argument("psi: k must be >= 0");
    if (k <= 4) return 0;
    const double v = (4.0 * k - 5.0 - std::sqrt(8.0 * static_cast<double>(k) * k - 7.0)) / 8.0;
    return static_cast<int>(std::ceil(v - 1e-9));
}

double max_cheb_coeff(int k) {
    if (k < 2) throw std::invalid_argument("max_cheb_coeff: k must be >= 2");
    const int m = psi(k);
    if (m == 0) return std::ldexp(1.0, k - 1);  // k (k-1)!/k! cancels to 1
    if (k <= 20) {
        // 2^(k-1-2m) k (k-m-1)! / (m! (k-2m)!), small enough for exact arithmetic.
        unsigned long long value = 1;
        for (int i = 0; i < k - 1 - 2 * m; ++i) value *= 2;
        value *= static_cast<unsigned long long>(k);
        // (k-m-1)! / (k-2m)! = product of (k-2m+1) .. (k-m-1), m >= 1 here.
        for (int i = k - 2 * m + 1; i <= k - m - 1; ++i) value *= static_cast<unsigned long long>(i);
        unsigned long long mfact = 1;
        for (int i = 2; i <= m; ++i) mfact *= static_cast<unsigned long long>(i);
        return static_cast<double>(value) / static_cast<double>(mfact);
    }
    const double log2v = static_cast<double>(k - 1 - 2 * m) * std::numbers::ln2;
    const double logv = log2v + std::log(static_cast<double>(k)) + std::lgamma(static_cast<double>(k - m)) -
                        std::lgamma(static_cast<double>(m + 1)) -
                        std::lgamma(static_cast<double>(k - 2 * m + 1));
    return std::exp(logv);
}

ErrorConstants error_constants(const ChebPoly& f) {
    if (f.degree() < 1)
        throw std::invalid_argument("error_constants: f must be nonconstant");
    ErrorConstants out;
    // The decay estimate applies per coordinate, so d is the largest
    // single-coordinate index appearing in f.
    out.d = f.max_coordinate_degree();
    out.psi_d = psi(out.d);
    out.c_d = out.d == 1 ? 1.0 : max_cheb_coeff(out.d);
    out.C_d = static_cast<double>(out.d) * out.d * (1.0 + 2.0 * out.c_d);

    double coeff_sum = 0.0;
    const bool univariate = f.dimension() == 1;
    for (const auto& [alpha, c] : f.terms()) {
        if (univariate && alpha.total_degree() == 0) continue;
        coeff_sum += std::abs(c);
    }
    out.C_f = coeff_sum * out.C_d * kPi * kPi / 2.0;
    return out;
}

std::vector<OverlayRow> gaussian_overlay(double x_star, int r, std::span<const double> grid,
                                         std::vector<double>* excluded) {
    check_center(x_star);
    const DeltaDensity h = delta_density(x_star, r);
    const double sigma2 = (kPi / (r + 1)) * (kPi / (r + 1)) *
                          (1.0 - x_star * x_star + (3.0 * x_star * x_star - 2.0) / (r + 1));
    std::vector<OverlayRow> rows;
    rows.reserve(grid.size());
    for (double x : grid) {
        if (std::abs(x) >= 1.0) {
            if (excluded) excluded->push_back(x);
            continue;
        }
        OverlayRow row;
        row.x = x;
        const double point[] = {x};
        row.delta_kpm = h.poly.eval(point) / (kPi * std::sqrt(1.0 - x * x));
        row.gaussian = std::exp(-(x - x_star) * (x - x_star) / (2.0 * sigma2)) /
                       std::sqrt(2.0 * kPi * sigma2);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace boxbound
