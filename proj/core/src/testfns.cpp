#include "boxbound/testfns.hpp"

#include <cmath>
#include <stdexcept>

namespace boxbound {

namespace {

MultiIndex idx2(int a, int b) { return MultiIndex{a, b}; }

// Minimizer abscissa of the rescaled one-dimensional Styblinski-Tang term
// 312.5 x^4 - 200 x^2 + 12.5 x, refined by Newton from the known basin.
double styblinski_tang_argmin() {
    double x = -0.58;
    for (int it = 0; it < 60; ++it) {
        const double grad = 1250.0 * x * x * x - 400.0 * x + 12.5;
        const double hess = 3750.0 * x * x - 400.0;
        const double step = grad / hess;
        x -= step;
        if (std::abs(step) < 1e-16) break;
    }
    return x;
}

TestFunction booth() {
    TestFunction f;
    f.name = "booth";
    f.n = 2;
    f.cheb = ChebPoly(2);
    f.cheb.add_term(idx2(2, 0), 250.0)
        .add_term(idx2(0, 2), 250.0)
        .add_term(idx2(1, 1), 800.0)
        .add_term(idx2(1, 0), -340.0)
        .add_term(idx2(0, 1), -380.0)
        .add_term(idx2(0, 0), 574.0);
    f.monomial = MonomialPoly(2);
    f.monomial.add_term(idx2(2, 0), 500.0)
        .add_term(idx2(0, 2), 500.0)
        .add_term(idx2(1, 1), 800.0)
        .add_term(idx2(1, 0), -340.0)
        .add_term(idx2(0, 1), -380.0)
        .add_term(idx2(0, 0), 74.0);
    f.f_min = 0.0;
    f.minimizers = {{0.1, 0.3}};
    f.range_lo = 0.0;
    f.range_hi = 2500.0;
    return f;
}

TestFunction matyas() {
    TestFunction f;
    f.name = "matyas";
    f.n = 2;
    f.cheb = ChebPoly(2);
    f.cheb.add_term(idx2(2, 0), 13.0)
        .add_term(idx2(0, 2), 13.0)
        .add_term(idx2(1, 1), -48.0)
        .add_term(idx2(0, 0), 26.0);
    f.monomial = MonomialPoly(2);
    f.monomial.add_term(idx2(2, 0), 26.0).add_term(idx2(0, 2), 26.0).add_term(idx2(1, 1), -48.0);
    f.f_min = 0.0;
    f.minimizers = {{0.0, 0.0}};
    f.range_lo = 0.0;
    f.range_hi = 100.0;
    return f;
}

TestFunction motzkin() {
    TestFunction f;
    f.name = "motzkin";
    f.n = 2;
    f.cheb = ChebPoly(2);
    f.cheb.add_term(idx2(4, 0), 4.0)
        .add_term(idx2(4, 2), 4.0)
        .add_term(idx2(2, 4), 4.0)
        .add_term(idx2(0, 4), 4.0)
        .add_term(idx2(2, 2), 20.0)
        .add_term(idx2(2, 0), 16.0)
        .add_term(idx2(0, 2), 16.0)
        .add_term(idx2(0, 0), 13.0);
    f.monomial = MonomialPoly(2);
    f.monomial.add_term(idx2(4, 2), 64.0)
        .add_term(idx2(2, 4), 64.0)
        .add_term(idx2(2, 2), -48.0)
        .add_term(idx2(0, 0), 1.0);
    f.f_min = 0.0;
    f.minimizers = {{0.5, 0.5}, {0.5, -0.5}, {-0.5, 0.5}, {-0.5, -0.5}};
    f.range_lo = 0.0;
    f.range_hi = 80.0;
    return f;
}

TestFunction three_hump() {
    TestFunction f;
    f.name = "three-hump";
    f.n = 2;
    const double p56 = 15625.0;  // 5^6
    f.cheb = ChebPoly(2);
    f.cheb.add_term(idx2(6, 0), p56 / 192.0)
        .add_term(idx2(4, 0), 1625.0 / 4.0)
        .add_term(idx2(2, 0), 58725.0 / 64.0)
        .add_term(idx2(1, 1), 25.0)
        .add_term(idx2(0, 2), 12.5)
        .add_term(idx2(0, 0), 14525.0 / 24.0);
    f.monomial = MonomialPoly(2);
    f.monomial.add_term(idx2(6, 0), p56 / 6.0)
        .add_term(idx2(4, 0), -625.0 * 1.05)
        .add_term(idx2(2, 0), 50.0)
        .add_term(idx2(1, 1), 25.0)
        .add_term(idx2(0, 2), 25.0);
    f.f_min = 0.0;
    f.minimizers = {{0.0, 0.0}};
    f.range_lo = 0.0;
    f.range_hi = 2000.0;
    return f;
}

TestFunction styblinski_tang(int n) {
    TestFunction f;
    f.name = "styblinski-tang";
    f.n = n;
    f.cheb = ChebPoly(n);
    f.monomial = MonomialPoly(n);
    for (int j = 0; j < n; ++j) {
        auto coord_index = [n, j](int degree) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(j)] = degree;
            return MultiIndex(v);
        };
        f.cheb.add_term(coord_index(4), 625.0 / 16.0)
            .add_term(coord_index(2), 225.0 / 4.0)
            .add_term(coord_index(1), 25.0 / 2.0)
            .add_term(coord_index(0), 275.0 / 16.0);
        f.monomial.add_term(coord_index(4), 312.5)
            .add_term(coord_index(2), -200.0)
            .add_term(coord_index(1), 12.5);
    }
    const double xmin = styblinski_tang_argmin();
    const double per_coord =
        312.5 * xmin * xmin * xmin * xmin - 200.0 * xmin * xmin + 12.5 * xmin;
    f.f_min = static_cast<double>(n) * per_coord;
    f.minimizers = {std::vector<double>(static_cast<std::size_t>(n), xmin)};
    f.range_lo = n == 2 ? -70.0 : -105.0;
    f.range_hi = n == 2 ? 200.0 : 300.0;
    return f;
}

TestFunction rosenbrock(int n) {
    TestFunction f;
    f.name = "rosenbrock";
    f.n = n;
    f.cheb = ChebPoly(n);
    f.monomial = MonomialPoly(n);
    const double s = 2.048;
    const double s2 = s * s;
    const double s3 = s2 * s;
    const double s4 = s2 * s2;
    for (int j = 0; j + 1 < n; ++j) {
        auto coord_index = [n](int coord, int degree, int coord2 = -1, int degree2 = 0) {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(coord)] = degree;
            if (coord2 >= 0) v[static_cast<std::size_t>(coord2)] = degree2;
            return MultiIndex(v);
        };
        f.cheb.add_term(coord_index(j, 4), 12.5 * s4)
            .add_term(coord_index(j, 2, j + 1, 1), -100.0 * s3)
            .add_term(coord_index(j, 2), (0.5 + 50.0 * s2) * s2)
            .add_term(coord_index(j + 1, 2), 50.0 * s2)
            .add_term(coord_index(j, 1), -4.096)
            .add_term(coord_index(j + 1, 1), -100.0 * s3)
            .add_term(coord_index(j, 0), 1.0 + s2 * (37.5 * s2 + 50.5));
        f.monomial.add_term(coord_index(j + 1, 2), 100.0 * s2)
            .add_term(coord_index(j, 2, j + 1, 1), -200.0 * s3)
            .add_term(coord_index(j, 4), 100.0 * s4)
            .add_term(coord_index(j, 2), s2)
            .add_term(coord_index(j, 1), -4.096)
            .add_term(coord_index(j, 0), 1.0);
    }
    f.f_min = 0.0;
    f.minimizers = {std::vector<double>(static_cast<std::size_t>(n), 1.0 / s)};
    f.range_lo = 0.0;
    f.range_hi = n == 2 ? 4000.0 : 8000.0;
    return f;
}

std::vector<TestFunction> build_catalog() {
    std::vector<TestFunction> all;
    all.push_back(booth());
    all.push_back(matyas());
    all.push_back(motzkin());
    all.push_back(three_hump());
    all.push_back(styblinski_tang(2));
    all.push_back(styblinski_tang(3));
    all.push_back(rosenbrock(2));
    all.push_back(rosenbrock(3));
    return all;
}

}  // namespace

const std::vector<TestFunction>& catalog() {
    static const std::vector<TestFunction> entries = build_catalog();
    return entries;
}

const TestFunction& lookup(std::string_view name, int n) {
    for (const auto& f : catalog()) {
        if (f.name == name && f.n == n) return f;
    }
    std::string keys;
    for (const auto& f : catalog()) {
        if (!keys.empty()) keys += ", ";
        keys += f.name + "(n=" + std::to_string(f.n) + ")";
    }
    throw std::out_of_range("unknown test function '" + std::string(name) + "' with n=" +
                            std::to_string(n) + "; valid: " + keys);
}

}  // namespace boxbound
