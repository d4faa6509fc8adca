#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "boxbound/cheb_poly.hpp"
#include "boxbound/quadrature.hpp"

using namespace boxbound;

namespace {

ChebPoly univariate_basis(int k) { return ChebPoly::basis(MultiIndex{k}); }

}  // namespace

TEST_CASE("first-kind evaluation at pinned points") {
    CHECK(cheb_eval(0, 0.7) == 1.0);
    CHECK(cheb_eval(4, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(cheb_eval(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("second-kind evaluation at pinned points") {
    CHECK(chebu_eval(-1, 0.3) == 0.0);
    CHECK(chebu_eval(0, 0.3) == 1.0);
    CHECK(chebu_eval(3, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(chebu_eval(3, -1.0) == doctest::Approx(-4.0).epsilon(1e-14));
}

TEST_CASE("recurrence agrees with the trigonometric definition") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> kdist(0, 30);
    std::uniform_real_distribution<double> xdist(-0.999, 0.999);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = kdist(rng);
        const double x = xdist(rng);
        CHECK(std::abs(cheb_eval(k, x) - std::cos(k * std::acos(x))) <= 1e-12);
        const double u = k == 0 ? 1.0
                                : std::sin((k + 1) * std::acos(x)) / std::sin(std::acos(x));
        CHECK(std::abs(chebu_eval(k, x) - u) <= 1e-10 * (k + 1.0));
    }
}

TEST_CASE("product linearization T_a T_b = (T_{a+b} + T_{|a-b|}) / 2") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> kdist(0, 15);
    std::uniform_real_distribution<double> xdist(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = kdist(rng);
        const int b = kdist(rng);
        const double x = xdist(rng);
        const double lhs = cheb_eval(a, x) * cheb_eval(b, x);
        const double rhs = 0.5 * (cheb_eval(a + b, x) + cheb_eval(std::abs(a - b), x));
        CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("extrema on the interval") {
    for (int k : {1, 2, 5, 9, 14}) {
        double tmax = 0.0;
        double umax = 0.0;
        for (int j = 0; j <= 1000; ++j) {
            const double x = -1.0 + 2.0 * j / 1000.0;
            tmax = std::max(tmax, std::abs(cheb_eval(k, x)));
            umax = std::max(umax, std::abs(chebu_eval(k, x)));
        }
        CHECK(tmax == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(umax == doctest::Approx(k + 1.0).epsilon(1e-9));
    }
}

TEST_CASE("sparse evaluation") {
    const ChebPoly zero(2);
    const double pt[] = {0.3, -0.8};
    CHECK(zero.eval(pt) == 0.0);

    // Motzkin in the T-basis; its minimum 0 is attained at (1/2, 1/2).
    ChebPoly motzkin(2);
    motzkin.add_term({4, 0}, 4.0)
        .add_term({4, 2}, 4.0)
        .add_term({2, 4}, 4.0)
        .add_term({0, 4}, 4.0)
        .add_term({2, 2}, 20.0)
        .add_term({2, 0}, 16.0)
        .add_term({0, 2}, 16.0)
        .add_term({0, 0}, 13.0);
    const double minimizer[] = {0.5, 0.5};
    CHECK(motzkin.eval(minimizer) == doctest::Approx(0.0).epsilon(1e-12));

    ChebPoly matyas(2);
    matyas.add_term({2, 0}, 13.0)
        .add_term({0, 2}, 13.0)
        .add_term({1, 1}, -48.0)
        .add_term({0, 0}, 26.0);
    const double corner[] = {1.0, -1.0};
    CHECK(matyas.eval(corner) == doctest::Approx(100.0).epsilon(1e-13));

    const double wrong_dim[] = {0.1};
    CHECK_THROWS_AS((void)motzkin.eval(wrong_dim), std::invalid_argument);
}

TEST_CASE("degree bookkeeping and canonical form") {
    ChebPoly p(2);
    CHECK(p.degree() == 0);
    p.add_term({3, 2}, 1.0);
    CHECK(p.degree() == 5);
    CHECK(p.max_coordinate_degree() == 3);
    p.add_term({3, 2}, -1.0);  // cancels back to zero
    CHECK(p.is_zero());
    p.add_term({1, 0}, 1e-15);  // below the drop tolerance
    CHECK(p.is_zero());
}

TEST_CASE("basis conversion of pinned polynomials") {
    // Constant 1.
    const MonomialPoly one = MonomialPoly::constant(1, 1.0);
    const ChebPoly one_cheb = monomial_to_cheb(one);
    CHECK(one_cheb.term_count() == 1);
    CHECK(one_cheb.coeff(MultiIndex{0}) == doctest::Approx(1.0).epsilon(1e-15));

    // x^2 = (T_0 + T_2)/2.
    MonomialPoly x2(1);
    x2.add_term(MultiIndex{2}, 1.0);
    const ChebPoly x2_cheb = monomial_to_cheb(x2);
    CHECK(x2_cheb.coeff(MultiIndex{0}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(x2_cheb.coeff(MultiIndex{2}) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(x2_cheb.term_count() == 2);

    // Booth in monomial form converts to its published T-expansion.
    MonomialPoly booth(2);
    booth.add_term({2, 0}, 500.0)
        .add_term({0, 2}, 500.0)
        .add_term({1, 1}, 800.0)
        .add_term({1, 0}, -340.0)
        .add_term({0, 1}, -380.0)
        .add_term({0, 0}, 74.0);
    const ChebPoly converted = monomial_to_cheb(booth);
    CHECK(converted.coeff({2, 0}) == doctest::Approx(250.0).epsilon(1e-15));
    CHECK(converted.coeff({0, 2}) == doctest::Approx(250.0).epsilon(1e-15));
    CHECK(converted.coeff({1, 1}) == doctest::Approx(800.0).epsilon(1e-15));
    CHECK(converted.coeff({1, 0}) == doctest::Approx(-340.0).epsilon(1e-15));
    CHECK(converted.coeff({0, 1}) == doctest::Approx(-380.0).epsilon(1e-15));
    CHECK(converted.coeff({0, 0}) == doctest::Approx(574.0).epsilon(1e-15));
    CHECK(converted.term_count() == 6);
}

TEST_CASE("basis conversion round-trip on random sparse polynomials") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> coeff(-5.0, 5.0);
    std::uniform_real_distribution<double> xdist(-1.0, 1.0);
    std::uniform_int_distribution<int> ndist(1, 3);
    std::uniform_int_distribution<int> terms(1, 8);

    for (int trial = 0; trial < 30; ++trial) {
        const int n = ndist(rng);
        MonomialPoly p(n);
        std::uniform_int_distribution<int> deg(0, 8);
        const int nterms = terms(rng);
        for (int t = 0; t < nterms; ++t) {
            std::vector<int> e(static_cast<std::size_t>(n));
            int budget = 8;
            for (int i = 0; i < n; ++i) {
                std::uniform_int_distribution<int> di(0, budget);
                e[static_cast<std::size_t>(i)] = di(rng);
                budget -= e[static_cast<std::size_t>(i)];
            }
            p.add_term(MultiIndex(e), coeff(rng));
        }
        const ChebPoly q = monomial_to_cheb(p);
        for (int pt = 0; pt < 100; ++pt) {
            std::vector<double> x(static_cast<std::size_t>(n));
            for (auto& xi : x) xi = xdist(rng);
            const double expected = p.eval(x);
            const double got = q.eval(x);
            CHECK(std::abs(got - expected) <= 1e-10 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("inner product via orthogonality") {
    const ChebPoly t0 = univariate_basis(0);
    CHECK(inner_product_mu(t0, t0) == doctest::Approx(1.0).epsilon(1e-15));
    for (int k = 1; k <= 6; ++k) {
        const ChebPoly tk = univariate_basis(k);
        CHECK(inner_product_mu(tk, tk) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(inner_product_mu(tk, t0) == 0.0);
    }

    const ChebPoly t12 = ChebPoly::basis(MultiIndex{1, 2});
    CHECK(inner_product_mu(t12, t12) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(quadrature_mu(t12 * t12) == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS((void)inner_product_mu(t0, t12), std::invalid_argument);
}

TEST_CASE("quadrature oracle on pinned integrands") {
    CHECK(quadrature_mu([](std::span<const double>) { return 1.0; }, 3, 4) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(quadrature_mu(univariate_basis(2), 2)) <= 1e-14);
    // T_1^2 T_2 integrates to 1/4 under the Chebyshev measure.
    const ChebPoly t1 = univariate_basis(1);
    const ChebPoly t2 = univariate_basis(2);
    CHECK(quadrature_mu(t1 * t1 * t2, 3) == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("inner product agrees with quadrature on random polynomials") {
    std::mt19937 rng(987);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> ndist(1, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = ndist(rng);
        auto random_poly = [&] {
            ChebPoly p(n);
            std::uniform_int_distribution<int> deg(0, 6);
            for (int t = 0; t < 6; ++t) {
                std::vector<int> e(static_cast<std::size_t>(n));
                int budget = 6;
                for (int i = 0; i < n; ++i) {
                    std::uniform_int_distribution<int> di(0, budget);
                    e[static_cast<std::size_t>(i)] = di(rng);
                    budget -= e[static_cast<std::size_t>(i)];
                }
                p.add_term(MultiIndex(e), coeff(rng));
            }
            return p;
        };
        const ChebPoly f = random_poly();
        const ChebPoly g = random_poly();
        const double direct = inner_product_mu(f, g);
        const double quad = quadrature_mu(f * g);
        CHECK(std::abs(direct - quad) <= 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("multi-index ordering is graded lexicographic") {
    const auto indices = enumerate_indices(2, 2);
    REQUIRE(indices.size() == 6);
    CHECK(indices[0] == MultiIndex{0, 0});
    CHECK(indices[1] == MultiIndex{0, 1});
    CHECK(indices[2] == MultiIndex{1, 0});
    CHECK(indices[3] == MultiIndex{0, 2});
    CHECK(indices[4] == MultiIndex{1, 1});
    CHECK(indices[5] == MultiIndex{2, 0});
    CHECK(MultiIndex{0, 2}.support_size() == 1);
    CHECK(MultiIndex{1, 2}.total_degree() == 3);
    CHECK_THROWS_AS(MultiIndex({-1, 0}), std::invalid_argument);
}
