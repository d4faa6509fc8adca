#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boxbound/cheb_poly.hpp"

namespace boxbound {

/// One benchmark polynomial on [-1,1]^n, carried in both bases: the
/// Chebyshev expansion drives the bound machinery, the monomial twin
/// cross-validates it. Scalings that move the native domain onto the box
/// are already baked into the coefficients.
struct TestFunction {
    std::string name;
    int n = 0;
    ChebPoly cheb;
    MonomialPoly monomial;
    double f_min = 0.0;
    std::vector<std::vector<double>> minimizers;
    double range_lo = 0.0;
    double range_hi = 0.0;

    TestFunction() : cheb(1), monomial(1) {}
};

/// The full benchmark corpus: Booth, Matyas, Motzkin, Three-Hump Camel
/// (n = 2) and Styblinski-Tang, Rosenbrock (n = 2 and 3).
const std::vector<TestFunction>& catalog();

/// Throws std::out_of_range listing the valid keys when (name, n) is not in
/// the catalog.
const TestFunction& lookup(std::string_view name, int n);

}  // namespace boxbound
