#pragma once

#include <functional>
#include <span>

#include "boxbound/cheb_poly.hpp"

namespace boxbound {

/// Integral of f against the product Chebyshev probability measure on
/// [-1,1]^n, by the tensor Gauss-Chebyshev rule with nodes_per_dim nodes
/// cos((2j-1)pi/(2N)) per coordinate. Exact for polynomials of
/// per-coordinate degree < 2*nodes_per_dim.
///
/// This is the independent oracle against which every closed-form integral
/// in the moment assembly is validated.
double quadrature_mu(const std::function<double(std::span<const double>)>& f, int dimension,
                     int nodes_per_dim);

/// Same rule with the node count chosen exact for f:
/// nodes_per_dim = max per-coordinate degree + 1.
double quadrature_mu(const ChebPoly& f);
double quadrature_mu(const ChebPoly& f, int nodes_per_dim);

}  // namespace boxbound
