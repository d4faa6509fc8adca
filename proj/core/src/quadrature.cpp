#include "boxbound/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace boxbound {

double quadrature_mu(const std::function<double(std::span<const double>)>& f, int dimension,
                     int nodes_per_dim) {
    if (dimension < 1) throw std::invalid_argument("quadrature_mu: dimension must be >= 1");
    if (nodes_per_dim < 1) throw std::invalid_argument("quadrature_mu: need at least one node");

    const std::size_t n = static_cast<std::size_t>(dimension);
    const std::size_t N = static_cast<std::size_t>(nodes_per_dim);
    std::vector<double> nodes(N);
    for (std::size_t j = 0; j < N; ++j) {
        nodes[j] = std::cos((2.0 * static_cast<double>(j) + 1.0) * std::numbers::pi /
                            (2.0 * static_cast<double>(N)));
    }

    std::vector<std::size_t> odo(n, 0);
    std::vector<double> point(n);
    double sum = 0.0;
    while (true) {
        for (std::size_t i = 0; i < n; ++i) point[i] = nodes[odo[i]];
        sum += f(point);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++odo[i] < N) break;
            odo[i] = 0;
        }
        if (i == n) break;
    }
    return sum / std::pow(static_cast<double>(N), static_cast<double>(dimension));
}

double quadrature_mu(const ChebPoly& f, int nodes_per_dim) {
    return quadrature_mu([&f](std::span<const double> x) { return f.eval(x); }, f.dimension(),
                         nodes_per_dim);
}

double quadrature_mu(const ChebPoly& f) {
    return quadrature_mu(f, f.max_coordinate_degree() + 1);
}

}  // namespace boxbound
