#pragma once

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "boxbound/cheb_poly.hpp"
#include "boxbound/moments.hpp"

namespace boxbound {

/// Thrown when a matrix that must be positive definite fails its
/// factorization; carries the offending pivot. A failure here indicates an
/// assembly bug, not a numerical edge case, so nothing is regularized.
class DefinitenessError : public std::runtime_error {
public:
    DefinitenessError(std::string message, int pivot_index, Subset subset = 0)
        : std::runtime_error(std::move(message)), pivot_index_(pivot_index), subset_(subset) {}

    int pivot_index() const { return pivot_index_; }
    Subset subset() const { return subset_; }

private:
    int pivot_index_;
    Subset subset_;
};

struct GeneralizedEigenResult {
    double lambda = 0.0;
    Eigen::VectorXd x;  // normalized so x^T B x = 1
};

/// Smallest eigenvalue of the symmetric-definite pencil (A, B) and its
/// eigenvector: factor B = L L^T, solve the standard symmetric problem for
/// L^{-1} A L^{-T}, map the eigenvector back. A pivot below
/// 1e-12 * max diag(B) raises DefinitenessError.
GeneralizedEigenResult min_generalized_eigenvalue(const Eigen::MatrixXd& A,
                                                  const Eigen::MatrixXd& B);

/// Outcome of one hierarchy level: the per-subset minimal eigenvalues, their
/// minimum (the bound), and the optimal density extracted from the winning
/// subset's eigenvector.
struct BoundResult {
    int r = 0;
    std::map<Subset, double> per_subset;
    double value = 0.0;       // min over per_subset
    Subset winner = 0;        // smallest bitmask within 1e-12 of the minimum
    Eigen::VectorXd eigvec;   // over the winner's index set
    ChebPoly density;         // (sum_beta x_beta T_beta)^2 prod_{i in I*}(1-x_i^2), unit mass

    BoundResult() : density(1) {}
};

/// The degree-r upper bound on min f over the box with densities carrying a
/// box positivity certificate: assemble the pencil of every subset I with
/// r >= 2|I|, take the minimum of the smallest generalized eigenvalues.
/// The returned density has unit mass under the product Chebyshev measure.
/// Requires r >= 2 and nonconstant f. Pass extract_density = false to skip
/// building the density polynomial (table sweeps only need the value).
BoundResult schmudgen_bound(const ChebPoly& f, int r, bool extract_density = true);

/// The comparison bound: a single sum-of-squares density block under the
/// plain Lebesgue measure. The returned density integrates to 1 in the
/// Lebesgue sense. Requires r >= 2 and nonconstant f.
BoundResult sos_lebesgue_bound(const ChebPoly& f, int r, bool extract_density = true);

struct DensitySample {
    std::vector<double> point;
    double value = 0.0;
};

/// The extracted density evaluated on the tensor lattice with
/// points_per_dim equispaced abscissas per coordinate (endpoints included),
/// in row-major odometer order.
std::vector<DensitySample> density_eval_grid(const BoundResult& result, int points_per_dim);

}  // namespace boxbound
