#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "boxbound/cheb_poly.hpp"
#include "boxbound/multi_index.hpp"

namespace boxbound {

/// Integral of T_a T_b T_c against the univariate Chebyshev probability
/// measure: a quarter-sum of Kronecker deltas from the triple-product
/// linearization.
double triple_product_mu(int a, int b, int c);

/// Integral of T_a T_b T_c (1 - x^2) against the same measure. Validated
/// exhaustively against the quadrature oracle; the nested absolute values in
/// the delta arguments are exactly as the linearization produces them.
double triple_product_mu_weighted(int a, int b, int c);

/// Integral of T_a over [-1,1] with the plain Lebesgue measure:
/// 0 for odd a, 2/(1-a^2) for even a.
double lebesgue_moment(int a);

/// Subsets of [n] are bitmasks: bit i set means coordinate i+1 is in I.
using Subset = std::uint32_t;

int subset_size(Subset subset);

/// Basis indices for the Gram block of one subset I at hierarchy degree r:
/// all beta with |beta| <= floor((r - 2|I|)/2), in graded-lex order.
/// Empty when r < 2|I|.
struct IndexSet {
    Subset subset = 0;
    int r = 0;
    std::vector<MultiIndex> members;

    bool empty() const { return members.empty(); }
    std::size_t size() const { return members.size(); }
};

IndexSet make_index_set(Subset subset, int r, int dimension);

/// binom(n + floor(r/2) - |I|, n), the order of the block (0 when r < 2|I|).
std::size_t index_set_cardinality(int dimension, int r, int subset_sz);

/// The symmetric pair (A, B) for one subset I:
///   A_{beta,gamma} = <f,   T_beta T_gamma prod_{i in I} (1 - x_i^2)>,
///   B_{beta,gamma} = <T_0, T_beta T_gamma prod_{i in I} (1 - x_i^2)>.
/// B is positive definite. Both are filled from one upper-triangle
/// computation, so symmetry is exact.
struct MomentPencil {
    Subset subset = 0;
    IndexSet indices;
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;

    bool empty() const { return indices.empty(); }
};

/// Entries factor per coordinate into closed-form triple products (weighted
/// on the coordinates of I). Iterates only the sparse support of f.
/// Returns an empty pencil when r < 2|I|.
MomentPencil assemble_pencil(const ChebPoly& f, Subset subset, int r);

/// The single-block variant over the plain Lebesgue measure on [-1,1]^n:
///   A_{beta,gamma} = integral of f T_beta T_gamma dx,
///   B_{beta,gamma} = integral of   T_beta T_gamma dx,
/// computed by linearizing the Chebyshev products per coordinate and summing
/// univariate Lebesgue moments.
MomentPencil assemble_pencil_lebesgue(const ChebPoly& f, int r);

}  // namespace boxbound
