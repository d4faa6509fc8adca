#pragma once

#include <map>
#include <span>
#include <vector>

#include "boxbound/multi_index.hpp"

namespace boxbound {

/// T_k(x) by the three-term recurrence. Defined for all real x (also |x| > 1),
/// stable at the endpoints where the arccos form is not.
double cheb_eval(int k, double x);

/// U_k(x) with U_{-1} = 0, U_0 = 1.
double chebu_eval(int k, double x);

/// Sparse n-variate polynomial in the tensor Chebyshev basis {T_alpha}.
///
/// Canonical sparse form: no stored zero coefficients, terms ordered
/// graded-lexicographically. Coefficients whose magnitude falls below
/// kCoeffDropTolerance are dropped, so basis conversions do not accumulate
/// exact-zero noise. Two polynomials are equal iff their canonical maps are.
/// Instances are immutable values once built; all operations are pure.
class ChebPoly {
public:
    static constexpr double kCoeffDropTolerance = 1e-14;

    explicit ChebPoly(int dimension);
    static ChebPoly constant(int dimension, double value);
    static ChebPoly basis(const MultiIndex& alpha, double coeff = 1.0);

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<MultiIndex, double>& terms() const { return terms_; }

    /// Max total degree over stored indices; 0 for the zero polynomial.
    int degree() const;

    /// Largest per-coordinate index over stored terms.
    int max_coordinate_degree() const;

    /// Coefficient of T_alpha (0 if absent).
    double coeff(const MultiIndex& alpha) const;

    /// Accumulate c onto T_alpha, keeping the map canonical.
    ChebPoly& add_term(const MultiIndex& alpha, double c);

    /// Sum_alpha f_alpha prod_i T_{alpha_i}(x_i).
    double eval(std::span<const double> x) const;

    ChebPoly operator+(const ChebPoly& other) const;
    ChebPoly operator-(const ChebPoly& other) const;
    ChebPoly operator*(double scale) const;

    /// Product with per-coordinate linearization T_a T_b = (T_{a+b} + T_{|a-b|})/2.
    ChebPoly operator*(const ChebPoly& other) const;

    bool operator==(const ChebPoly& other) const {
        return dimension_ == other.dimension_ && terms_ == other.terms_;
    }

private:
    int dimension_ = 0;
    std::map<MultiIndex, double> terms_;
};

/// Sparse n-variate polynomial over the standard monomial basis x^alpha.
/// Input format for user polynomials; same canonical-sparse rules as ChebPoly.
class MonomialPoly {
public:
    explicit MonomialPoly(int dimension);
    static MonomialPoly constant(int dimension, double value);

    int dimension() const { return dimension_; }
    const std::map<MultiIndex, double>& terms() const { return terms_; }
    MonomialPoly& add_term(const MultiIndex& alpha, double c);

    double eval(std::span<const double> x) const;

private:
    int dimension_ = 0;
    std::map<MultiIndex, double> terms_;
};

/// Exact basis conversion: x^j is expanded in the T-basis per coordinate via
/// x T_k = (T_{k+1} + T_{|k-1|})/2. Evaluation of the result agrees with
/// monomial evaluation of the input everywhere.
ChebPoly monomial_to_cheb(const MonomialPoly& p);

/// <f,g> under the product Chebyshev measure of the box:
/// sum_alpha f_alpha g_alpha (1/2)^{|Supp(alpha)|}, by orthogonality.
double inner_product_mu(const ChebPoly& f, const ChebPoly& g);

}  // namespace boxbound
