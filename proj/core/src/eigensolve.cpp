#include "boxbound/eigensolve.hpp"

#include <cmath>
#include <limits>

namespace boxbound {

namespace {

// Plain lower Cholesky with an explicit pivot floor so that a non-PD B is
// reported with the pivot that failed.
Eigen::MatrixXd cholesky_or_throw(const Eigen::MatrixXd& B, Subset subset) {
    const Eigen::Index m = B.rows();
    const double floor_value = 1e-12 * B.diagonal().maxCoeff();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        double d = B(j, j) - L.row(j).head(j).squaredNorm();
        if (!(d > floor_value)) {
            throw DefinitenessError("matrix not positive definite at pivot " +
                                        std::to_string(static_cast<long long>(j)),
                                    static_cast<int>(j), subset);
        }
        L(j, j) = std::sqrt(d);
        for (Eigen::Index i = j + 1; i < m; ++i) {
            L(i, j) = (B(i, j) - L.row(i).head(j).dot(L.row(j).head(j))) / L(j, j);
        }
    }
    return L;
}

GeneralizedEigenResult solve_pencil(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                    Subset subset) {
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows() || A.rows() == 0)
        throw std::invalid_argument("min_generalized_eigenvalue: need square matrices of equal order");

    const Eigen::MatrixXd L = cholesky_or_throw(B, subset);
    const auto lower = L.triangularView<Eigen::Lower>();
    // C = L^{-1} A L^{-T}, symmetrized against roundoff.
    Eigen::MatrixXd C = lower.solve(A);
    C = lower.solve(C.transpose()).eval();
    C = (0.5 * (C + C.transpose())).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver failed to converge");

    GeneralizedEigenResult out;
    out.lambda = es.eigenvalues()(0);
    Eigen::VectorXd y = es.eigenvectors().col(0);
    out.x = L.transpose().triangularView<Eigen::Upper>().solve(y);
    // ||y|| = 1 gives x^T B x = 1 already; fix the sign for determinism.
    Eigen::Index imax = 0;
    out.x.cwiseAbs().maxCoeff(&imax);
    if (out.x(imax) < 0.0) out.x = -out.x;
    return out;
}

// Density polynomial of a winning eigenvector: square the combination
// sum_beta x_beta T_beta and attach the box weight of the subset.
ChebPoly density_from_eigvec(const IndexSet& indices, const Eigen::VectorXd& x, int dimension) {
    ChebPoly combo(dimension);
    for (std::size_t i = 0; i < indices.size(); ++i) {
        combo.add_term(indices.members[i], x(static_cast<Eigen::Index>(i)));
    }
    ChebPoly density = combo * combo;
    for (int i = 0; i < dimension; ++i) {
        if (!((indices.subset >> i) & 1)) continue;
        // 1 - x_i^2 = (T_0 - T_2(x_i)) / 2
        ChebPoly weight(dimension);
        weight.add_term(MultiIndex::zero(dimension), 0.5);
        std::vector<int> e(static_cast<std::size_t>(dimension), 0);
        e[static_cast<std::size_t>(i)] = 2;
        weight.add_term(MultiIndex(e), -0.5);
        density = density * weight;
    }
    return density;
}

double lebesgue_mass(const ChebPoly& p) {
    double mass = 0.0;
    for (const auto& [alpha, c] : p.terms()) {
        double prod = c;
        for (int i = 0; i < p.dimension() && prod != 0.0; ++i) prod *= lebesgue_moment(alpha[i]);
        mass += prod;
    }
    return mass;
}

void check_bound_inputs(const ChebPoly& f, int r) {
    if (f.degree() < 1) throw std::invalid_argument("bound: f must be nonconstant");
    if (r < 2) throw std::invalid_argument("bound: requires r >= 2");
}

}  // namespace

GeneralizedEigenResult min_generalized_eigenvalue(const Eigen::MatrixXd& A,
                                                  const Eigen::MatrixXd& B) {
    return solve_pencil(A, B, 0);
}

BoundResult schmudgen_bound(const ChebPoly& f, int r, bool extract_density) {
    check_bound_inputs(f, r);
    const int n = f.dimension();

    BoundResult out;
    out.r = r;
    std::map<Subset, GeneralizedEigenResult> solved;
    std::map<Subset, IndexSet> index_sets;
    const Subset total = Subset{1} << n;
    for (Subset subset = 0; subset < total; ++subset) {
        MomentPencil pencil = assemble_pencil(f, subset, r);
        if (pencil.empty()) continue;  // r < 2|I|
        solved[subset] = solve_pencil(pencil.A, pencil.B, subset);
        index_sets[subset] = std::move(pencil.indices);
        out.per_subset[subset] = solved[subset].lambda;
    }

    out.value = std::numeric_limits<double>::infinity();
    for (const auto& [subset, lambda] : out.per_subset) out.value = std::min(out.value, lambda);
    // Ties within 1e-12 go to the smallest bitmask.
    for (const auto& [subset, lambda] : out.per_subset) {
        if (lambda <= out.value + 1e-12) {
            out.winner = subset;
            break;
        }
    }

    out.eigvec = solved[out.winner].x;
    if (extract_density) {
        out.density = density_from_eigvec(index_sets[out.winner], out.eigvec, n);
        // x^T B x = 1 already makes the mass 1; renormalize exactly anyway.
        const double mass = out.density.coeff(MultiIndex::zero(n));  // <density, T_0> under mu
        out.density = out.density * (1.0 / mass);
    } else {
        out.density = ChebPoly(n);
    }
    return out;
}

BoundResult sos_lebesgue_bound(const ChebPoly& f, int r, bool extract_density) {
    check_bound_inputs(f, r);
    const int n = f.dimension();

    MomentPencil pencil = assemble_pencil_lebesgue(f, r);
    GeneralizedEigenResult solved = solve_pencil(pencil.A, pencil.B, 0);

    BoundResult out;
    out.r = r;
    out.per_subset[0] = solved.lambda;
    out.value = solved.lambda;
    out.winner = 0;
    out.eigvec = solved.x;
    if (extract_density) {
        out.density = density_from_eigvec(pencil.indices, solved.x, n);
        out.density = out.density * (1.0 / lebesgue_mass(out.density));
    } else {
        out.density = ChebPoly(n);
    }
    return out;
}

std::vector<DensitySample> density_eval_grid(const BoundResult& result, int points_per_dim) {
    if (points_per_dim < 2) throw std::invalid_argument("density_eval_grid: need >= 2 points");
    const int n = result.density.dimension();
    const std::size_t N = static_cast<std::size_t>(points_per_dim);
    std::vector<double> axis(N);
    for (std::size_t j = 0; j < N; ++j) {
        axis[j] = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(N - 1);
    }

    std::vector<DensitySample> samples;
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) count *= N;
    samples.reserve(count);

    std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
    std::vector<double> point(static_cast<std::size_t>(n));
    while (true) {
        // Odometer order: the last coordinate varies fastest.
        for (int i = 0; i < n; ++i) point[static_cast<std::size_t>(i)] = axis[odo[static_cast<std::size_t>(i)]];
        samples.push_back({point, result.density.eval(point)});
        int i = n - 1;
        for (; i >= 0; --i) {
            if (++odo[static_cast<std::size_t>(i)] < N) break;
            odo[static_cast<std::size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return samples;
}

}  // namespace boxbound
