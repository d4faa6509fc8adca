#include "boxbound/moments.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace boxbound {

namespace {

inline double delta0(int v) { return v == 0 ? 1.0 : 0.0; }

void check_abc(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("triple product: indices must be >= 0");
}

}  // namespace

double triple_product_mu(int a, int b, int c) {
    check_abc(a, b, c);
    return 0.25 * (delta0(a + b + c) + delta0(a + b - c) + delta0(std::abs(a - b) + c) +
                   delta0(std::abs(a - b) - c));
}

double triple_product_mu_weighted(int a, int b, int c) {
    check_abc(a, b, c);
    const double plain = delta0(a + b + c) + delta0(a + b - c) + delta0(std::abs(a - b) + c) +
                         delta0(std::abs(a - b) - c);
    const double shifted = delta0(a + b + c - 2) + delta0(std::abs(a + b - c) - 2) +
                           delta0(std::abs(a - b) + c - 2) +
                           delta0(std::abs(std::abs(a - b) - c) - 2);
    return plain / 8.0 - shifted / 16.0;
}

double lebesgue_moment(int a) {
    if (a < 0) throw std::invalid_argument("lebesgue_moment: index must be >= 0");
    if (a % 2 == 1) return 0.0;
    return 2.0 / (1.0 - static_cast<double>(a) * a);
}

int subset_size(Subset subset) { return std::popcount(subset); }

IndexSet make_index_set(Subset subset, int r, int dimension) {
    if (dimension < 1) throw std::invalid_argument("make_index_set: dimension must be >= 1");
    if (subset >> dimension)
        throw std::invalid_argument("make_index_set: subset has bits beyond the dimension");
    IndexSet out;
    out.subset = subset;
    out.r = r;
    const int budget = r - 2 * subset_size(subset);
    if (budget >= 0) out.members = enumerate_indices(dimension, budget / 2);
    return out;
}

std::size_t index_set_cardinality(int dimension, int r, int subset_sz) {
    const int half = r / 2 - subset_sz;  // floor((r - 2|I|)/2) for integer r
    if (r < 2 * subset_sz || half < 0) return 0;
    // binom(n + half, n)
    std::size_t value = 1;
    for (int i = 1; i <= dimension; ++i) {
        value = value * static_cast<std::size_t>(half + i) / static_cast<std::size_t>(i);
    }
    return value;
}

namespace {

// One entry of the mu pencil: product over coordinates of the (weighted)
// closed-form triple product, summed over the support of f.
double pencil_entry_mu(const ChebPoly& f, Subset subset, const MultiIndex& beta,
                       const MultiIndex& gamma) {
    const int n = f.dimension();
    double sum = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        double prod = c;
        for (int i = 0; i < n && prod != 0.0; ++i) {
            prod *= (subset >> i) & 1 ? triple_product_mu_weighted(alpha[i], beta[i], gamma[i])
                                      : triple_product_mu(alpha[i], beta[i], gamma[i]);
        }
        sum += prod;
    }
    return sum;
}

// Lebesgue counterpart of a coordinate factor: integral of T_a T_b T_c dx
// via the same linearization, with Lebesgue moments in place of deltas.
double triple_product_lebesgue(int a, int b, int c) {
    return 0.25 * (lebesgue_moment(a + b + c) + lebesgue_moment(std::abs(a + b - c)) +
                   lebesgue_moment(std::abs(a - b) + c) +
                   lebesgue_moment(std::abs(std::abs(a - b) - c)));
}

double pencil_entry_lebesgue(const ChebPoly& f, const MultiIndex& beta, const MultiIndex& gamma) {
    const int n = f.dimension();
    double sum = 0.0;
    for (const auto& [alpha, c] : f.terms()) {
        double prod = c;
        for (int i = 0; i < n && prod != 0.0; ++i) {
            prod *= triple_product_lebesgue(alpha[i], beta[i], gamma[i]);
        }
        sum += prod;
    }
    return sum;
}

}  // namespace

MomentPencil assemble_pencil(const ChebPoly& f, Subset subset, int r) {
    MomentPencil out;
    out.subset = subset;
    out.indices = make_index_set(subset, r, f.dimension());
    const auto m = static_cast<Eigen::Index>(out.indices.size());
    out.A.resize(m, m);
    out.B.resize(m, m);
    if (m == 0) return out;

    const ChebPoly one = ChebPoly::constant(f.dimension(), 1.0);
    const auto& members = out.indices.members;
    for (Eigen::Index row = 0; row < m; ++row) {
        for (Eigen::Index col = row; col < m; ++col) {
            const auto& beta = members[static_cast<std::size_t>(row)];
            const auto& gamma = members[static_cast<std::size_t>(col)];
            const double a = pencil_entry_mu(f, subset, beta, gamma);
            const double b = pencil_entry_mu(one, subset, beta, gamma);
            out.A(row, col) = a;
            out.A(col, row) = a;
            out.B(row, col) = b;
            out.B(col, row) = b;
        }
    }
    return out;
}

MomentPencil assemble_pencil_lebesgue(const ChebPoly& f, int r) {
    if (r < 0) throw std::invalid_argument("assemble_pencil_lebesgue: r must be >= 0");
    MomentPencil out;
    out.subset = 0;
    out.indices = make_index_set(0, r, f.dimension());
    const auto m = static_cast<Eigen::Index>(out.indices.size());
    out.A.resize(m, m);
    out.B.resize(m, m);

    const ChebPoly one = ChebPoly::constant(f.dimension(), 1.0);
    const auto& members = out.indices.members;
    for (Eigen::Index row = 0; row < m; ++row) {
        for (Eigen::Index col = row; col < m; ++col) {
            const auto& beta = members[static_cast<std::size_t>(row)];
            const auto& gamma = members[static_cast<std::size_t>(col)];
            const double a = pencil_entry_lebesgue(f, beta, gamma);
            const double b = pencil_entry_lebesgue(one, beta, gamma);
            out.A(row, col) = a;
            out.A(col, row) = a;
            out.B(row, col) = b;
            out.B(col, row) = b;
        }
    }
    return out;
}

}  // namespace boxbound
