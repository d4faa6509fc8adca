#include "boxbound/cheb_poly.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace boxbound {

double cheb_eval(int k, double x) {
    if (k < 0) throw std::invalid_argument("cheb_eval: k must be >= 0");
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int i = 1; i < k; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double chebu_eval(int k, double x) {
    if (k < -1) throw std::invalid_argument("chebu_eval: k must be >= -1");
    if (k == -1) return 0.0;
    if (k == 0) return 1.0;
    double prev = 1.0;
    double cur = 2.0 * x;
    for (int i = 1; i < k; ++i) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

using TermMap = std::map<MultiIndex, double>;

void accumulate(TermMap& map, const MultiIndex& alpha, double c) {
    auto [it, inserted] = map.emplace(alpha, c);
    if (!inserted) it->second += c;
}

void prune(TermMap& map) {
    for (auto it = map.begin(); it != map.end();) {
        if (std::abs(it->second) < ChebPoly::kCoeffDropTolerance) {
            it = map.erase(it);
        } else {
            ++it;
        }
    }
}

void check_dim(int dimension) {
    if (dimension < 1) throw std::invalid_argument("polynomial dimension must be >= 1");
}

// Per-coordinate T values up to the given degrees, for fast sparse evaluation.
std::vector<std::vector<double>> cheb_table(std::span<const double> x, int max_degree) {
    std::vector<std::vector<double>> t(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto& ti = t[i];
        ti.resize(static_cast<std::size_t>(max_degree) + 1);
        ti[0] = 1.0;
        if (max_degree >= 1) ti[1] = x[i];
        for (int k = 2; k <= max_degree; ++k) {
            ti[static_cast<std::size_t>(k)] =
                2.0 * x[i] * ti[static_cast<std::size_t>(k - 1)] - ti[static_cast<std::size_t>(k - 2)];
        }
    }
    return t;
}

}  // namespace

ChebPoly::ChebPoly(int dimension) : dimension_(dimension) { check_dim(dimension); }

ChebPoly ChebPoly::constant(int dimension, double value) {
    ChebPoly p(dimension);
    p.add_term(MultiIndex::zero(dimension), value);
    return p;
}

ChebPoly ChebPoly::basis(const MultiIndex& alpha, double coeff) {
    ChebPoly p(alpha.dimension());
    p.add_term(alpha, coeff);
    return p;
}

int ChebPoly::degree() const {
    // Graded-lex map: the last key has the maximal total degree.
    return terms_.empty() ? 0 : terms_.rbegin()->first.total_degree();
}

int ChebPoly::max_coordinate_degree() const {
    int m = 0;
    for (const auto& [alpha, c] : terms_) m = std::max(m, alpha.max_entry());
    return m;
}

double ChebPoly::coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? 0.0 : it->second;
}

ChebPoly& ChebPoly::add_term(const MultiIndex& alpha, double c) {
    if (alpha.dimension() != dimension_)
        throw std::invalid_argument("ChebPoly::add_term: index dimension mismatch");
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kCoeffDropTolerance) terms_.erase(it);
    return *this;
}

double ChebPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw std::invalid_argument("ChebPoly::eval: point dimension mismatch");
    if (terms_.empty()) return 0.0;
    const auto table = cheb_table(x, max_coordinate_degree());
    double sum = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double prod = c;
        for (int i = 0; i < dimension_; ++i) {
            prod *= table[static_cast<std::size_t>(i)][static_cast<std::size_t>(alpha[i])];
        }
        sum += prod;
    }
    return sum;
}

ChebPoly ChebPoly::operator+(const ChebPoly& other) const {
    if (dimension_ != other.dimension_)
        throw std::invalid_argument("ChebPoly: dimension mismatch in +");
    ChebPoly out(dimension_);
    out.terms_ = terms_;
    for (const auto& [alpha, c] : other.terms_) accumulate(out.terms_, alpha, c);
    prune(out.terms_);
    return out;
}

ChebPoly ChebPoly::operator-(const ChebPoly& other) const { return *this + other * -1.0; }

ChebPoly ChebPoly::operator*(double scale) const {
    ChebPoly out(dimension_);
    for (const auto& [alpha, c] : terms_) {
        const double v = c * scale;
        if (std::abs(v) >= kCoeffDropTolerance) out.terms_.emplace(alpha, v);
    }
    return out;
}

ChebPoly ChebPoly::operator*(const ChebPoly& other) const {
    if (dimension_ != other.dimension_)
        throw std::invalid_argument("ChebPoly: dimension mismatch in *");
    const int n = dimension_;
    ChebPoly out(n);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            // T_a T_b expands into 2^n summands, one per choice of
            // (a_i + b_i) versus |a_i - b_i| in each coordinate.
            const double base = ca * cb;
            const std::size_t combos = std::size_t{1} << n;
            for (std::size_t mask = 0; mask < combos; ++mask) {
                for (int i = 0; i < n; ++i) {
                    idx[static_cast<std::size_t>(i)] =
                        (mask >> i) & 1 ? std::abs(a[i] - b[i]) : a[i] + b[i];
                }
                accumulate(out.terms_, MultiIndex(idx), base * std::ldexp(1.0, -n));
            }
        }
    }
    prune(out.terms_);
    return out;
}

MonomialPoly::MonomialPoly(int dimension) : dimension_(dimension) { check_dim(dimension); }

MonomialPoly MonomialPoly::constant(int dimension, double value) {
    MonomialPoly p(dimension);
    p.add_term(MultiIndex::zero(dimension), value);
    return p;
}

MonomialPoly& MonomialPoly::add_term(const MultiIndex& alpha, double c) {
    if (alpha.dimension() != dimension_)
        throw std::invalid_argument("MonomialPoly::add_term: index dimension mismatch");
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < ChebPoly::kCoeffDropTolerance) terms_.erase(it);
    return *this;
}

double MonomialPoly::eval(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != dimension_)
        throw std::invalid_argument("MonomialPoly::eval: point dimension mismatch");
    double sum = 0.0;
    for (const auto& [alpha, c] : terms_) {
        double prod = c;
        for (int i = 0; i < dimension_; ++i) {
            for (int p = 0; p < alpha[i]; ++p) prod *= x[static_cast<std::size_t>(i)];
        }
        sum += prod;
    }
    return sum;
}

namespace {

// Coefficients of x^p in the T-basis, built by p applications of
// x T_k = (T_{k+1} + T_{|k-1|})/2. powers[p][k] is the T_k coefficient.
std::vector<std::vector<double>> power_expansions(int max_power) {
    std::vector<std::vector<double>> powers(static_cast<std::size_t>(max_power) + 1);
    powers[0] = {1.0};
    for (int p = 1; p <= max_power; ++p) {
        const auto& prev = powers[static_cast<std::size_t>(p - 1)];
        std::vector<double> next(static_cast<std::size_t>(p) + 1, 0.0);
        for (int k = 0; k < static_cast<int>(prev.size()); ++k) {
            const double c = prev[static_cast<std::size_t>(k)];
            if (c == 0.0) continue;
            next[static_cast<std::size_t>(k + 1)] += 0.5 * c;
            next[static_cast<std::size_t>(std::abs(k - 1))] += 0.5 * c;
        }
        powers[static_cast<std::size_t>(p)] = std::move(next);
    }
    return powers;
}

void tensor_expand(const MonomialPoly& p, const std::vector<std::vector<double>>& powers,
                   const MultiIndex& alpha, double coeff, int coord, std::vector<int>& idx,
                   double partial, ChebPoly& out) {
    const int n = p.dimension();
    if (coord == n) {
        out.add_term(MultiIndex(idx), coeff * partial);
        return;
    }
    const auto& expansion = powers[static_cast<std::size_t>(alpha[coord])];
    for (int k = 0; k < static_cast<int>(expansion.size()); ++k) {
        const double c = expansion[static_cast<std::size_t>(k)];
        if (c == 0.0) continue;
        idx[static_cast<std::size_t>(coord)] = k;
        tensor_expand(p, powers, alpha, coeff, coord + 1, idx, partial * c, out);
    }
}

}  // namespace

ChebPoly monomial_to_cheb(const MonomialPoly& p) {
    int max_power = 0;
    for (const auto& [alpha, c] : p.terms()) max_power = std::max(max_power, alpha.max_entry());
    const auto powers = power_expansions(max_power);
    ChebPoly out(p.dimension());
    std::vector<int> idx(static_cast<std::size_t>(p.dimension()), 0);
    for (const auto& [alpha, c] : p.terms()) {
        tensor_expand(p, powers, alpha, c, 0, idx, 1.0, out);
    }
    return out;
}

double inner_product_mu(const ChebPoly& f, const ChebPoly& g) {
    if (f.dimension() != g.dimension())
        throw std::invalid_argument("inner_product_mu: dimension mismatch");
    // Iterate the sparser side.
    const ChebPoly& small = f.term_count() <= g.term_count() ? f : g;
    const ChebPoly& large = f.term_count() <= g.term_count() ? g : f;
    double sum = 0.0;
    for (const auto& [alpha, c] : small.terms()) {
        const double other = large.coeff(alpha);
        if (other == 0.0) continue;
        sum += c * other * std::ldexp(1.0, -alpha.support_size());
    }
    return sum;
}

}  // namespace boxbound
