#include "boxbound/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boxbound {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("MultiIndex: entries must be nonnegative");
    }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int dimension) {
    if (dimension < 1) throw std::invalid_argument("MultiIndex: dimension must be >= 1");
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dimension), 0));
}

int MultiIndex::total_degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

int MultiIndex::support_size() const {
    return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                          [](int e) { return e != 0; }));
}

int MultiIndex::max_entry() const {
    if (entries_.empty()) return 0;
    return *std::max_element(entries_.begin(), entries_.end());
}

bool MultiIndex::operator<(const MultiIndex& other) const {
    const int da = total_degree();
    const int db = other.total_degree();
    if (da != db) return da < db;
    return entries_ < other.entries_;
}

namespace {

// All indices with the exact remaining total degree, lexicographic ascending.
void enumerate_fixed_degree(int dimension, int coord, int remaining, std::vector<int>& current,
                            std::vector<MultiIndex>& out) {
    if (coord == dimension - 1) {
        current[static_cast<std::size_t>(coord)] = remaining;
        out.emplace_back(current);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current[static_cast<std::size_t>(coord)] = e;
        enumerate_fixed_degree(dimension, coord + 1, remaining - e, current, out);
    }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(int dimension, int max_total_degree) {
    if (dimension < 1) throw std::invalid_argument("enumerate_indices: dimension must be >= 1");
    std::vector<MultiIndex> out;
    if (max_total_degree < 0) return out;
    std::vector<int> current(static_cast<std::size_t>(dimension), 0);
    for (int deg = 0; deg <= max_total_degree; ++deg) {
        enumerate_fixed_degree(dimension, 0, deg, current, out);
    }
    return out;
}

}  // namespace boxbound
