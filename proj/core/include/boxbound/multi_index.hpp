#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace boxbound {

/// Exponent vector alpha in N^n, ordered graded-lexicographically.
///
/// The graded-lex order (total degree first, then entry-wise lexicographic)
/// is the canonical ordering used everywhere a deterministic enumeration is
/// required, in particular for moment-matrix rows and columns.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    MultiIndex(std::initializer_list<int> entries);

    static MultiIndex zero(int dimension);

    int dimension() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Sum of all entries.
    int total_degree() const;

    /// Number of nonzero entries.
    int support_size() const;

    /// Largest single entry (0 for the empty index).
    int max_entry() const;

    bool operator==(const MultiIndex& other) const { return entries_ == other.entries_; }
    bool operator!=(const MultiIndex& other) const { return !(*this == other); }
    bool operator<(const MultiIndex& other) const;

private:
    std::vector<int> entries_;
};

/// All beta in N^n with |beta| <= max_total_degree, in graded-lex order.
std::vector<MultiIndex> enumerate_indices(int dimension, int max_total_degree);

}  // namespace boxbound
