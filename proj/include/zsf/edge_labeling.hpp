#ifndef ZSF_EDGE_LABELING_HPP
#define ZSF_EDGE_LABELING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "zsf/errors.hpp"

namespace zsf {

// Unordered vertex pair, stored with a < b.
struct VertexPair {
    int a = 0;
    int b = 0;

    static VertexPair of(int x, int y) {
        if (x == y) throw InvalidEdgeError("self-loop " + std::to_string(x));
        return x < y ? VertexPair{x, y} : VertexPair{y, x};
    }

    auto operator<=>(const VertexPair&) const = default;
};

// A +/-1 labeling of the edges of K_n, one bit per edge (set bit = +1),
// in row-major upper-triangular order.  Treated as immutable once built;
// safe to share read-only across threads.
class EdgeLabeling {
public:
    explicit EdgeLabeling(int n) : n_(n) {
        if (n < 1) throw InvalidEdgeError("vertex count must be >= 1");
        bits_.assign((edge_count() + 63) / 64, 0);
    }

    static EdgeLabeling all_positive(int n) {
        EdgeLabeling labeling(n);
        for (auto& word : labeling.bits_) word = ~std::uint64_t{0};
        labeling.mask_tail();
        return labeling;
    }

    int n() const noexcept { return n_; }

    std::size_t edge_count() const noexcept {
        return static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    }

    // Index of {i,j}, i<j: row-major upper-triangular.
    static std::size_t edge_index(int i, int j, int n) {
        return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 +
               static_cast<std::size_t>(j - i - 1);
    }

    std::size_t edge_index(const VertexPair& e) const {
        check(e.a, e.b);
        return edge_index(e.a, e.b, n_);
    }

    int label(int i, int j) const {
        if (i > j) std::swap(i, j);
        check(i, j);
        const std::size_t idx = edge_index(i, j, n_);
        return (bits_[idx >> 6] >> (idx & 63)) & 1 ? +1 : -1;
    }

    int label(const VertexPair& e) const { return label(e.a, e.b); }

    void set_label(int i, int j, int value) {
        if (i > j) std::swap(i, j);
        check(i, j);
        const std::size_t idx = edge_index(i, j, n_);
        if (value > 0)
            bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        else
            bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
    }

    std::size_t positive_count() const;

    // Sum of all edge labels: 2*positive_count - edge_count.
    long long total_weight() const {
        return 2 * static_cast<long long>(positive_count()) -
               static_cast<long long>(edge_count());
    }

    bool zero_sum() const { return total_weight() == 0; }

    EdgeLabeling negated() const {
        EdgeLabeling flipped(*this);
        for (auto& word : flipped.bits_) word = ~word;
        flipped.mask_tail();
        return flipped;
    }

    bool operator==(const EdgeLabeling&) const = default;

private:
    void check(int i, int j) const {
        if (i < 0 || j >= n_ || i >= j)
            throw InvalidEdgeError("edge {" + std::to_string(i) + "," + std::to_string(j) +
                                   "} invalid for n=" + std::to_string(n_));
    }

    void mask_tail() {
        const std::size_t m = edge_count();
        if (m % 64 != 0 && !bits_.empty())
            bits_.back() &= (std::uint64_t{1} << (m % 64)) - 1;
    }

    int n_;
    std::vector<std::uint64_t> bits_;
};

} // namespace zsf

#endif
