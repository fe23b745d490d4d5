#include "zsf/generators.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "zsf/rng.hpp"

namespace zsf {

EdgeLabeling from_positive_set(int n, std::span<const VertexPair> positive) {
    EdgeLabeling labeling(n);
    for (const auto& e : positive) {
        if (e.a < 0 || e.b >= n || e.a >= e.b)
            throw InvalidEdgeError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                   "} invalid for n=" + std::to_string(n));
        labeling.set_label(e.a, e.b, +1);
    }
    return labeling;
}

EdgeLabeling random_zero_sum(int n, std::uint64_t seed) {
    EdgeLabeling labeling(n);
    const std::size_t m = labeling.edge_count();
    if (m % 2 != 0)
        throw ParityError("n=" + std::to_string(n) + " has " + std::to_string(m) +
                          " edges (odd), no zero-sum labeling exists");

    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    Xoshiro256StarStar rng(seed);
    shuffle(order, rng);

    // First half of the shuffled edge list becomes positive.
    for (std::size_t t = 0; t < m / 2; ++t) {
        std::size_t idx = order[t];
        // invert row-major upper-triangular index
        int i = 0;
        std::size_t row_len = static_cast<std::size_t>(n - 1);
        while (idx >= row_len) {
            idx -= row_len;
            --row_len;
            ++i;
        }
        const int j = i + 1 + static_cast<int>(idx);
        labeling.set_label(i, j, +1);
    }
    return labeling;
}

EdgeLabeling construct_star_extremal_0mod4(int n) {
    if (n < 4 || n % 4 != 0)
        throw DivisibilityError("construction needs n = 0 mod 4, got n=" + std::to_string(n));
    const int half = n / 2;
    EdgeLabeling labeling(n);
    // positive edges: all u_i u_j, plus u_i v_j whenever i+j is even
    for (int i = 1; i <= half; ++i) {
        for (int j = i + 1; j <= half; ++j) labeling.set_label(i - 1, j - 1, +1);
        for (int j = 1; j <= half; ++j)
            if ((i + j) % 2 == 0) labeling.set_label(i - 1, half + j - 1, +1);
    }
    return labeling;
}

EdgeLabeling construct_star_extremal_1mod4(int n) {
    if (n < 5 || n % 4 != 1)
        throw DivisibilityError("construction needs n = 1 mod 4, got n=" + std::to_string(n));
    const int half = (n - 1) / 2; // even
    const int w = n - 1;
    EdgeLabeling labeling(n);
    for (int i = 1; i <= half; ++i) {
        // u_i u_j positive except the matching u_1u_2, u_3u_4, ...
        for (int j = i + 1; j <= half; ++j)
            if (!(j == i + 1 && i % 2 == 1)) labeling.set_label(i - 1, j - 1, +1);
        for (int j = 1; j <= half; ++j)
            if ((i + j) % 2 == 0) labeling.set_label(i - 1, half + j - 1, +1);
        labeling.set_label(i - 1, w, +1);                       // u_i w
        if (i % 2 == 0) labeling.set_label(half + i - 1, w, +1); // v_i w, i even
    }
    return labeling;
}

} // namespace zsf
